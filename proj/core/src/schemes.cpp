#include "localcert/schemes.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace localcert {

namespace {

// Forged certificates may claim absurd sizes; decoding stays linear only if
// we refuse them.  Honest instances sit far below this.
constexpr std::uint64_t kMaxCopySize = 100000;

bool in_neighbors(const std::vector<VertexId>& neighbors, VertexId u) {
  return std::binary_search(neighbors.begin(), neighbors.end(), u);
}

// Shared tree-certificate logic: root agreement, the parent rule, and the
// subtree count equation.  `nbr` is aligned with `neighbors`.
bool tree_ok(VertexId center, const std::vector<VertexId>& neighbors,
             const TreeCert& own, const std::vector<TreeCert>& nbr) {
  if (own.subtree_count == 0) return false;
  std::uint64_t child_sum = 0;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (nbr[i].root_id != own.root_id) return false;
    if (nbr[i].parent_id == center) {
      if (child_sum > std::numeric_limits<std::uint64_t>::max() -
                          nbr[i].subtree_count)
        return false;
      child_sum += nbr[i].subtree_count;
    }
  }
  if (own.parent_id == 0) {
    if (center != own.root_id) return false;
  } else if (!in_neighbors(neighbors, own.parent_id)) {
    return false;
  }
  return own.subtree_count == 1 + child_sum;
}

struct BfsTree {
  std::vector<VertexId> order;             // BFS visit order
  std::map<VertexId, VertexId> parent;     // absent for the root
  std::map<VertexId, std::uint64_t> count;
};

BfsTree bfs_tree(const LabeledGraph& g, VertexId root) {
  BfsTree t;
  std::deque<VertexId> queue{root};
  std::map<VertexId, bool> seen{{root, true}};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (VertexId u : g.neighbors(v)) {  // ascending, so ties go to low ids
      if (seen[u]) continue;
      seen[u] = true;
      t.parent[u] = v;
      queue.push_back(u);
    }
  }
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    t.count[*it] += 1;
    auto p = t.parent.find(*it);
    if (p != t.parent.end()) t.count[p->second] += t.count[*it];
  }
  return t;
}

Proof assemble_tiny(const LabeledGraph& g, const LabeledGraph& copy,
                    const std::map<VertexId, VertexId>& to_copy) {
  VertexId root = g.vertices().front();
  BfsTree t = bfs_tree(g, root);
  Proof out;
  for (VertexId v : g.vertices()) {
    TinyCert c;
    c.n = copy.vertex_count();
    c.copy_edges = copy.edges();
    c.pi_v = to_copy.at(v);
    auto p = t.parent.find(v);
    c.tree = {root, p == t.parent.end() ? 0 : p->second, t.count.at(v)};
    out.certs[v] = encode_tiny_cert(c);
  }
  return out;
}

LabeledGraph path_copy(std::uint64_t n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{1});
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return LabeledGraph::build(ids, edges, n + 1);
}

std::map<VertexId, VertexId> id_rank_map(const LabeledGraph& g) {
  std::map<VertexId, VertexId> m;
  VertexId next = 1;
  for (VertexId v : g.vertices()) m[v] = next++;
  return m;
}

}  // namespace

BitString encode_tree_cert(const TreeCert& c) {
  BitString b;
  b.append_varint(c.root_id);
  b.append_varint(c.parent_id);
  b.append_varint(c.subtree_count);
  return b;
}

std::optional<TreeCert> decode_tree_cert(const BitString& bits) {
  try {
    BitReader r(bits);
    TreeCert c;
    c.root_id = r.read_varint();
    c.parent_id = r.read_varint();
    c.subtree_count = r.read_varint();
    if (!r.exhausted()) return std::nullopt;
    return c;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Proof st_prove(const LabeledGraph& g, VertexId root) {
  if (!g.has_vertex(root))
    fail(ErrorCode::kUnknownVertex, "spanning tree root is not in the graph");
  BfsTree t = bfs_tree(g, root);
  Proof out;
  for (VertexId v : g.vertices()) {
    auto p = t.parent.find(v);
    out.certs[v] = encode_tree_cert(
        {root, p == t.parent.end() ? 0 : p->second, t.count.at(v)});
  }
  return out;
}

bool st_verify(const LocalInput& input) {
  auto own = decode_tree_cert(input.own_cert);
  if (!own) return false;
  std::vector<TreeCert> nbr;
  for (VertexId u : input.view.neighbors) {
    auto it = input.neighbor_certs.find(u);
    if (it == input.neighbor_certs.end()) return false;
    auto c = decode_tree_cert(it->second);
    if (!c) return false;
    nbr.push_back(*c);
  }
  return tree_ok(input.view.center, input.view.neighbors, *own, nbr);
}

Scheme spanning_tree_scheme() {
  Scheme s;
  s.name = "spanning-tree";
  s.mode = VerifierMode::kCertificateOnly;
  s.prover = [](const LabeledGraph& g) {
    return st_prove(g, g.vertices().front());
  };
  s.verifier = st_verify;
  s.claimed_bits = [](std::size_t n, VertexId id_bound) {
    return 2 * varint_bits(id_bound == 0 ? 0 : id_bound - 1) + varint_bits(n);
  };
  s.structured_forgeries = [](const LabeledGraph& g, std::uint64_t,
                              std::size_t max_count) {
    std::vector<Proof> out;
    Proof honest = st_prove(g, g.vertices().front());
    Proof fake_root, shifted;
    for (VertexId v : g.vertices()) {
      TreeCert c = *decode_tree_cert(honest.certs.at(v));
      c.root_id = g.id_bound();  // a root living outside the graph
      fake_root.certs[v] = encode_tree_cert(c);
      c = *decode_tree_cert(honest.certs.at(v));
      c.subtree_count += 1;
      shifted.certs[v] = encode_tree_cert(c);
    }
    out.push_back(std::move(fake_root));
    if (g.vertex_count() >= 2) {  // everyone claims to be the root
      Proof p;
      for (VertexId v : g.vertices())
        p.certs[v] = encode_tree_cert({v, 0, 1});
      out.push_back(std::move(p));
    }
    out.push_back(std::move(shifted));
    if (out.size() > max_count) out.resize(max_count);
    return out;
  };
  return s;
}

Catalog toy_catalog() {
  return {"paths-and-cycles", [](const LabeledGraph& g) {
            std::size_t ends = 0;
            for (VertexId v : g.vertices()) {
              std::size_t d = g.degree(v);
              if (d > 2) return false;
              if (d <= 1) ++ends;
            }
            // connected with max degree 2: a path (two ends, or one lone
            // vertex) or a cycle (none)
            return ends == 2 || ends == 0 || g.vertex_count() == 1;
          }};
}

Catalog connected_catalog() {
  return {"connected", [](const LabeledGraph&) { return true; }};
}

CanonicalCopy canonical_copy(const LabeledGraph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<VertexId, VertexId> to_copy;
  if (n <= 10) {
    std::map<VertexId, std::size_t> rank;
    for (std::size_t i = 0; i < n; ++i) rank[vs[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> idx_edges;
    for (auto [u, v] : g.edges())
      idx_edges.push_back({rank[u], rank[v]});
    auto pair_bit = [n](std::size_t i, std::size_t j) {
      if (i > j) std::swap(i, j);
      return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    std::vector<std::size_t> perm(n), best(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    best = perm;
    std::uint64_t best_mask = ~std::uint64_t{0};
    do {
      std::uint64_t mask = 0;
      for (auto [a, b] : idx_edges)
        mask |= std::uint64_t{1} << pair_bit(perm[a], perm[b]);
      if (mask < best_mask) {
        best_mask = mask;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < n; ++i) to_copy[vs[i]] = best[i] + 1;
  } else {
    to_copy = id_rank_map(g);
  }
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{1});
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    VertexId a = to_copy[u], b = to_copy[v];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  return {LabeledGraph::build(ids, edges, n + 1), std::move(to_copy)};
}

BitString encode_edge_list(const LabeledGraph& copy) {
  BitString b;
  auto edges = copy.edges();
  b.append_varint(edges.size());
  for (auto [u, v] : edges) {
    b.append_varint(u);
    b.append_varint(v);
  }
  return b;
}

std::optional<std::vector<Edge>> decode_edge_list(BitReader& r,
                                                  std::uint64_t n) {
  if (n == 0 || n > kMaxCopySize) return std::nullopt;
  std::uint64_t m = r.read_varint();
  if (m > n * (n - 1) / 2) return std::nullopt;
  std::vector<Edge> edges;
  Edge prev{0, 0};
  for (std::uint64_t i = 0; i < m; ++i) {
    Edge e{r.read_varint(), r.read_varint()};
    if (e.first == 0 || e.first >= e.second || e.second > n)
      return std::nullopt;
    if (i > 0 && !(prev < e)) return std::nullopt;  // canonical order only
    edges.push_back(e);
    prev = e;
  }
  return edges;
}

BitString encode_tiny_cert(const TinyCert& c) {
  BitString b;
  b.append_varint(c.n);
  b.append_varint(c.copy_edges.size());
  for (auto [u, v] : c.copy_edges) {
    b.append_varint(u);
    b.append_varint(v);
  }
  b.append_varint(c.pi_v);
  b.append_varint(c.tree.root_id);
  b.append_varint(c.tree.parent_id);
  b.append_varint(c.tree.subtree_count);
  return b;
}

std::optional<TinyCert> decode_tiny_cert(const BitString& bits) {
  try {
    BitReader r(bits);
    TinyCert c;
    c.n = r.read_varint();
    auto edges = decode_edge_list(r, c.n);
    if (!edges) return std::nullopt;
    c.copy_edges = std::move(*edges);
    c.pi_v = r.read_varint();
    if (c.pi_v == 0 || c.pi_v > c.n) return std::nullopt;
    c.tree.root_id = r.read_varint();
    c.tree.parent_id = r.read_varint();
    c.tree.subtree_count = r.read_varint();
    if (!r.exhausted()) return std::nullopt;
    return c;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Proof tiny_prove(const LabeledGraph& g, const Catalog& catalog) {
  if (!catalog.contains(g))
    fail(ErrorCode::kNotMember, "graph is not in catalog " + catalog.name);
  CanonicalCopy c = canonical_copy(g);
  return assemble_tiny(g, c.graph, c.to_copy);
}

bool tiny_verify(const LocalInput& input, const Catalog& catalog) {
  auto own = decode_tiny_cert(input.own_cert);
  if (!own) return false;
  std::vector<TreeCert> nbr_tree;
  std::vector<VertexId> nbr_pi;
  for (VertexId u : input.view.neighbors) {
    auto it = input.neighbor_certs.find(u);
    if (it == input.neighbor_certs.end()) return false;
    auto c = decode_tiny_cert(it->second);
    if (!c) return false;
    if (c->n != own->n || c->copy_edges != own->copy_edges) return false;
    nbr_tree.push_back(c->tree);
    nbr_pi.push_back(c->pi_v);
  }
  if (!tree_ok(input.view.center, input.view.neighbors, own->tree, nbr_tree))
    return false;
  std::optional<LabeledGraph> copy;
  try {
    std::vector<VertexId> ids(own->n);
    std::iota(ids.begin(), ids.end(), VertexId{1});
    copy = LabeledGraph::build(ids, own->copy_edges, own->n + 1);
  } catch (const Error&) {
    return false;  // disconnected or otherwise unusable copy
  }
  if (!catalog.contains(*copy)) return false;
  if (input.view.center == own->tree.root_id &&
      own->tree.subtree_count != own->n)
    return false;
  // pi must map N(v) bijectively onto the copy neighborhood of pi(v)
  std::sort(nbr_pi.begin(), nbr_pi.end());
  if (std::adjacent_find(nbr_pi.begin(), nbr_pi.end()) != nbr_pi.end())
    return false;
  return nbr_pi == copy->neighbors(own->pi_v);
}

Scheme tiny_scheme(Catalog catalog) {
  Scheme s;
  s.name = "tiny:" + catalog.name;
  s.mode = VerifierMode::kCertificateOnly;
  s.prover = [catalog](const LabeledGraph& g) { return tiny_prove(g, catalog); };
  s.verifier = [catalog](const LocalInput& input) {
    return tiny_verify(input, catalog);
  };
  s.claimed_bits = [](std::size_t n, VertexId id_bound) {
    std::size_t w = varint_bits(n * (n - 1) / 2) + n * (n - 1) * varint_bits(n);
    return varint_bits(n) + w + varint_bits(n) +
           2 * varint_bits(id_bound == 0 ? 0 : id_bound - 1) + varint_bits(n);
  };
  s.structured_forgeries = [](const LabeledGraph& g, std::uint64_t,
                              std::size_t max_count) {
    std::vector<Proof> out;
    // describe the graph as itself: dies on catalog membership of the copy
    CanonicalCopy self = canonical_copy(g);
    out.push_back(assemble_tiny(g, self.graph, self.to_copy));
    // claim the graph is a path: dies on the local bijection check
    out.push_back(
        assemble_tiny(g, path_copy(g.vertex_count()), id_rank_map(g)));
    if (out.size() > max_count) out.resize(max_count);
    return out;
  };
  return s;
}

}  // namespace localcert
