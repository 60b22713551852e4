#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "localcert/attack.hpp"

namespace localcert {
namespace {

std::vector<int> mask_to_set(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

std::vector<int> complement(const std::vector<int>& a, int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) out.push_back(i);
  return out;
}

const BitString& cert_of(const Proof& p, VertexId v) {
  auto it = p.certs.find(v);
  if (it == p.certs.end())
    fail(ErrorCode::kMissingCertificate, "prover left vertex " +
                                             std::to_string(v) + " blank");
  return it->second;
}

BitString frontier_bits(const GadgetInstance& inst, const Proof& proof) {
  BitString out;
  for (VertexId v : inst.shared_closed) out.append(cert_of(proof, v));
  return out;
}

LocalInput local_input(const LabeledGraph& g, const Proof& p, VertexId v,
                       VerifierMode mode) {
  LocalInput in;
  in.view = g.closed_neighborhood(v);
  if (mode == VerifierMode::kCertificateOnly) in.view.induced_edges.clear();
  in.own_cert = cert_of(p, v);
  for (VertexId u : in.view.neighbors) in.neighbor_certs[u] = cert_of(p, u);
  in.id_bound = g.id_bound();
  return in;
}

bool same_input(const LocalInput& x, const LocalInput& y) {
  return x.view.center == y.view.center &&
         x.view.neighbors == y.view.neighbors &&
         x.view.induced_edges == y.view.induced_edges &&
         x.own_cert == y.own_cert && x.neighbor_certs == y.neighbor_certs &&
         x.id_bound == y.id_bound;
}

}  // namespace

int flag_universe(GadgetClass cls, int n) {
  switch (cls) {
    case GadgetClass::kUnitDiskCorridor:
      return n >= 12 ? (n - 8) / 4 : 0;
    default:
      return n;
  }
}

FrontierTable build_table(GadgetClass cls, int n, const Scheme& scheme,
                          unsigned jobs) {
  int universe = flag_universe(cls, n);
  if (universe > 16)
    fail(ErrorCode::kInfeasibleParameters,
         "table has 2^N rows; refusing N > 16");
  const std::uint32_t count = 1u << universe;

  std::vector<std::pair<std::vector<int>, BitString>> rows(count);
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto work = [&](std::uint32_t begin, std::uint32_t step) {
    for (std::uint32_t mask = begin; mask < count; mask += step) {
      try {
        auto a = mask_to_set(mask);
        auto inst = gadget(cls, n, a, complement(a, universe));
        auto proof = scheme.prover(inst.graph);
        rows[mask] = {std::move(a), frontier_bits(inst, proof)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (jobs <= 1 || count < 4) {
    work(0, 1);
  } else {
    unsigned used = std::min<std::uint32_t>(jobs, count);
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < used; ++j) pool.emplace_back(work, j, used);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  FrontierTable table;
  table.frontier_size =
      gadget(cls, n, {}, complement({}, universe)).shared_closed.size();
  for (auto& [key, bits] : rows) {
    table.max_bits = std::max(table.max_bits, bits.size());
    table.rows.emplace(std::move(key), std::move(bits));
  }
  return table;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_collision(
    const FrontierTable& table) {
  // group rows by bits; the winning pair is the group whose first key is
  // smallest, paired with that group's second key
  std::map<BitString, std::vector<const std::vector<int>*>> by_bits;
  for (auto& [key, bits] : table.rows) by_bits[bits].push_back(&key);
  const std::vector<const std::vector<int>*>* best = nullptr;
  for (auto& [bits, keys] : by_bits) {
    if (keys.size() < 2) continue;
    if (!best || *keys[0] < *(*best)[0]) best = &keys;
  }
  if (!best) return std::nullopt;
  return std::make_pair(*(*best)[0], *(*best)[1]);
}

FoolingWitness splice_and_verify(GadgetClass cls, int n, const Scheme& scheme,
                                 const std::vector<int>& a,
                                 const std::vector<int>& b, unsigned jobs) {
  if (a == b) fail(ErrorCode::kBadIndex, "need two distinct flag sets");
  int universe = flag_universe(cls, n);
  auto ga = gadget(cls, n, a, complement(a, universe));
  auto gb = gadget(cls, n, b, complement(b, universe));
  Proof pa = scheme.prover(ga.graph);
  Proof pb = scheme.prover(gb.graph);
  // per-vertex agreement is what the splice leans on; equal concatenations
  // could still hide a boundary shift
  for (VertexId v : ga.shared_closed)
    if (cert_of(pa, v) != cert_of(pb, v))
      fail(ErrorCode::kSpliceMismatch,
           "frontier certificates disagree at vertex " + std::to_string(v));

  // pick the direction whose left set meets the other right side
  bool left_is_a = !std::includes(b.begin(), b.end(), a.begin(), a.end());
  const std::vector<int>& left_set = left_is_a ? a : b;
  const std::vector<int>& right_source = left_is_a ? b : a;
  const GadgetInstance& il = left_is_a ? ga : gb;
  const GadgetInstance& ir = left_is_a ? gb : ga;
  const Proof& pl = left_is_a ? pa : pb;
  const Proof& pr = left_is_a ? pb : pa;

  FoolingWitness w;
  w.set_a = a;
  w.set_b = b;
  w.left_is_a = left_is_a;
  w.spliced = gadget(cls, n, left_set, complement(right_source, universe));
  if (w.spliced.member)
    fail(ErrorCode::kSpliceMismatch, "splice produced a member");

  for (VertexId v : w.spliced.left) w.proof.certs[v] = cert_of(pl, v);
  for (VertexId v : w.spliced.right) w.proof.certs.emplace(v, cert_of(pr, v));

  // every local input must be byte-identical to the one from the honest run
  // that donated it; the separator belongs to both and is checked twice
  for (VertexId v : w.spliced.left)
    if (!same_input(local_input(w.spliced.graph, w.proof, v, scheme.mode),
                    local_input(il.graph, pl, v, scheme.mode)))
      fail(ErrorCode::kSpliceMismatch,
           "left view differs at vertex " + std::to_string(v));
  for (VertexId v : w.spliced.right)
    if (!same_input(local_input(w.spliced.graph, w.proof, v, scheme.mode),
                    local_input(ir.graph, pr, v, scheme.mode)))
      fail(ErrorCode::kSpliceMismatch,
           "right view differs at vertex " + std::to_string(v));

  w.verdict = run_verifier(w.spliced.graph, w.proof, scheme, jobs);
  if (!w.verdict.all_accept)
    fail(ErrorCode::kUnexpectedRejection,
         "verifier rejected a spliced vertex; it must be reading something "
         "outside its view");
  return w;
}

AttackOutcome run_attack(GadgetClass cls, int n, const Scheme& scheme,
                         unsigned jobs) {
  auto table = build_table(cls, n, scheme, jobs);
  AttackOutcome out;
  out.universe = static_cast<std::size_t>(flag_universe(cls, n));
  out.frontier_size = table.frontier_size;
  out.max_row_bits = table.max_bits;
  if (auto hit = find_collision(table))
    out.witness =
        splice_and_verify(cls, n, scheme, hit->first, hit->second, jobs);
  return out;
}

Scheme demo_scheme(int p) {
  if (p < 0 || p > 64) fail(ErrorCode::kBadIndex, "slice width must be 0..64");
  Scheme s;
  s.name = "demo:p=" + std::to_string(p);
  s.mode = VerifierMode::kCertificateOnly;
  s.prover = [p](const LabeledGraph& g) {
    std::uint64_t fp = 14695981039346656037ull;  // FNV-1a over the encoding
    auto eat = [&fp](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        fp ^= (x >> (8 * i)) & 0xff;
        fp *= 1099511628211ull;
      }
    };
    eat(g.id_bound());
    for (VertexId v : g.vertices()) eat(v);
    for (auto [u, v] : g.edges()) {
      eat(u);
      eat(v);
    }
    BitString cert;
    if (p > 0) cert.append_bits(fp >> (64 - p), static_cast<unsigned>(p));
    Proof proof;
    for (VertexId v : g.vertices()) proof.certs[v] = cert;
    return proof;
  };
  s.verifier = [](const LocalInput& in) {
    for (auto& [u, cert] : in.neighbor_certs) {
      (void)u;
      if (cert != in.own_cert) return false;
    }
    return true;
  };
  s.claimed_bits = [p](std::size_t, VertexId) {
    return static_cast<std::size_t>(p);
  };
  return s;
}

}  // namespace localcert
