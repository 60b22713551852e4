#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localcert/bits.hpp"
#include "localcert/certify.hpp"
#include "localcert/graph.hpp"

namespace localcert {

// Spanning-tree certification.  Wire layout per vertex:
//   [root_id: varint][parent_id: varint, 0 = none][subtree_count: varint]
// Subtree counts rule out parent cycles (a cycle would have to keep
// increasing), so root agreement plus the local count equation pins down a
// single rooted tree reaching every vertex.
struct TreeCert {
  VertexId root_id = 0;
  VertexId parent_id = 0;  // 0 = none; vertex ids are positive
  std::uint64_t subtree_count = 0;
};

BitString encode_tree_cert(const TreeCert& c);
// nullopt on truncation or trailing bits
std::optional<TreeCert> decode_tree_cert(const BitString& bits);

// BFS tree from `root`, neighbors visited in ascending id order.
Proof st_prove(const LabeledGraph& g, VertexId root);
bool st_verify(const LocalInput& input);
Scheme spanning_tree_scheme();

// A catalog is a decidable graph class: a membership oracle plus a name.
// Membership must be invariant under relabeling.
struct Catalog {
  std::string name;
  std::function<bool(const LabeledGraph&)> contains;
};

Catalog toy_catalog();        // paths and cycles
Catalog connected_catalog();  // no restriction beyond connectivity

// Isomorphic copy of g on vertex set 1..n.  For n <= 10 the copy minimizes
// the adjacency matrix over all relabelings, so isomorphic inputs produce
// equal copies.  Beyond that we fall back to id-rank relabeling:
// deterministic and stable for our builders, but not isomorphism-invariant.
struct CanonicalCopy {
  LabeledGraph graph;                    // vertices 1..n
  std::map<VertexId, VertexId> to_copy;  // original id -> 1..n
};
CanonicalCopy canonical_copy(const LabeledGraph& g);

// Length-prefixed edge list over vertex labels 1..n:
//   [m: varint][u_1 v_1 ... u_m v_m: varints]
// with u < v and pairs strictly increasing, so equal graphs give equal bytes.
BitString encode_edge_list(const LabeledGraph& copy);
// nullopt on truncation, out-of-range endpoints, or non-canonical order
std::optional<std::vector<Edge>> decode_edge_list(BitReader& r, std::uint64_t n);

// Catalog-membership certificate.  Wire layout:
//   [n: varint][w: edge list as above][pi_v: varint]
//   [root_id: varint][parent_id: varint][subtree_count: varint]
// Every vertex carries the same (n, w); pi_v is its image in the copy.
struct TinyCert {
  std::uint64_t n = 0;
  std::vector<Edge> copy_edges;  // decoded w, canonical order
  VertexId pi_v = 0;
  TreeCert tree;
};

BitString encode_tiny_cert(const TinyCert& c);
std::optional<TinyCert> decode_tiny_cert(const BitString& bits);

// Throws kNotMember when the catalog rejects g.
Proof tiny_prove(const LabeledGraph& g, const Catalog& catalog);
// Accepts iff (a) n and w match every neighbor, (b) the tree cert checks
// pass, (c) the root sees subtree_count == n, (d) pi maps N(v) bijectively
// onto N(pi(v)) in the decoded copy, and (e) the decoded copy is in the
// catalog.  (e) is needed because w is an explicit graph encoding rather
// than an index into a class enumeration.
bool tiny_verify(const LocalInput& input, const Catalog& catalog);
Scheme tiny_scheme(Catalog catalog);

}  // namespace localcert
