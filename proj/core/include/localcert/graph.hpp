#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "localcert/common.hpp"

namespace localcert {

using Edge = std::pair<VertexId, VertexId>;

// What a vertex sees of the graph: itself, its neighbor ids, and (when the
// verifier is allowed to look) the edges among its closed neighborhood.
struct VertexView {
  VertexId center = 0;
  std::vector<VertexId> neighbors;      // sorted
  std::vector<Edge> induced_edges;      // within N[center], smaller id first, sorted
};

// Immutable simple graph over arbitrary 64-bit vertex ids.  `id_bound` is an
// exclusive upper bound on ids; provers may spend log2(id_bound) bits per id.
class LabeledGraph {
 public:
  static LabeledGraph build(std::vector<VertexId> ids, std::vector<Edge> edges,
                            VertexId id_bound);

  const std::vector<VertexId>& vertices() const { return ids_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  VertexId id_bound() const { return id_bound_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  VertexView closed_neighborhood(VertexId v) const;

  bool connected() const;
  // BFS hop distance; nullopt when unreachable.
  std::optional<std::size_t> distance(VertexId from, VertexId to) const;

  // Sorted edge list, smaller endpoint first.
  std::vector<Edge> edges() const;

 private:
  std::size_t index_of(VertexId v) const;

  std::vector<VertexId> ids_;                  // sorted
  std::vector<std::vector<VertexId>> adj_;     // parallel to ids_, each sorted
  std::size_t edge_count_ = 0;
  VertexId id_bound_ = 0;
};

}  // namespace localcert
