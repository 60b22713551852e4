#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {

PropGraph prop_graph(int n) {
  if (n < 1) fail(ErrorCode::kBadIndex, "need at least one cell");

  // Staircase: each cell drops the spine just over a unit and drifts east a
  // fifth, so spine neighbors stay non-adjacent while both cell sides reach
  // them.  The side pair straddles the cell midpoint wider than a unit.
  constexpr double kDy = 1.03, kDx = 0.2, kSide = 0.525;

  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  Embedding emb;
  emb.model = GeometryModel::kUnitSquare;
  VertexId next = 1;
  auto put = [&](double x, double y) {
    ids.push_back(next);
    emb.points[next] = {x, y};
    return next++;
  };

  PropGraph out;
  for (int t = 0; t <= n; ++t) out.spine.push_back(put(t * kDx, -t * kDy));
  for (int t = 0; t < n; ++t) {
    double mx = (t + 0.5) * kDx, my = -(t + 0.5) * kDy;
    VertexId east = put(mx + kSide, my);
    VertexId west = put(mx - kSide, my);
    edges.push_back({out.spine[t], east});
    edges.push_back({east, out.spine[t + 1]});
    edges.push_back({out.spine[t], west});
    edges.push_back({west, out.spine[t + 1]});
  }

  std::size_t v = ids.size();
  out.graph = LabeledGraph::build(std::move(ids), std::move(edges),
                                  static_cast<VertexId>(v * v * v));
  out.canonical = std::move(emb);
  return out;
}

}  // namespace localcert
