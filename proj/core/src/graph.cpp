#include "localcert/graph.hpp"

#include <algorithm>
#include <queue>

namespace localcert {

LabeledGraph LabeledGraph::build(std::vector<VertexId> ids, std::vector<Edge> edges,
                                 VertexId id_bound) {
  LabeledGraph g;
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1])
      fail(ErrorCode::kDuplicateId, "duplicate vertex id " + std::to_string(ids[i]));
  for (VertexId v : ids) {
    if (v == 0) fail(ErrorCode::kBadIndex, "vertex ids are positive (0 is the nil parent)");
    if (v >= id_bound)
      fail(ErrorCode::kBadIndex,
           "vertex id " + std::to_string(v) + " >= id bound " + std::to_string(id_bound));
  }
  g.ids_ = std::move(ids);
  g.id_bound_ = id_bound;
  g.adj_.resize(g.ids_.size());

  for (auto [u, v] : edges) {
    if (u == v) fail(ErrorCode::kSelfLoop, "self loop at " + std::to_string(u));
    if (!g.has_vertex(u))
      fail(ErrorCode::kUnknownEndpoint, "edge endpoint " + std::to_string(u) + " not a vertex");
    if (!g.has_vertex(v))
      fail(ErrorCode::kUnknownEndpoint, "edge endpoint " + std::to_string(v) + " not a vertex");
    g.adj_[g.index_of(u)].push_back(v);
    g.adj_[g.index_of(v)].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  if (!g.connected()) fail(ErrorCode::kDisconnected, "graph is not connected");
  return g;
}

bool LabeledGraph::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t LabeledGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v)
    fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

bool LabeledGraph::has_edge(VertexId u, VertexId v) const {
  const auto& nbrs = adj_[index_of(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<VertexId>& LabeledGraph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

VertexView LabeledGraph::closed_neighborhood(VertexId v) const {
  VertexView view;
  view.center = v;
  view.neighbors = neighbors(v);
  std::vector<VertexId> closed = view.neighbors;
  closed.push_back(v);
  std::sort(closed.begin(), closed.end());
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = i + 1; j < closed.size(); ++j)
      if (has_edge(closed[i], closed[j]))
        view.induced_edges.emplace_back(closed[i], closed[j]);
  return view;
}

bool LabeledGraph::connected() const {
  if (ids_.empty()) return true;
  std::vector<char> seen(ids_.size(), 0);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop();
    for (VertexId w : adj_[i]) {
      std::size_t j = index_of(w);
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        queue.push(j);
      }
    }
  }
  return reached == ids_.size();
}

std::optional<std::size_t> LabeledGraph::distance(VertexId from, VertexId to) const {
  std::size_t src = index_of(from), dst = index_of(to);
  std::vector<std::size_t> dist(ids_.size(), static_cast<std::size_t>(-1));
  std::queue<std::size_t> queue;
  dist[src] = 0;
  queue.push(src);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop();
    if (i == dst) return dist[i];
    for (VertexId w : adj_[i]) {
      std::size_t j = index_of(w);
      if (dist[j] == static_cast<std::size_t>(-1)) {
        dist[j] = dist[i] + 1;
        queue.push(j);
      }
    }
  }
  return std::nullopt;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (VertexId w : adj_[i])
      if (ids_[i] < w) out.emplace_back(ids_[i], w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace localcert
