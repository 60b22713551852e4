#include "gadgets/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace localcert::detail {

VertexId Assembler::slot(bool present, char side, std::string role, int index,
                         std::optional<Point> pos) {
  VertexId id = next_++;
  if (!present) return 0;
  ids_.push_back(id);
  if (side == 'l' || side == 's') left_.push_back(id);
  if (side == 'r' || side == 's') right_.push_back(id);
  if (side == 's') shared_.push_back(id);
  roles_[id] = VertexRole{std::move(role), index};
  if (pos) points_[id] = *pos;
  return id;
}

void Assembler::edge(VertexId u, VertexId v) {
  if (u == 0 || v == 0) return;
  if (u > v) std::swap(u, v);
  edges_.insert({u, v});
}

GadgetInstance Assembler::finish(GadgetClass cls, int n, std::vector<int> a,
                                 std::vector<int> b, bool member,
                                 std::size_t id_bound,
                                 std::optional<GeometryModel> model,
                                 double tol) {
  GadgetInstance inst;
  inst.cls = cls;
  inst.n = n;
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.member = member;
  std::vector<Edge> edge_list(edges_.begin(), edges_.end());
  inst.graph = LabeledGraph::build(ids_, edge_list, id_bound);
  inst.left = left_;
  inst.right = right_;
  inst.shared = shared_;
  std::set<VertexId> closed;
  for (VertexId s : shared_) {
    closed.insert(s);
    for (VertexId u : inst.graph.neighbors(s)) closed.insert(u);
  }
  inst.shared_closed.assign(closed.begin(), closed.end());
  inst.roles = roles_;
  if (member && model) {
    Embedding e;
    e.points = points_;
    e.model = *model;
    e.tol = tol;
    inst.canonical = std::move(e);
  }
  return inst;
}

std::vector<int> checked_flags(std::vector<int> flags, int n,
                               const char* which) {
  std::sort(flags.begin(), flags.end());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] < 1 || flags[i] > n)
      fail(ErrorCode::kBadIndex, std::string(which) + " flag out of range: " +
                                     std::to_string(flags[i]));
    if (i > 0 && flags[i] == flags[i - 1])
      fail(ErrorCode::kBadIndex, std::string(which) + " flag repeated: " +
                                     std::to_string(flags[i]));
  }
  return flags;
}

bool has_flag(const std::vector<int>& flags, int i) {
  return std::binary_search(flags.begin(), flags.end(), i);
}

bool disjoint_flags(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i : a)
    if (has_flag(b, i)) return false;
  return true;
}

void check_frontier_match(const GadgetInstance& inst,
                          const GadgetInstance& base) {
  if (inst.shared != base.shared || inst.shared_closed != base.shared_closed)
    throw std::logic_error("separator neighborhood drifted with flags");
  auto induced = [](const GadgetInstance& g) {
    std::set<std::pair<VertexId, VertexId>> es;
    for (VertexId u : g.shared_closed) {
      for (VertexId v : g.graph.neighbors(u)) {
        if (v > u && std::binary_search(g.shared_closed.begin(),
                                        g.shared_closed.end(), v))
          es.insert({u, v});
      }
    }
    return es;
  };
  if (induced(inst) != induced(base))
    throw std::logic_error("separator-induced edges drifted with flags");
}

}  // namespace localcert::detail
