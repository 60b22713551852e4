#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {
namespace {

using Site = std::pair<long long, long long>;

struct LatticeSearch {
  const LabeledGraph& g;
  std::vector<VertexId> order;  // BFS order, each vertex has a placed neighbor
  std::map<VertexId, Site> at;
  std::set<Site> used;

  explicit LatticeSearch(const LabeledGraph& graph) : g(graph) {
    std::set<VertexId> seen;
    order.push_back(g.vertices().front());
    seen.insert(order.front());
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (VertexId w : g.neighbors(order[head]))
        if (seen.insert(w).second) order.push_back(w);
    }
  }

  bool run(std::size_t k, bool off_axis) {
    if (k == order.size()) return true;
    VertexId v = order[k];
    VertexId anchor = 0;
    for (VertexId w : g.neighbors(v))
      if (at.count(w)) {
        anchor = w;
        break;
      }
    Site base = at[anchor];
    const long long off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& o : off) {
      Site s{base.first + o[0], base.second + o[1]};
      if (k == 1 && s != Site{1, 0}) continue;  // rotation symmetry
      if (!off_axis && s.second < 0) continue;  // reflection symmetry
      if (used.count(s)) continue;
      bool ok = true;
      for (VertexId w : g.neighbors(v)) {
        auto it = at.find(w);
        if (it == at.end()) continue;
        long long d = std::llabs(s.first - it->second.first) +
                      std::llabs(s.second - it->second.second);
        if (d != 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      at[v] = s;
      used.insert(s);
      if (run(k + 1, off_axis || s.second != 0)) return true;
      at.erase(v);
      used.erase(s);
    }
    return false;
  }
};

}  // namespace

bool lattice_embeddable(const LabeledGraph& g) {
  if (g.vertices().empty()) return true;
  LatticeSearch search(g);
  search.at[search.order[0]] = {0, 0};
  search.used.insert({0, 0});
  return search.run(1, false);
}

}  // namespace localcert
