#include <map>
#include <utility>

#include "gadgets/util.hpp"

namespace localcert {

// Same two-strip shape as the penny family on the integer lattice.  The
// separator is the vertical domino (-1,3),(0,3); a flag adds a 2x2 domino
// block bridging a strip and row 3, and the two row-3 cells of flag i have
// the same sites on both sides.
GadgetInstance grid_gadget(int n, std::vector<int> a, std::vector<int> b,
                           GadgetClass cls) {
  if (cls != GadgetClass::kGrid && cls != GadgetClass::kInducedGrid)
    fail(ErrorCode::kBadIndex, "grid builder handles grid/induced-grid");
  if (n < 1) fail(ErrorCode::kBadIndex, "need n >= 1");
  a = detail::checked_flags(std::move(a), n, "a");
  b = detail::checked_flags(std::move(b), n, "b");
  bool member = detail::disjoint_flags(a, b);

  detail::Assembler as;
  using SiteMap = std::map<std::pair<int, int>, VertexId>;
  SiteMap left, right;
  auto put = [&](SiteMap& half, bool present, char side, const char* role,
                 int index, int x, int y) {
    VertexId id = as.slot(present, side, role, index,
                          Point{static_cast<double>(x), static_cast<double>(y)});
    if (id) half[{x, y}] = id;
    return id;
  };

  for (int x = -1; x <= 3 * n; ++x) put(left, true, 'l', "row0", x, x, 0);
  for (int x = -1; x <= 3 * n; ++x) put(left, true, 'l', "row1", x, x, 1);
  put(left, true, 'l', "lad", 0, -1, 2);
  put(left, true, 'l', "lad", 1, 0, 2);
  {
    VertexId c1 = as.slot(true, 's', "c", 1, Point{-1, 3});
    VertexId c2 = as.slot(true, 's', "c", 2, Point{0, 3});
    left[{-1, 3}] = right[{-1, 3}] = c1;
    left[{0, 3}] = right[{0, 3}] = c2;
  }
  put(right, true, 'r', "lad", 2, -1, 4);
  put(right, true, 'r', "lad", 3, 0, 4);
  for (int x = -1; x <= 3 * n; ++x) put(right, true, 'r', "row5", x, x, 5);
  for (int x = -1; x <= 3 * n; ++x) put(right, true, 'r', "row6", x, x, 6);
  for (int i = 1; i <= n; ++i) {
    bool on = detail::has_flag(a, i);
    put(left, on, 'l', "da", i, 3 * i - 1, 2);
    put(left, on, 'l', "da", i, 3 * i, 2);
    put(left, on, 'l', "da", i, 3 * i - 1, 3);
    put(left, on, 'l', "da", i, 3 * i, 3);
  }
  for (int i = 1; i <= n; ++i) {
    bool on = detail::has_flag(b, i);
    put(right, on, 'r', "db", i, 3 * i - 1, 4);
    put(right, on, 'r', "db", i, 3 * i, 4);
    put(right, on, 'r', "db", i, 3 * i - 1, 3);
    put(right, on, 'r', "db", i, 3 * i, 3);
  }

  for (const SiteMap* half : {&left, &right}) {
    for (const auto& [xy, id] : *half) {
      auto e = half->find({xy.first + 1, xy.second});
      if (e != half->end()) as.edge(id, e->second);
      auto s = half->find({xy.first, xy.second + 1});
      if (s != half->end()) as.edge(id, s->second);
    }
  }

  std::size_t base = 12 * static_cast<std::size_t>(n) + 14;
  GadgetInstance inst =
      as.finish(cls, n, a, b, member, base * base * base,
                cls == GadgetClass::kGrid ? GeometryModel::kGrid
                                          : GeometryModel::kInducedGrid);
  inst.seed = {left.at({-1, 0}), left.at({0, 0}), left.at({0, 1}),
               left.at({-1, 1})};
  if (!inst.a.empty() || !inst.b.empty())
    detail::check_frontier_match(inst, grid_gadget(n, {}, {}, cls));
  return inst;
}

}  // namespace localcert
