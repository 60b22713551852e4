#include <cmath>
#include <map>
#include <utility>

#include "gadgets/util.hpp"

namespace localcert {
namespace {

constexpr double kRow = 0.86602540378443865;  // sqrt(3)/2

// Triangular lattice site (p, q) -> plane.  Tangent neighbors are the six
// offsets (+-1,0), (0,+-1), (+1,-1), (-1,+1).
Point site(int p, int q) { return {p + 0.5 * q, kRow * q}; }

constexpr int kOffsets[6][2] = {{1, 0},  {-1, 0}, {0, 1},
                                {0, -1}, {1, -1}, {-1, 1}};

}  // namespace

// Two doubled horizontal strips (rows 0,1 and 5,6) joined through a two-disk
// ladder on each side of the separator pair c_1, c_2.  Flag i adds a
// triangle of disks hanging off the top of the lower strip (left) or the
// bottom of the upper strip (right); the apex disks of flag i occupy the
// same lattice site on both sides, so both flags at once kill realizability.
GadgetInstance penny_gadget(int n, std::vector<int> a, std::vector<int> b,
                            GadgetClass cls) {
  if (cls != GadgetClass::kPenny && cls != GadgetClass::kUnitDistance)
    fail(ErrorCode::kBadIndex, "penny builder handles penny/unit-distance");
  if (n < 1) fail(ErrorCode::kBadIndex, "need n >= 1");
  a = detail::checked_flags(std::move(a), n, "a");
  b = detail::checked_flags(std::move(b), n, "b");
  bool member = detail::disjoint_flags(a, b);

  detail::Assembler as;
  using SiteMap = std::map<std::pair<int, int>, VertexId>;
  SiteMap left, right;
  auto put = [&](SiteMap& half, bool present, char side, const char* role,
                 int index, int p, int q) {
    VertexId id = as.slot(present, side, role, index, site(p, q));
    if (id) half[{p, q}] = id;
    return id;
  };
  auto put_both = [&](bool present, const char* role, int index, int p,
                      int q) {
    VertexId id = as.slot(present, 's', role, index, site(p, q));
    if (id) {
      left[{p, q}] = id;
      right[{p, q}] = id;
    }
    return id;
  };

  for (int p = 0; p <= 2 * n + 1; ++p) put(left, true, 'l', "row0", p, p, 0);
  for (int p = 0; p <= 2 * n + 1; ++p) put(left, true, 'l', "row1", p, p, 1);
  put(left, true, 'l', "lad", 0, -1, 2);
  put(left, true, 'l', "lad", 1, 0, 2);
  put_both(true, "c", 1, -1, 3);
  put_both(true, "c", 2, 0, 3);
  put(right, true, 'r', "lad", 2, -1, 4);
  put(right, true, 'r', "lad", 3, 0, 4);
  for (int p = -1; p <= 2 * n; ++p) put(right, true, 'r', "row5", p, p, 5);
  for (int p = -1; p <= 2 * n; ++p) put(right, true, 'r', "row6", p, p, 6);
  for (int i = 1; i <= n; ++i) {
    bool on = detail::has_flag(a, i);
    put(left, on, 'l', "x", i, 2 * i, 2);
    put(left, on, 'l', "x2", i, 2 * i + 1, 2);
    put(left, on, 'l', "a", i, 2 * i, 3);
  }
  for (int i = 1; i <= n; ++i) {
    bool on = detail::has_flag(b, i);
    put(right, on, 'r', "y", i, 2 * i - 1, 4);
    put(right, on, 'r', "y2", i, 2 * i, 4);
    put(right, on, 'r', "b", i, 2 * i, 3);
  }

  // Edges are exactly the within-half tangencies.
  for (const SiteMap* half : {&left, &right}) {
    for (const auto& [pq, id] : *half) {
      for (const auto& off : kOffsets) {
        auto it = half->find({pq.first + off[0], pq.second + off[1]});
        if (it != half->end()) as.edge(id, it->second);
      }
    }
  }

  std::size_t base = 8 * static_cast<std::size_t>(n) + 14;
  GadgetInstance inst =
      as.finish(cls, n, a, b, member, base * base * base,
                cls == GadgetClass::kPenny ? GeometryModel::kPenny
                                           : GeometryModel::kUnitDistance);
  inst.seed = {left.at({0, 0}), left.at({1, 0}), left.at({0, 1})};
  if (!inst.a.empty() || !inst.b.empty())
    detail::check_frontier_match(inst, penny_gadget(n, {}, {}, cls));
  return inst;
}

}  // namespace localcert
