#include <algorithm>

#include "gadgets/util.hpp"

namespace localcert {

std::string gadget_class_name(GadgetClass cls) {
  switch (cls) {
    case GadgetClass::kPenny: return "penny";
    case GadgetClass::kUnitDistance: return "unit-distance";
    case GadgetClass::kGrid: return "grid";
    case GadgetClass::kInducedGrid: return "induced-grid";
    case GadgetClass::kOnePlanar: return "one-planar";
    case GadgetClass::kUnitSquare: return "unit-square";
    case GadgetClass::kUnitDiskCorridor: return "corridor";
  }
  return "?";
}

std::optional<GadgetClass> gadget_class_from_name(const std::string& name) {
  for (GadgetClass cls :
       {GadgetClass::kPenny, GadgetClass::kUnitDistance, GadgetClass::kGrid,
        GadgetClass::kInducedGrid, GadgetClass::kOnePlanar,
        GadgetClass::kUnitSquare, GadgetClass::kUnitDiskCorridor}) {
    if (name == gadget_class_name(cls)) return cls;
  }
  return std::nullopt;
}

std::size_t class_size_bound(GadgetClass cls, int n) {
  // worst case over flag sets; exact when the count is flag-independent
  std::size_t m = static_cast<std::size_t>(n);
  switch (cls) {
    case GadgetClass::kPenny:
    case GadgetClass::kUnitDistance:
      return 14 * m + 14;  // 8n+14 plus 3 per flag on each side
    case GadgetClass::kGrid:
    case GadgetClass::kInducedGrid:
      return 20 * m + 14;  // 12n+14 plus 4 per flag on each side
    case GadgetClass::kOnePlanar:
      return 12 * m + 47;
    case GadgetClass::kUnitSquare:
      return 164 * m + 76;  // both copies fully decorated, plus 2 shared
    case GadgetClass::kUnitDiskCorridor:
      // 2r+10 plus 6 per flag on each side, flags capped by r >= 4*deco+8
      return 2 * m + 10 + 12 * ((m >= 8 ? m - 8 : 0) / 4);
  }
  return 0;
}

GadgetInstance gadget(GadgetClass cls, int n, std::vector<int> a,
                      std::vector<int> b) {
  switch (cls) {
    case GadgetClass::kPenny:
    case GadgetClass::kUnitDistance:
      return penny_gadget(n, std::move(a), std::move(b), cls);
    case GadgetClass::kGrid:
    case GadgetClass::kInducedGrid:
      return grid_gadget(n, std::move(a), std::move(b), cls);
    case GadgetClass::kOnePlanar:
      return one_planar_gadget(n, std::move(a), std::move(b));
    case GadgetClass::kUnitSquare:
      return unit_square_gadget(n, std::move(a), std::move(b));
    case GadgetClass::kUnitDiskCorridor: {
      int deco = 0;
      for (int i : a) deco = std::max(deco, i);
      for (int i : b) deco = std::max(deco, i);
      return corridor_instance(n, std::move(a), std::move(b), deco);
    }
  }
  fail(ErrorCode::kBadIndex, "unknown gadget class");
}

}  // namespace localcert
