#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {
namespace {

// Wall vertex x_j / y_j sits at x = .95j - 1.12, so x_1 leans back past u
// and the far wall end leans past v the same way.
double wall_xc(int j) { return 0.95 * j - 1.12; }

// Height ramps .98 -> 1.015 -> cap over the first steps and mirrors at the
// far end.  cap is 1.05 for the canonical layout; the pinch demo lowers it.
double wall_yc(int j, int r, double cap) {
  int steps = std::min(j - 1, r + 1 - j);
  return std::min(0.98 + 0.035 * steps, cap);
}

double far_x(int r) { return 0.95 * r - 0.34; }

// Sculpture arm offsets.  Tips sit asymmetrically so they clear both the
// mouth vertex z_1 and each other (tip gap 1.02).
constexpr double kTipL = -0.44, kTipR = 0.58;

Point role_point(const VertexRole& role, int r, double cap) {
  const double vx = far_x(r);
  const std::string& s = role.role;
  int i = role.index;
  if (s == "u") return {0, 0};
  if (s == "v") return {vx, 0};
  if (s == "x") return {wall_xc(i), wall_yc(i, r, cap)};
  if (s == "y") return {wall_xc(i), -wall_yc(i, r, cap)};
  if (s == "xp") return {i == 1 ? 0.83 : vx - 0.83, 0.54};
  if (s == "yp") return {i == 1 ? 0.83 : vx - 0.83, -0.54};
  if (s == "z") return {i == 1 ? 1.2 : vx - 1.2, 0};
  // sculptures: sa-* hang off the x wall, sb-* mirror on the y wall
  double sign = s[1] == 'a' ? 1.0 : -1.0;
  bool inside = s.compare(3, 2, "in") == 0;
  int j = inside ? 4 * i : 4 * i + 1;
  double cy = sign * (inside ? cap - 0.55 : cap + 0.55);
  double ty = sign * (inside ? cap - 1.05 : cap + 1.05);
  char arm = s.back();
  if (arm == 'c') return {wall_xc(j), cy};
  return {wall_xc(j) + (arm == 'l' ? kTipL : kTipR), ty};
}

}  // namespace

GadgetInstance corridor_instance(int r, std::vector<int> a,
                                 std::vector<int> b, int deco) {
  if (deco < 0) fail(ErrorCode::kBadIndex, "negative decoration count");
  if (r < 4 || (deco > 0 && r < 4 * deco + 8))
    fail(ErrorCode::kTooShortCorridor,
         "corridor length " + std::to_string(r) + " cannot carry " +
             std::to_string(deco) + " decorations");
  a = detail::checked_flags(std::move(a), deco, "a");
  b = detail::checked_flags(std::move(b), deco, "b");
  bool member = detail::disjoint_flags(a, b);
  const double cap = 1.05;

  detail::Assembler as;
  auto put = [&](bool present, char side, const char* role, int index) {
    VertexRole vr{role, index};
    return as.slot(present, side, role, index, role_point(vr, r, cap));
  };

  VertexId u = put(true, 's', "u", 0);
  VertexId v = put(true, 's', "v", 0);
  std::vector<VertexId> wx(r + 2), wy(r + 2);
  for (int j = 1; j <= r + 1; ++j) wx[j] = put(true, 'l', "x", j);
  for (int j = 1; j <= r + 1; ++j) wy[j] = put(true, 'r', "y", j);
  VertexId xp1 = put(true, 'l', "xp", 1);
  VertexId xpf = put(true, 'l', "xp", r + 1);
  VertexId yp1 = put(true, 'r', "yp", 1);
  VertexId ypf = put(true, 'r', "yp", r + 1);
  VertexId z1 = put(true, 's', "z", 1);
  VertexId zf = put(true, 's', "z", r + 1);

  as.edge(u, wx[1]);
  as.edge(u, wy[1]);
  for (int j = 1; j <= r; ++j) {
    as.edge(wx[j], wx[j + 1]);
    as.edge(wy[j], wy[j + 1]);
  }
  as.edge(wx[r + 1], v);
  as.edge(wy[r + 1], v);
  as.edge(xp1, u);
  as.edge(xp1, wx[2]);
  as.edge(yp1, u);
  as.edge(yp1, wy[2]);
  as.edge(xpf, wx[r]);
  as.edge(xpf, v);
  as.edge(ypf, wy[r]);
  as.edge(ypf, v);
  as.edge(z1, xp1);
  as.edge(z1, yp1);
  as.edge(zf, xpf);
  as.edge(zf, ypf);

  const char* arms[3] = {"c", "l", "r"};
  for (int i = 1; i <= deco; ++i) {
    bool on = detail::has_flag(a, i);
    VertexId sc[3], so[3];
    for (int t = 0; t < 3; ++t)
      sc[t] = put(on, 'l', (std::string("sa-in-") + arms[t]).c_str(), i);
    for (int t = 0; t < 3; ++t)
      so[t] = put(on, 'l', (std::string("sa-out-") + arms[t]).c_str(), i);
    as.edge(sc[0], wx[4 * i]);
    as.edge(sc[0], sc[1]);
    as.edge(sc[0], sc[2]);
    as.edge(so[0], wx[4 * i + 1]);
    as.edge(so[0], so[1]);
    as.edge(so[0], so[2]);
  }
  for (int i = 1; i <= deco; ++i) {
    bool on = detail::has_flag(b, i);
    VertexId sc[3], so[3];
    for (int t = 0; t < 3; ++t)
      sc[t] = put(on, 'r', (std::string("sb-in-") + arms[t]).c_str(), i);
    for (int t = 0; t < 3; ++t)
      so[t] = put(on, 'r', (std::string("sb-out-") + arms[t]).c_str(), i);
    as.edge(sc[0], wy[4 * i]);
    as.edge(sc[0], sc[1]);
    as.edge(sc[0], sc[2]);
    as.edge(so[0], wy[4 * i + 1]);
    as.edge(so[0], so[1]);
    as.edge(so[0], so[2]);
  }

  std::size_t base = 2 * static_cast<std::size_t>(r) + 10;
  GadgetInstance inst =
      as.finish(GadgetClass::kUnitDiskCorridor, r, a, b, member,
                base * base * base, GeometryModel::kUnitDisk);
  if (!inst.a.empty() || !inst.b.empty())
    detail::check_frontier_match(inst, corridor_instance(r, {}, {}, deco));
  return inst;
}

Corridor corridor(int r) {
  GadgetInstance inst = corridor_instance(r, {}, {}, 0);
  Corridor c;
  c.graph = std::move(inst.graph);
  c.canonical = std::move(*inst.canonical);
  c.r = r;
  c.wall_x.resize(r + 1);
  c.wall_y.resize(r + 1);
  for (const auto& [id, role] : inst.roles) {
    if (role.role == "u") c.u = id;
    if (role.role == "v") c.v = id;
    if (role.role == "z") (role.index == 1 ? c.z_near : c.z_far) = id;
    if (role.role == "x") c.wall_x[role.index - 1] = id;
    if (role.role == "y") c.wall_y[role.index - 1] = id;
  }
  return c;
}

DecoratedCorridor decorate_corridor(const Corridor& c, std::vector<int> a,
                                    std::vector<int> b, int deco) {
  GadgetInstance inst = corridor_instance(c.r, std::move(a), std::move(b), deco);
  DecoratedCorridor out;
  out.graph = std::move(inst.graph);
  out.canonical = std::move(inst.canonical);
  out.r = c.r;
  out.deco = deco;
  out.a = std::move(inst.a);
  out.b = std::move(inst.b);
  return out;
}

PinchDemo corridor_pinch(int r, std::vector<int> a, std::vector<int> b,
                         int deco) {
  GadgetInstance inst = corridor_instance(r, std::move(a), std::move(b), deco);
  PinchDemo demo;
  Embedding pinched;
  pinched.model = GeometryModel::kUnitDisk;
  for (const auto& [id, role] : inst.roles)
    pinched.points[id] = role_point(role, r, 1.025);
  demo.report = validate(inst.graph, pinched);
  demo.graph = std::move(inst.graph);
  demo.pinched = std::move(pinched);
  return demo;
}

}  // namespace localcert
