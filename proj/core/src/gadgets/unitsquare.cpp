#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {

namespace {

// Square-family layout.  One copy is a boundary cycle of touching steps
// (consecutive sites at d_inf just under 1), two chained-cell props crossing
// at the center, and per-flag 3x3 grids hanging off the v1-v2 quarter.  Two
// copies glue mirror-image across the line y = x - kGlue; same-index outer
// grids from the two copies would overlap, which is the whole point.
//
// Everything below is in plain xy.  The cycle and the grids are axis-aligned
// in the rotated frame a = (x+y)/2, w = (x-y)/2, where d_inf becomes L1.
constexpr double kPad = 0.001;       // clearance margin on every tight pair
constexpr double kStep = 1 - kPad;   // cycle step
constexpr double kDipCap = 0.352;    // glue-side dip, reached in 3 ramp steps
constexpr double kPitch = 0.51;      // grid pitch in the rotated frame
constexpr double kDrop = 0.56;       // grid anchor offset off the cycle
constexpr double kGlue = 1.98;       // mirror line y = x - kGlue

Point ao(double a, double w) { return {a + w, a - w}; }

struct Layout {
  int k, q, p;
  bool dips;  // glued copies dip the v1-v2 quarter away from the mirror
  double alpha_end, rq, delta, drift, step_nw;
  double eta_up_w, eta_low_w;  // heights of the west side rows
  std::vector<double> alpha;   // alpha of q_j

  Layout(int k_, bool dips_) : k(k_), q(4 * k_ + 4), p(8 * k_ + 6), dips(dips_) {
    alpha.assign(q + 1, 0);
    for (int j = 1; j <= q; ++j)
      alpha[j] = alpha[j - 1] + kStep - std::abs(dip(j) - dip(j - 1));
    alpha_end = alpha[q];
    rq = q * kStep;
    delta = (alpha_end + rq) / p;    // spine step, needs to stay above 1
    drift = (rq - alpha_end) / p;    // sideways drift of the diagonals
    step_nw = alpha_end / q;
    // The other prop's west column passes this half on both sides of the
    // star, so the west rows are pinched between two crossings and their own
    // pair gap.  Splitting the room evenly leaves the same slack on all
    // three, and that slack stays positive up to k = 8.
    double hl = 4 * k + 2;
    double slope_top = (kStep - (delta - .47)) / hl;
    double slope_bot = (.54 - (delta - kStep)) / hl;
    double room_nw = delta + .47 - slope_top - 2 * drift - 1;
    double room_sw = delta + .54 - slope_bot + 2 * drift - 1;
    double mu = (room_nw + room_sw - 1) / 3;
    eta_up_w = room_nw - mu;
    eta_low_w = room_sw - mu;
  }

  double dip(int j) const {
    return dips ? kDipCap * std::min(std::min(j, q - j), 3) / 3.0 : 0;
  }
};

struct CopyIds {
  VertexId v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  std::vector<VertexId> diagonal;
};

// Emits one copy through pos (identity for the left half and the single
// copy, the mirror for the right half).  Grid pairs are slotted per flag;
// absent ones still consume ids.
CopyIds emit_copy(detail::Assembler& as, char side, const Layout& L,
                  const std::vector<int>& flags,
                  const std::function<Point(Point)>& pos) {
  const int q = L.q, p = L.p, tz = p / 2;  // u_{tz} is the crossing point z
  CopyIds out;

  Point v1 = ao(0, 0), v2 = ao(L.alpha_end, 0);
  Point v3 = ao(L.alpha_end, -L.rq), v4 = ao(0, -L.rq);
  out.v1 = as.slot(true, side, "v", 1, pos(v1));
  out.v2 = as.slot(true, side, "v", 2, pos(v2));
  out.v3 = as.slot(true, side, "v", 3, pos(v3));
  out.v4 = as.slot(true, side, "v", 4, pos(v4));

  std::vector<VertexId> qv(q + 1), ev(q + 1), fv(q + 1), hv(q + 1);
  qv[0] = out.v1; qv[q] = out.v2;
  ev[0] = out.v2; ev[q] = out.v3;
  fv[0] = out.v3; fv[q] = out.v4;
  hv[0] = out.v4; hv[q] = out.v1;
  for (int j = 1; j < q; ++j)
    qv[j] = as.slot(true, side, "q", j, pos(ao(L.alpha[j], -L.dip(j))));
  for (int j = 1; j < q; ++j)
    ev[j] = as.slot(true, side, "e", j, pos(ao(L.alpha_end, -j * kStep)));
  for (int j = 1; j < q; ++j)
    fv[j] = as.slot(true, side, "f", j,
                    pos(ao(L.alpha_end - j * L.step_nw, -L.rq)));
  for (int j = 1; j < q; ++j)
    hv[j] = as.slot(true, side, "h", j, pos(ao(0, -L.rq + j * kStep)));

  auto spine13 = [&](int t) {
    return Point{v3.x + t * L.drift, v3.y - t * L.delta};
  };
  auto spine24 = [&](int t) {
    return Point{v4.x + t * L.delta, v4.y - t * L.drift};
  };
  std::vector<VertexId> u13(p + 1), u24(p + 1);
  u13[0] = out.v3; u13[p] = out.v1;
  u24[0] = out.v4; u24[p] = out.v2;
  for (int t = 1; t < p; ++t)
    u13[t] = as.slot(true, side, "u13", t, pos(spine13(t)));
  for (int t = 1; t < p; ++t)
    u24[t] = t == tz ? u13[tz] : as.slot(true, side, "u24", t, pos(spine24(t)));

  // the four cells meeting at z take fixed side offsets
  Point z = spine13(tz);
  std::array<Point, 5> armp = {Point{},
                               {z.x + .45, z.y + .47},
                               {z.x - .57, z.y + .47},
                               {z.x + .48, z.y - .54},
                               {z.x - .57, z.y - .54}};
  std::array<VertexId, 5> arm{};
  for (int i = 1; i <= 4; ++i)
    arm[i] = as.slot(true, side, "arm", i, pos(armp[i]));

  // Side offsets drift linearly along each half so the pair columns clear
  // both the cycle ends and the star.  Slopes stay under delta - 1 - kPad,
  // which keeps consecutive same-side verts separated.
  const double hl = 4 * L.k + 2;
  auto top = [&](int t) { return std::lerp(kStep, L.delta - .47, t / hl); };
  auto bot = [&](int t) {
    return std::lerp(.54, L.delta - kStep, (t - tz) / hl);
  };
  auto tw = [&](int t) { return std::lerp(kStep, L.delta - .57, t / hl); };
  auto ue = [&](int t) { return std::lerp(.45, L.delta - kStep, (t - tz) / hl); };
  auto le = [&](int t) { return std::lerp(.48, L.delta - kStep, (t - tz) / hl); };

  // cell t sits between spine verts t and t+1; cells 0 and p-1 borrow their
  // side pair from the cycle, the star cells use the arms
  std::vector<VertexId> e13(p), w13(p), up24(p), lo24(p);
  e13[0] = ev[q - 1]; w13[0] = fv[1];
  e13[p - 1] = qv[1]; w13[p - 1] = hv[q - 1];
  e13[tz - 1] = arm[1]; w13[tz - 1] = arm[2];
  e13[tz] = arm[3]; w13[tz] = arm[4];
  up24[0] = fv[q - 1]; lo24[0] = hv[1];
  up24[p - 1] = ev[1]; lo24[p - 1] = qv[q - 1];
  up24[tz - 1] = arm[2]; lo24[tz - 1] = arm[4];
  up24[tz] = arm[1]; lo24[tz] = arm[3];
  for (int t = 1; t < p - 1; ++t) {
    if (t == tz - 1 || t == tz) continue;
    double sg = t < tz ? top(t) : bot(t);
    Point u = spine13(t);
    e13[t] = as.slot(true, side, "e13", t, pos({u.x + .19, u.y - sg}));
    w13[t] = as.slot(true, side, "w13", t, pos({u.x - .85, u.y - sg}));
  }
  for (int t = 1; t < p - 1; ++t) {
    if (t == tz - 1 || t == tz) continue;
    Point u = spine24(t);
    // west rows share one column so consecutive cells separate in x alone;
    // the spine's own drop would otherwise pull cross-cell pairs under 1
    Point up = t < tz ? Point{u.x + tw(t), u.y + L.eta_up_w}
                      : Point{u.x + ue(t), u.y + .85};
    Point lo = t < tz ? Point{u.x + tw(t), u.y - L.eta_low_w}
                      : Point{u.x + le(t), u.y - .2};
    up24[t] = as.slot(true, side, "up24", t, pos(up));
    lo24[t] = as.slot(true, side, "lo24", t, pos(lo));
  }

  std::vector<std::array<VertexId, 9>> gin(L.k + 1), gout(L.k + 1);
  for (int i = 1; i <= L.k; ++i) {
    bool on = detail::has_flag(flags, i);
    double ai = L.alpha[4 * i], wi = -L.dip(4 * i);
    for (int gj = 0; gj < 3; ++gj)
      for (int gi = 0; gi < 3; ++gi)
        gin[i][3 * gj + gi] =
            as.slot(on, side, "gin", i,
                    pos(ao(ai + (gi - 1) * kPitch, wi - kDrop - gj * kPitch)));
    for (int gj = 0; gj < 3; ++gj)
      for (int gi = 0; gi < 3; ++gi)
        gout[i][3 * gj + gi] =
            as.slot(on, side, "gout", i,
                    pos(ao(ai + (gi - 1) * kPitch, wi + kDrop + gj * kPitch)));
  }

  auto chain = [&](const std::vector<VertexId>& vs) {
    for (std::size_t j = 0; j + 1 < vs.size(); ++j) as.edge(vs[j], vs[j + 1]);
  };
  chain(qv);
  chain(ev);
  chain(fv);
  chain(hv);
  for (int t = 0; t < p; ++t) {
    as.edge(e13[t], u13[t]);
    as.edge(e13[t], u13[t + 1]);
    as.edge(w13[t], u13[t]);
    as.edge(w13[t], u13[t + 1]);
    as.edge(up24[t], u24[t]);
    as.edge(up24[t], u24[t + 1]);
    as.edge(lo24[t], u24[t]);
    as.edge(lo24[t], u24[t + 1]);
  }
  for (int i = 1; i <= L.k; ++i)
    for (const auto& g : {gin[i], gout[i]}) {
      for (int gj = 0; gj < 3; ++gj)
        for (int gi = 0; gi < 3; ++gi) {
          if (gi < 2) as.edge(g[3 * gj + gi], g[3 * gj + gi + 1]);
          if (gj < 2) as.edge(g[3 * gj + gi], g[3 * gj + gi + 3]);
        }
      as.edge(g[1], qv[4 * i]);  // middle of the near row anchors to the cycle
    }

  out.diagonal = std::move(qv);
  return out;
}

void check_k(int k) {
  if (k < 1) fail(ErrorCode::kBadIndex, "need k >= 1");
  if (k > 8)
    fail(ErrorCode::kInfeasibleParameters,
         "side offsets are tuned for k <= 8; the spine step crowds 1 beyond "
         "that");
}

}  // namespace

UnitSquareCopy unit_square_copy(int k) {
  check_k(k);
  Layout L(k, false);
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i + 1;
  detail::Assembler as;
  CopyIds ids = emit_copy(as, 'l', L, all, [](Point pt) { return pt; });
  std::size_t base = 82 * static_cast<std::size_t>(k) + 37;
  GadgetInstance inst =
      as.finish(GadgetClass::kUnitSquare, k, all, {}, true,
                base * base * base, GeometryModel::kUnitSquare);
  UnitSquareCopy copy;
  copy.graph = std::move(inst.graph);
  copy.canonical = std::move(*inst.canonical);
  copy.v1 = ids.v1;
  copy.v2 = ids.v2;
  copy.v3 = ids.v3;
  copy.v4 = ids.v4;
  copy.diagonal = std::move(ids.diagonal);
  return copy;
}

GadgetInstance unit_square_gadget(int k, std::vector<int> a,
                                  std::vector<int> b) {
  check_k(k);
  a = detail::checked_flags(std::move(a), k, "a");
  b = detail::checked_flags(std::move(b), k, "b");
  bool member = detail::disjoint_flags(a, b);

  Layout L(k, true);
  detail::Assembler as;
  CopyIds lft = emit_copy(as, 'l', L, a, [](Point pt) { return pt; });
  CopyIds rgt = emit_copy(as, 'r', L, b, [](Point pt) {
    return Point{pt.y + kGlue, pt.x - kGlue};
  });
  VertexId c1 = as.slot(true, 's', "c", 1, Point{kGlue / 2, -kGlue / 2});
  VertexId c2 = as.slot(true, 's', "c", 2,
                        Point{L.alpha_end + kGlue / 2, L.alpha_end - kGlue / 2});
  as.edge(c1, lft.v1);
  as.edge(c1, rgt.v1);
  as.edge(c2, lft.v2);
  as.edge(c2, rgt.v2);

  std::size_t base = 128 * static_cast<std::size_t>(k) + 76;
  GadgetInstance inst =
      as.finish(GadgetClass::kUnitSquare, k, a, b, member,
                base * base * base, GeometryModel::kUnitSquare);
  if (!inst.a.empty() || !inst.b.empty())
    detail::check_frontier_match(inst, unit_square_gadget(k, {}, {}));
  return inst;
}

}  // namespace localcert
