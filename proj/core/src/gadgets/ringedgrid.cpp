#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {
namespace {

constexpr double kPad = 0.001;
constexpr double kDrop = 0.55;        // pendant offset along the outward normal
constexpr double kSeamRadius = 1.05;  // seam fillers orbit the outer corner

}  // namespace

RingedGrid ringed_grid(int n) {
  if (n < 1) fail(ErrorCode::kBadIndex, "need n >= 1");
  if (n > 8)
    fail(ErrorCode::kInfeasibleParameters,
         "pendant rows crowd the disk threshold; tuned up to n = 8");

  const int r = 2 * n + 1;
  const double root2 = std::sqrt(2.0);

  // The rim runs in four straight rows of r sites plus two shared corners.
  // Pendants hang kDrop outside; each row is compressed toward its step-seam
  // end so ring neighbors come under 1 while everything else stays above.
  // Scale u = 2s and end pull obey
  //   u >= 1 + pad                           distinct lattice diagonals
  //   u - pull/(r-1) <= 1 - pad              pendant ring spacing
  //   hypot(u - pull, kDrop) >= 1 + pad      pulled pendant vs next rim site
  // and both chosen values sit mid-window.
  const double clear = std::sqrt((1 + kPad) * (1 + kPad) - kDrop * kDrop);
  const double cap = ((1 - kPad) * (r - 1) - clear) / (r - 2);
  const double u = (1 + kPad + cap) / 2;
  const double s = u / 2;
  const double pull = ((r - 1) * (u - (1 - kPad)) + (u - clear)) / 2;

  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  Embedding emb;
  emb.model = GeometryModel::kUnitDisk;
  VertexId next = 1;
  auto put = [&](Point p) {
    ids.push_back(next);
    emb.points[next] = p;
    return next++;
  };
  auto at = [&](int x, int y) { return Point{(x + y) * s, (y - x) * s}; };

  // ball of radius r around the edge (0,0)-(1,0), x-major site order
  std::map<std::pair<int, int>, VertexId> site;
  auto inside = [&](int x, int y) {
    return std::min(std::abs(x) + std::abs(y), std::abs(x - 1) + std::abs(y)) <=
           r;
  };
  for (int x = -r; x <= r + 1; ++x)
    for (int y = -r; y <= r; ++y)
      if (inside(x, y)) site[{x, y}] = put(at(x, y));
  for (auto& [xy, id] : site) {
    auto [x, y] = xy;
    if (inside(x + 1, y)) edges.push_back({id, site[{x + 1, y}]});
    if (inside(x, y + 1)) edges.push_back({id, site[{x, y + 1}]});
  }

  RingedGrid out;
  out.n = n;

  std::vector<VertexId> ring;
  auto row = [&](int x0, int y0, int dx, int dy, Point normal, Point travel,
                 bool pull_at_start) {
    for (int i = 0; i < r; ++i) {
      double t = pull_at_start ? pull * (1 - i / double(r - 1))
                               : -pull * (i / double(r - 1));
      Point base = at(x0 + i * dx, y0 + i * dy);
      VertexId pid = put({base.x + travel.x * t + normal.x * kDrop,
                          base.y + travel.y * t + normal.y * kDrop});
      edges.push_back({site[{x0 + i * dx, y0 + i * dy}], pid});
      ring.push_back(pid);
    }
  };
  auto seam = [&](Point k, Point e1, Point e2) {
    double a1 = std::atan2(e1.y - k.y, e1.x - k.x);
    double a2 = std::atan2(e2.y - k.y, e2.x - k.x);
    if (a2 < a1) a2 += 2 * M_PI;
    for (int j = 1; j <= 3; ++j) {
      double ang = a1 + (a2 - a1) * j / 4;
      ring.push_back(put({k.x + kSeamRadius * std::cos(ang),
                          k.y + kSeamRadius * std::sin(ang)}));
    }
  };
  // Corner filler: off the chord midpoint, pushed outward just far enough.
  // The push window is [clears the corner site, still hops to both ends];
  // its midpoint stays open for every row length we build.
  auto off_chord = [&](Point k, Point e1, Point e2) {
    Point m{(e1.x + e2.x) / 2, (e1.y + e2.y) / 2};
    double gx = e2.x - e1.x, gy = e2.y - e1.y;
    double gl = std::hypot(gx, gy);
    Point p{-gy / gl, gx / gl};
    if ((m.x - k.x) * p.x + (m.y - k.y) * p.y < 0) p = {-p.x, -p.y};
    double along = (m.x - k.x) * p.x + (m.y - k.y) * p.y;
    double away2 = (m.x - k.x) * (m.x - k.x) + (m.y - k.y) * (m.y - k.y);
    double lo = -along + std::sqrt(along * along + (1 + kPad) * (1 + kPad) -
                                   away2);
    double hi = std::sqrt((1 - kPad) * (1 - kPad) - gl * gl / 4);
    double push = (lo + hi) / 2;
    return Point{m.x + push * p.x, m.y + push * p.y};
  };
  auto pt = [&](VertexId pid) { return emb.points.at(pid); };

  Point kne{(r + 1) * s, r * s}, ksw{-r * s, -(r + 1) * s};
  Point knw = at(-r, 0), kse = at(r + 1, 0);

  // counterclockwise: east row up, north row west, west row down, south east
  row(r, 1, -1, 1, {1, 0}, {0, 1}, true);  // east, pulled off the SE corner
  seam(kne, pt(ring.back()), {r * s, r * s + kDrop});
  row(0, r, -1, -1, {0, 1}, {-1, 0}, false);  // north, pulled off NW

  VertexId pnw = put({knw.x - kDrop / root2, knw.y + kDrop / root2});
  edges.push_back({site[{-r, 0}], pnw});
  Point west_first{-r * s - kDrop, (r - 2) * s - pull};
  ring.push_back(put(off_chord(knw, pt(ring.back()), pt(pnw))));
  ring.push_back(pnw);
  ring.push_back(put(off_chord(knw, pt(pnw), west_first)));

  row(-r + 1, -1, 1, -1, {-1, 0}, {0, -1}, true);  // west, pulled off NW
  seam(ksw, pt(ring.back()), {(1 - r) * s, -(r + 1) * s - kDrop});
  row(1, -r, 1, 1, {0, -1}, {1, 0}, false);  // south, pulled off SE

  VertexId pse = put({kse.x + kDrop / root2, kse.y - kDrop / root2});
  edges.push_back({site[{r + 1, 0}], pse});
  ring.push_back(put(off_chord(kse, pt(ring.back()), pt(pse))));
  ring.push_back(pse);
  ring.push_back(put(off_chord(kse, pt(pse), pt(ring.front()))));

  for (std::size_t i = 0; i + 1 < ring.size(); ++i)
    edges.push_back({ring[i], ring[i + 1]});
  edges.push_back({ring.back(), ring.front()});

  out.ring = ring;
  out.far_a = ring[0];
  out.far_b = ring[ring.size() / 2];
  for (auto& [xy, id] : site)
    if ((xy.first + xy.second) % 2 == 0) out.independent.push_back(id);

  std::size_t v = ids.size();
  out.graph = LabeledGraph::build(std::move(ids), std::move(edges),
                                  static_cast<VertexId>(v * v * v));
  out.canonical = std::move(emb);
  return out;
}

}  // namespace localcert
