#include "localcert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "localcert/lemma_constants.hpp"

namespace localcert {

double dist(Point p, Point q, Metric metric) {
  double dx = std::abs(p.x - q.x), dy = std::abs(p.y - q.y);
  return metric == Metric::kL2 ? std::hypot(dx, dy) : std::max(dx, dy);
}

const char* to_string(GeometryModel model) {
  switch (model) {
    case GeometryModel::kUnitDisk: return "unit-disk";
    case GeometryModel::kUnitSquare: return "unit-square";
    case GeometryModel::kPenny: return "penny";
    case GeometryModel::kUnitDistance: return "unit-distance";
    case GeometryModel::kGrid: return "grid";
    case GeometryModel::kInducedGrid: return "induced-grid";
  }
  return "unknown";
}

std::optional<GeometryModel> model_from_string(const std::string& name) {
  if (name == "unit-disk") return GeometryModel::kUnitDisk;
  if (name == "unit-square") return GeometryModel::kUnitSquare;
  if (name == "penny") return GeometryModel::kPenny;
  if (name == "unit-distance") return GeometryModel::kUnitDistance;
  if (name == "grid") return GeometryModel::kGrid;
  if (name == "induced-grid") return GeometryModel::kInducedGrid;
  return std::nullopt;
}

namespace {

constexpr double kNoMargin = 1e18;

struct Checker {
  ValidationReport report;
  double tol;

  Checker(double tol_) : tol(tol_) { report.min_margin = kNoMargin; }

  void violation(VertexId u, VertexId v, double measured, std::string relation) {
    report.valid = false;
    report.violations.push_back({u, v, measured, std::move(relation)});
  }
  // Inequality comparison `measured vs threshold`; direction tells which side
  // must hold.  Updates min_margin and the fragile list.
  void require_leq(VertexId u, VertexId v, double measured, double threshold,
                   const char* relation) {
    if (measured > threshold + tol) {
      violation(u, v, measured, relation);
      return;
    }
    double slack = std::abs(threshold - measured);
    report.min_margin = std::min(report.min_margin, slack);
    if (slack <= tol) report.fragile_pairs.push_back({u, v, measured, relation});
  }
  void require_geq(VertexId u, VertexId v, double measured, double threshold,
                   const char* relation) {
    if (measured < threshold - tol) {
      violation(u, v, measured, relation);
      return;
    }
    double slack = std::abs(measured - threshold);
    report.min_margin = std::min(report.min_margin, slack);
    if (slack <= tol) report.fragile_pairs.push_back({u, v, measured, relation});
  }
  // Equality comparison; does not feed min_margin.
  void require_eq(VertexId u, VertexId v, double measured, double threshold,
                  const char* relation) {
    if (std::abs(measured - threshold) > tol) violation(u, v, measured, relation);
  }
};

Point point_of(const Embedding& e, VertexId v) {
  auto it = e.points.find(v);
  if (it == e.points.end())
    fail(ErrorCode::kMissingPoint, "no point for vertex " + std::to_string(v));
  return it->second;
}

ValidationReport validate_metric_threshold(const LabeledGraph& g, const Embedding& e,
                                           Metric metric) {
  Checker c(e.tol);
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point p = point_of(e, vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      double d = dist(p, point_of(e, vs[j]), metric);
      if (g.has_edge(vs[i], vs[j]))
        c.require_leq(vs[i], vs[j], d, 1.0, "edge needs distance <= 1");
      else
        c.require_geq(vs[i], vs[j], d, 1.0, "non-edge needs distance > 1");
    }
  }
  return std::move(c.report);
}

ValidationReport validate_penny(const LabeledGraph& g, const Embedding& e) {
  Checker c(e.tol);
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point p = point_of(e, vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      double d = dist(p, point_of(e, vs[j]), Metric::kL2);
      if (d <= e.tol) {
        c.violation(vs[i], vs[j], d, "pennies need distinct centers");
        continue;
      }
      if (g.has_edge(vs[i], vs[j]))
        c.require_eq(vs[i], vs[j], d, 1.0, "contact edge needs distance = 1");
      else
        c.require_geq(vs[i], vs[j], d, 1.0, "disjoint interiors need distance >= 1");
    }
  }
  return std::move(c.report);
}

ValidationReport validate_unit_distance(const LabeledGraph& g, const Embedding& e) {
  Checker c(e.tol);
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point p = point_of(e, vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      double d = dist(p, point_of(e, vs[j]), Metric::kL2);
      if (g.has_edge(vs[i], vs[j])) {
        c.require_eq(vs[i], vs[j], d, 1.0, "edge needs distance = 1");
      } else {
        // non-edges must stay away from the unit circle
        if (std::abs(d - 1.0) <= c.tol)
          c.violation(vs[i], vs[j], d, "non-edge at unit distance");
        else
          c.report.min_margin = std::min(c.report.min_margin, std::abs(d - 1.0));
      }
    }
  }
  return std::move(c.report);
}

ValidationReport validate_grid(const LabeledGraph& g, const Embedding& e,
                               bool induced) {
  Checker c(e.tol);
  std::map<VertexId, std::pair<long long, long long>> site;
  std::map<std::pair<long long, long long>, VertexId> occupied;
  for (VertexId v : g.vertices()) {
    Point p = point_of(e, v);
    double rx = std::round(p.x), ry = std::round(p.y);
    double off = std::max(std::abs(p.x - rx), std::abs(p.y - ry));
    if (off > c.tol) {
      c.violation(v, v, off, "vertex off the integer lattice");
      continue;
    }
    c.report.min_margin = std::min(c.report.min_margin, 0.5 - off);
    auto cell = std::make_pair(static_cast<long long>(rx), static_cast<long long>(ry));
    auto [it, fresh] = occupied.emplace(cell, v);
    if (!fresh) {
      c.violation(it->second, v, 0.0, "two vertices on one lattice site");
      continue;
    }
    site[v] = cell;
  }
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto si = site.find(vs[i]);
    if (si == site.end()) continue;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto sj = site.find(vs[j]);
      if (sj == site.end()) continue;
      long long l1 = std::llabs(si->second.first - sj->second.first) +
                     std::llabs(si->second.second - sj->second.second);
      bool edge = g.has_edge(vs[i], vs[j]);
      if (edge && l1 != 1)
        c.violation(vs[i], vs[j], static_cast<double>(l1),
                    "edge needs lattice distance 1");
      if (!edge && induced && l1 == 1)
        c.violation(vs[i], vs[j], 1.0, "lattice neighbors must be adjacent");
    }
  }
  return std::move(c.report);
}

}  // namespace

ValidationReport validate(const LabeledGraph& g, const Embedding& e) {
  switch (e.model) {
    case GeometryModel::kUnitDisk:
      return validate_metric_threshold(g, e, Metric::kL2);
    case GeometryModel::kUnitSquare:
      return validate_metric_threshold(g, e, Metric::kLInf);
    case GeometryModel::kPenny:
      return validate_penny(g, e);
    case GeometryModel::kUnitDistance:
      return validate_unit_distance(g, e);
    case GeometryModel::kGrid:
      return validate_grid(g, e, false);
    case GeometryModel::kInducedGrid:
      return validate_grid(g, e, true);
  }
  fail(ErrorCode::kFormatError, "unknown geometry model");
}

std::map<VertexId, std::vector<VertexId>> rotation_system(const LabeledGraph& g,
                                                          const Embedding& e) {
  // triangle-free precondition
  for (auto [u, v] : g.edges()) {
    const auto& nu = g.neighbors(u);
    for (VertexId w : g.neighbors(v))
      if (w != u && std::binary_search(nu.begin(), nu.end(), w))
        fail(ErrorCode::kNotTriangleFree,
             "triangle " + std::to_string(u) + "," + std::to_string(v) + "," +
                 std::to_string(w));
  }
  ValidationReport r = validate(g, e);
  if (!r.valid)
    fail(ErrorCode::kInvalidEmbedding,
         "embedding fails its model, " + std::to_string(r.violations.size()) +
             " violations");

  std::map<VertexId, std::vector<VertexId>> out;
  for (VertexId v : g.vertices()) {
    Point c = point_of(e, v);
    std::vector<std::pair<double, VertexId>> order;
    for (VertexId w : g.neighbors(v)) {
      Point p = point_of(e, w);
      double dx = p.x - c.x, dy = p.y - c.y;
      if (std::hypot(dx, dy) <= e.tol)
        fail(ErrorCode::kCoincidentPoints,
             "neighbor " + std::to_string(w) + " coincides with " + std::to_string(v));
      order.emplace_back(std::atan2(dy, dx), w);
    }
    // clockwise = descending angle; rotate so the smallest id leads
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<VertexId> cycle;
    cycle.reserve(order.size());
    for (const auto& [angle, w] : order) cycle.push_back(w);
    if (!cycle.empty()) {
      auto lead = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), lead, cycle.end());
    }
    out[v] = std::move(cycle);
  }
  return out;
}

double menger_curvature(Point a, Point b, Point c) {
  double ab = dist(a, b), bc = dist(b, c), ca = dist(c, a);
  if (ab < 1e-12 || bc < 1e-12 || ca < 1e-12)
    fail(ErrorCode::kCoincidentPoints, "curvature needs three distinct points");
  double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return 2.0 * std::abs(cross) / (ab * bc * ca);
}

double tightness(const TightPath& path, double tol) {
  if (path.points.size() < 2)
    fail(ErrorCode::kBrokenPath, "tight path needs at least two points");
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
    if (dist(path.points[i], path.points[i + 1]) > 1.0 + tol)
      fail(ErrorCode::kBrokenPath,
           "step " + std::to_string(i) + " longer than 1");
  return static_cast<double>(path.length()) -
         dist(path.points.front(), path.points.back());
}

double regularity(const TightPath& path, std::size_t s, double tol) {
  (void)tightness(path, tol);  // validates step lengths
  std::size_t len = path.length();
  if (s == 0 || s > len) s = len;
  Point a = path.points.front(), b = path.points.back();
  double worst = 0;
  for (std::size_t i = 0; i <= s; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(len);
    Point even{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    worst = std::max(worst, dist(path.points[i], even));
  }
  return worst;
}

BoundReport midpoint_shortcut_check(double x, double delta, double rho,
                                    std::size_t samples, std::uint64_t seed) {
  if (x < 100.0 * rho || delta < 0 || delta > 1 || rho <= 0)
    fail(ErrorCode::kInfeasibleParameters,
         "need x >= 100 rho, 0 <= delta <= 1, rho > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const Point a{0, 0}, b{x, 0};
  const double bound = rho * std::sqrt(2.0 * delta / x) + kMidpointShortcutC / x;
  BoundReport report;
  report.holds = true;

  for (std::size_t s = 0; s < samples; ++s) {
    // apex with |ac| + |bc| = x + delta, |ac| - |bc| = t in [-1, 1]
    double t = 2.0 * unit(rng) - 1.0;
    double ra = (x + delta + t) / 2.0, rb = (x + delta - t) / 2.0;
    double cx = (ra * ra - rb * rb + x * x) / (2.0 * x);
    double cy2 = ra * ra - cx * cx;
    Point c{cx, cy2 > 0 ? std::sqrt(cy2) : 0.0};

    auto consider = [&](Point cp) {
      double da = dist(a, cp), db = dist(b, cp);
      if (da > ra || db > rb) return;  // not a double shortcut
      double drop = std::min(ra - da, rb - db);
      report.worst_ratio = std::max(report.worst_ratio, drop / bound);
      ++report.samples;
      if (drop > bound) {
        report.holds = false;
        if (report.detail.empty()) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "drop %.9f exceeds bound %.9f at t=%.6f", drop, bound, t);
          report.detail = buf;
        }
      }
    };

    // adversarial directions first: toward each focus and toward the midpoint
    Point mid{x / 2.0, 0.0};
    for (Point target : {mid, a, b}) {
      double nx = target.x - c.x, ny = target.y - c.y;
      double norm = std::hypot(nx, ny);
      if (norm > 1e-12) consider({c.x + rho * nx / norm, c.y + rho * ny / norm});
    }
    // random offsets inside the rho-disk
    for (int extra = 0; extra < 4; ++extra) {
      double ang = 2.0 * M_PI * unit(rng);
      double rad = rho * std::sqrt(unit(rng));
      consider({c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)});
    }
    // c' = c: zero drop, trivially inside the bound
    consider(c);
  }
  return report;
}

namespace {

// Path of `len` unit chords along a circle so the end-to-end chord is
// len - delta.  delta = 0 degenerates to a straight path.
TightPath arc_path(std::size_t len, double delta) {
  TightPath path;
  if (delta < 1e-15) {
    for (std::size_t i = 0; i <= len; ++i)
      path.points.push_back({static_cast<double>(i), 0.0});
    return path;
  }
  double n = static_cast<double>(len);
  // solve for step angle phi: chord(len steps) = (len - delta) * chord(1 step)
  double lo = 1e-9, hi = M_PI / (n + 1);
  auto gap = [&](double phi) {
    return std::sin(n * phi / 2.0) - (n - delta) * std::sin(phi / 2.0);
  };
  for (int it = 0; it < 200; ++it) {
    double midp = (lo + hi) / 2.0;
    (gap(midp) > 0 ? lo : hi) = midp;  // gap(lo) > 0 > gap(hi)
  }
  double phi = (lo + hi) / 2.0;
  double radius = 0.5 / std::sin(phi / 2.0);
  for (std::size_t i = 0; i <= len; ++i) {
    double ang = static_cast<double>(i) * phi;
    path.points.push_back({radius * std::sin(ang), radius * (1.0 - std::cos(ang))});
  }
  return path;
}

}  // namespace

BoundReport tight_path_regularity_check(std::size_t paths, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BoundReport report;
  report.holds = true;

  for (std::size_t trial = 0; trial < paths; ++trial) {
    std::size_t len = 16 + rng() % 85;
    double delta_goal = unit(rng);
    TightPath path = arc_path(len, delta_goal);

    if (trial % 3 == 2) {
      // pull random interior points toward the chord, keeping steps legal;
      // tightness is re-measured afterwards so the bound uses the real delta
      for (int k = 0; k < 8; ++k) {
        std::size_t i = 1 + rng() % (len - 1);
        Point& p = path.points[i];
        Point squeezed{p.x, p.y * (0.6 + 0.4 * unit(rng))};
        if (dist(squeezed, path.points[i - 1]) <= 1.0 &&
            dist(squeezed, path.points[i + 1]) <= 1.0)
          p = squeezed;
      }
    }

    double delta = tightness(path);
    if (delta > 1.0) continue;  // squeezing can overshoot; law is for delta <= 1
    double n = static_cast<double>(len);
    double gamma_bound = std::sqrt(n * delta / 2.0) + kRegularityC / std::sqrt(n);
    double gamma = regularity(path);
    report.samples++;
    report.worst_ratio = std::max(report.worst_ratio, gamma / gamma_bound);
    if (gamma > gamma_bound) {
      report.holds = false;
      if (report.detail.empty())
        report.detail = "deviation " + std::to_string(gamma) + " exceeds " +
                        std::to_string(gamma_bound) + " at len " + std::to_string(len);
    }

    // prefix law at s = len/8
    std::size_t s = std::max<std::size_t>(1, len / 8);
    double alpha = static_cast<double>(s) / n;
    double lambda_bound = std::sqrt((2.0 * alpha - alpha * alpha) * gamma_bound *
                                        gamma_bound +
                                    alpha * alpha);
    double lambda = regularity(path, s);
    if (lambda > lambda_bound) {
      report.holds = false;
      if (report.detail.empty())
        report.detail = "prefix deviation " + std::to_string(lambda) +
                        " exceeds " + std::to_string(lambda_bound);
    }
  }
  return report;
}

BoundReport curvature_invariance_check(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-10.0, 10.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  BoundReport report;
  report.holds = true;

  auto apart = [](Point p, Point q) { return dist(p, q) > 1e-6; };
  for (std::size_t s = 0; s < samples; ++s) {
    Point a{unit(rng), unit(rng)}, b{unit(rng), unit(rng)}, c{unit(rng), unit(rng)};
    if (!apart(a, b) || !apart(b, c) || !apart(c, a)) continue;
    double k = menger_curvature(a, b, c);

    double th = angle(rng), tx = unit(rng), ty = unit(rng);
    bool reflect = rng() & 1;
    auto rigid = [&](Point p) {
      double px = reflect ? -p.x : p.x;
      return Point{px * std::cos(th) - p.y * std::sin(th) + tx,
                   px * std::sin(th) + p.y * std::cos(th) + ty};
    };
    double k_rigid = menger_curvature(rigid(a), rigid(b), rigid(c));

    double f = scale(rng);
    auto scaled = [&](Point p) { return Point{p.x * f, p.y * f}; };
    double k_scaled = menger_curvature(scaled(a), scaled(b), scaled(c));

    ++report.samples;
    double rel1 = std::abs(k_rigid - k) / std::max(k, 1e-12);
    double rel2 = std::abs(k_scaled * f - k) / std::max(k, 1e-12);
    double rel = std::max(rel1, rel2);
    report.worst_ratio = std::max(report.worst_ratio, rel);
    if (rel > 1e-9) {
      report.holds = false;
      if (report.detail.empty())
        report.detail = "relative drift " + std::to_string(rel);
    }
  }
  return report;
}

PropScanReport prop_scan(const LabeledGraph& g, const Embedding& e) {
  // same preconditions as rotation_system: triangle-free, valid unit-square
  for (auto [u, v] : g.edges()) {
    const auto& nu = g.neighbors(u);
    for (VertexId w : g.neighbors(v))
      if (w != u && std::binary_search(nu.begin(), nu.end(), w))
        fail(ErrorCode::kNotTriangleFree, "graph has a triangle");
  }
  {
    ValidationReport r = validate(g, e);
    if (!r.valid)
      fail(ErrorCode::kInvalidEmbedding, "embedding fails unit-square model");
  }

  PropScanReport out;
  for (VertexId v : g.vertices()) {
    Point c = point_of(e, v);
    std::array<int, 4> counts{0, 0, 0, 0};
    for (VertexId w : g.neighbors(v)) {
      Point p = point_of(e, w);
      int qx = p.x >= c.x ? 1 : 0, qy = p.y >= c.y ? 1 : 0;
      counts[static_cast<std::size_t>(2 * qx + qy)]++;
    }
    out.corner_counts[v] = counts;
  }

  // cells: 4-cycles with one diagonal separated along an axis by more than 1
  struct Cell {
    VertexId u0, u1;  // spine diagonal
    VertexId hi, lo;  // side diagonal
    bool horizontal;
  };
  std::vector<Cell> cells;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      VertexId p = vs[i], q = vs[j];
      if (g.has_edge(p, q)) continue;
      std::vector<VertexId> common;
      const auto& np = g.neighbors(p);
      for (VertexId w : g.neighbors(q))
        if (std::binary_search(np.begin(), np.end(), w)) common.push_back(w);
      if (common.size() != 2) continue;
      VertexId s1 = common[0], s2 = common[1];
      if (g.has_edge(s1, s2)) continue;
      if (s1 > s2) std::swap(s1, s2);
      // treat (p,q) as the spine once; (s1,s2) shows up as its own pair too
      Point pp = point_of(e, p), pq = point_of(e, q);
      Point p1 = point_of(e, s1), p2 = point_of(e, s2);
      double spine_dx = std::abs(pp.x - pq.x), spine_dy = std::abs(pp.y - pq.y);
      double side_dx = std::abs(p1.x - p2.x), side_dy = std::abs(p1.y - p2.y);
      if (spine_dx > 1.0 && side_dy > 1.0) {
        VertexId hi = point_of(e, s1).y >= point_of(e, s2).y ? s1 : s2;
        cells.push_back({p, q, hi, hi == s1 ? s2 : s1, true});
      } else if (spine_dy > 1.0 && side_dx > 1.0) {
        VertexId hi = point_of(e, s1).x >= point_of(e, s2).x ? s1 : s2;
        cells.push_back({p, q, hi, hi == s1 ? s2 : s1, false});
      }
    }
  }

  // chain same-orientation cells that share a spine vertex
  std::map<std::pair<VertexId, bool>, std::vector<std::size_t>> by_spine;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    by_spine[{cells[i].u0, cells[i].horizontal}].push_back(i);
    by_spine[{cells[i].u1, cells[i].horizontal}].push_back(i);
  }
  std::vector<std::vector<std::size_t>> adj(cells.size());
  for (const auto& [key, list] : by_spine)
    if (list.size() == 2) {
      adj[list[0]].push_back(list[1]);
      adj[list[1]].push_back(list[0]);
    }

  // Each 4-cycle shows up under both diagonal readings; only chains of three
  // or more cells pin down which diagonal is the spine, so shorter runs
  // (including the dual readings of real props) are not reported.
  std::vector<char> used(cells.size(), 0);
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (used[start] || adj[start].size() > 1) continue;  // chain endpoints only
    std::vector<std::size_t> chain = {start};
    used[start] = 1;
    while (true) {
      std::size_t next = static_cast<std::size_t>(-1);
      for (std::size_t cand : adj[chain.back()])
        if (!used[cand]) {
          next = cand;
          break;
        }
      if (next == static_cast<std::size_t>(-1)) break;
      used[next] = 1;
      chain.push_back(next);
    }
    if (chain.size() < 3) continue;

    PropInstance prop;
    prop.horizontal = cells[start].horizontal;
    // order the spine by walking shared vertices
    const Cell& c0 = cells[chain[0]];
    const Cell& c1 = cells[chain[1]];
    bool share_u0 = c0.u0 == c1.u0 || c0.u0 == c1.u1;
    prop.spine = {share_u0 ? c0.u1 : c0.u0, share_u0 ? c0.u0 : c0.u1};
    VertexId cur = prop.spine.back();
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const Cell& ck = cells[chain[k]];
      cur = ck.u0 == cur ? ck.u1 : ck.u0;
      prop.spine.push_back(cur);
    }
    for (std::size_t k : chain)
      prop.side_pairs.emplace_back(cells[k].hi, cells[k].lo);

    // displacement laws: spine moves more than one unit per cell along the
    // axis, each side pair separated by more than 1 across it
    double d0 = prop.horizontal ? point_of(e, prop.spine.front()).x
                                : point_of(e, prop.spine.front()).y;
    double d1 = prop.horizontal ? point_of(e, prop.spine.back()).x
                                : point_of(e, prop.spine.back()).y;
    double n = static_cast<double>(prop.side_pairs.size());
    if (std::abs(d1 - d0) <= n) {
      out.displacement_ok = false;
      out.failures.push_back("spine displacement " + std::to_string(std::abs(d1 - d0)) +
                             " not above cell count " + std::to_string(n));
    }
    for (auto [hi, lo] : prop.side_pairs) {
      double gap = prop.horizontal
                       ? point_of(e, hi).y - point_of(e, lo).y
                       : point_of(e, hi).x - point_of(e, lo).x;
      if (gap <= 1.0) {
        out.displacement_ok = false;
        out.failures.push_back("side pair gap " + std::to_string(gap) + " not above 1");
      }
    }
    out.props.push_back(std::move(prop));
  }

  // deterministic order: by first spine vertex
  std::sort(out.props.begin(), out.props.end(),
            [](const PropInstance& a, const PropInstance& b) {
              return a.spine.front() < b.spine.front();
            });
  return out;
}

SeparationReport ring_separation_check(const LabeledGraph& g, const Embedding& e,
                                       VertexId c, VertexId c2, std::size_t n,
                                       const std::vector<VertexId>& independent,
                                       const std::vector<VertexId>& ring) {
  if (n == 0) fail(ErrorCode::kInfeasibleParameters, "ring parameter must be >= 1");
  {
    ValidationReport r = validate(g, e);
    if (!r.valid)
      fail(ErrorCode::kInvalidEmbedding, "embedding fails unit-disk model");
  }
  SeparationReport report;
  Point pc = point_of(e, c), pc2 = point_of(e, c2);
  report.measured = dist(pc, pc2);
  double dn = static_cast<double>(n);
  report.bound = (M_PI * std::sqrt(2.0) - 4.0) * dn - kRingSeparationC * std::sqrt(dn);
  report.holds = report.measured >= report.bound;

  auto seg_dist = [](Point p, Point a, Point b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double len2 = vx * vx + vy * vy;
    double t = len2 < 1e-18
                   ? 0.0
                   : std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    return dist(p, {a.x + t * vx, a.y + t * vy});
  };

  // disks of radius 1/2 at independent sites that clear the ring polyline and
  // the cut segment; count the bigger side of the cut line
  std::size_t left = 0, right = 0;
  double cx = pc2.x - pc.x, cy = pc2.y - pc.y;
  for (VertexId v : independent) {
    Point p = point_of(e, v);
    if (seg_dist(p, pc, pc2) < 0.5) continue;
    bool clear = true;
    for (std::size_t i = 0; i + 1 < ring.size() && clear; ++i)
      if (seg_dist(p, point_of(e, ring[i]), point_of(e, ring[i + 1])) < 0.5)
        clear = false;
    if (clear && !ring.empty() &&
        seg_dist(p, point_of(e, ring.back()), point_of(e, ring.front())) < 0.5)
      clear = false;
    if (!clear) continue;
    double side = cx * (p.y - pc.y) - cy * (p.x - pc.x);
    (side >= 0 ? left : right)++;
  }
  report.packing = std::max(left, right);
  report.packing_bound = 2.0 * (dn + 1.0) * (dn + 1.0) - kRingPackingC * dn;
  report.packing_holds = static_cast<double>(report.packing) >= report.packing_bound;
  return report;
}

}  // namespace localcert
