#include <cmath>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {

StripeArc stripe(int len, double k, double delta) {
  if (len < 1) fail(ErrorCode::kBadIndex, "need at least one rung");
  if (!(delta > 0))
    fail(ErrorCode::kInfeasibleParameters,
         "delta must be positive; the flat strip has no arc");
  if (!(k >= 20 * delta))
    fail(ErrorCode::kInfeasibleParameters,
         "sides drift too far from equilateral: need k >= 20 delta");

  // Half turn angle t per rung solves
  //   (k-d)^2 + (k+d)^2 - 2 (k^2 - d^2) cos t = 4 k^2 sin^2 t,
  // the cross edge condition once both chord lengths pin their radii.
  // Positive at 0+ (4 d^2), negative at pi/2, so bisect.
  auto f = [&](double t) {
    double c = std::cos(t);
    return (k - delta) * (k - delta) + (k + delta) * (k + delta) -
           2 * (k * k - delta * delta) * c - 4 * k * k * (1 - c * c);
  };
  double lo = 0, hi = M_PI / 2;
  while (hi - lo > 1e-10) {
    double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  double t = (lo + hi) / 2;

  StripeArc out;
  out.step_angle = 2 * t;
  out.rho = (k - delta) / (2 * std::sin(t));
  out.rho_outer = (k + delta) / (2 * std::sin(t));
  if (len * out.step_angle >= 2 * M_PI)
    fail(ErrorCode::kInfeasibleParameters, "arc closes on itself");

  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  Embedding emb;
  VertexId next = 1;
  auto put = [&](double r, double ang) {
    ids.push_back(next);
    emb.points[next] = {r * std::cos(ang), r * std::sin(ang)};
    return next++;
  };

  // apex up; outer row lags the inner one by half a step
  double phi = M_PI / 2;
  for (int i = 0; i <= len; ++i)
    out.inner.push_back(put(out.rho, phi + i * out.step_angle));
  for (int i = 0; i <= len; ++i)
    out.outer.push_back(put(out.rho_outer, phi + i * out.step_angle - t));
  for (int i = 0; i < len; ++i) {
    edges.push_back({out.inner[i], out.inner[i + 1]});
    edges.push_back({out.outer[i], out.outer[i + 1]});
    edges.push_back({out.inner[i], out.outer[i + 1]});
  }
  for (int i = 0; i <= len; ++i) edges.push_back({out.inner[i], out.outer[i]});

  std::size_t v = ids.size();
  out.graph = LabeledGraph::build(std::move(ids), std::move(edges),
                                  static_cast<VertexId>(v * v * v));
  out.arc = std::move(emb);
  return out;
}

}  // namespace localcert
