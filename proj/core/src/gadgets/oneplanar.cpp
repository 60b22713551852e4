#include <string>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {

// Flags toggle edges only, never vertices, so the id layout is the same for
// every (a, b).  Left side: a spine path p_1..p_4 below the separator
// square c_1..c_4, with pendant pairs a_i (on p_1) and a'_i (on p_4) that
// flag i in a ties together.  Right side: four stacked rings glued as one
// thick annulus (cycle, radial and both diagonal edges), pendants b/d on
// the outer ring that flag i in b chains into a fan, and a 12-path q that
// carries the separator's view; w_1, w_2 tie the q path back to the ring.
GadgetInstance one_planar_gadget(int n, std::vector<int> a,
                                 std::vector<int> b) {
  if (n < 1) fail(ErrorCode::kBadIndex, "need n >= 1");
  a = detail::checked_flags(std::move(a), n, "a");
  b = detail::checked_flags(std::move(b), n, "b");
  bool member = detail::disjoint_flags(a, b);

  detail::Assembler as;
  const int m = 2 * n + 6;  // ring length

  std::vector<VertexId> c(5), p(5), q(13), w(3);
  std::vector<VertexId> av(n + 1), ap(n + 1), bv(n + 2), dv(n + 1);
  std::vector<std::vector<VertexId>> ring(5, std::vector<VertexId>(m));

  for (int t = 1; t <= 4; ++t) c[t] = as.slot(true, 's', "c", t);
  for (int t = 1; t <= 4; ++t) p[t] = as.slot(true, 'l', "p", t);
  for (int i = 1; i <= n; ++i) av[i] = as.slot(true, 'l', "a", i);
  for (int i = 1; i <= n; ++i) ap[i] = as.slot(true, 'l', "ap", i);
  for (int r = 1; r <= 4; ++r)
    for (int j = 0; j < m; ++j)
      ring[r][j] = as.slot(true, 'r', "r" + std::to_string(r), j);
  for (int i = 1; i <= n + 1; ++i) bv[i] = as.slot(true, 'r', "b", i);
  for (int i = 1; i <= n; ++i) dv[i] = as.slot(true, 'r', "d", i);
  for (int t = 1; t <= 12; ++t) q[t] = as.slot(true, 'r', "q", t);
  w[1] = as.slot(true, 'r', "w", 1);
  w[2] = as.slot(true, 'r', "w", 2);

  for (int t = 1; t <= 4; ++t) as.edge(c[t], p[t]);
  for (int t = 1; t <= 3; ++t) as.edge(p[t], p[t + 1]);
  for (int i = 1; i <= n; ++i) {
    as.edge(av[i], p[1]);
    as.edge(ap[i], p[4]);
    if (detail::has_flag(a, i)) as.edge(av[i], ap[i]);
  }

  for (int r = 1; r <= 4; ++r)
    for (int j = 0; j < m; ++j) {
      as.edge(ring[r][j], ring[r][(j + 1) % m]);
      if (r < 4) {
        as.edge(ring[r][j], ring[r + 1][j]);
        as.edge(ring[r][j], ring[r + 1][(j + 1) % m]);
        as.edge(ring[r][j], ring[r + 1][(j + m - 1) % m]);
      }
    }

  for (int i = 1; i <= n + 1; ++i) as.edge(bv[i], ring[4][2 * i - 1]);
  for (int i = 1; i <= n; ++i) {
    as.edge(dv[i], ring[4][2 * i]);
    if (detail::has_flag(b, i)) {
      as.edge(bv[i], dv[i]);
      as.edge(dv[i], bv[i + 1]);
    }
  }

  for (int t = 1; t <= 11; ++t) as.edge(q[t], q[t + 1]);
  for (int t = 1; t <= 4; ++t) {
    as.edge(c[t], q[3 * t - 2]);
    as.edge(c[t], q[3 * t - 1]);
    as.edge(c[t], q[3 * t]);
  }
  as.edge(w[1], q[1]);
  as.edge(w[1], ring[4][2 * n + 3]);
  as.edge(w[2], q[12]);
  as.edge(w[2], ring[4][2 * n + 5]);

  std::size_t base = 12 * static_cast<std::size_t>(n) + 47;
  GadgetInstance inst = as.finish(GadgetClass::kOnePlanar, n, a, b, member,
                                  base * base * base, std::nullopt);
  if (!inst.a.empty() || !inst.b.empty())
    detail::check_frontier_match(inst, one_planar_gadget(n, {}, {}));
  return inst;
}

}  // namespace localcert
