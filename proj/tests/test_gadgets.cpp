#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "localcert/gadgets.hpp"
#include "localcert/geometry.hpp"

using namespace localcert;

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

bool sets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

// frontier fingerprint: the ids around the shared pair plus the edges they
// induce, which is what a verifier stationed there can see
struct Frontier {
  std::vector<VertexId> verts;
  std::vector<Edge> edges;
  bool operator==(const Frontier& o) const {
    return verts == o.verts && edges == o.edges;
  }
};

Frontier frontier_of(const GadgetInstance& inst) {
  Frontier f;
  f.verts = inst.shared_closed;
  for (std::size_t i = 0; i < f.verts.size(); ++i)
    for (std::size_t j = i + 1; j < f.verts.size(); ++j)
      if (inst.graph.has_edge(f.verts[i], f.verts[j]))
        f.edges.push_back({f.verts[i], f.verts[j]});
  return f;
}

}  // namespace

TEST_CASE("class names round-trip") {
  for (auto c : {GadgetClass::kPenny, GadgetClass::kUnitDistance,
                 GadgetClass::kGrid, GadgetClass::kInducedGrid,
                 GadgetClass::kOnePlanar, GadgetClass::kUnitSquare,
                 GadgetClass::kUnitDiskCorridor}) {
    CHECK(gadget_class_from_name(gadget_class_name(c)) == c);
  }
  CHECK(!gadget_class_from_name("no-such-family").has_value());
}

TEST_CASE("penny sizes follow the closed form") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : subsets(std::min(n, 3))) {
      for (const auto& b : subsets(std::min(n, 3))) {
        auto inst = penny_gadget(n, a, b);
        std::size_t want = 8 * n + 14 + 3 * (a.size() + b.size());
        CHECK(inst.graph.vertex_count() == want);
        CHECK(inst.graph.vertex_count() <=
              class_size_bound(GadgetClass::kPenny, n));
        CHECK(inst.graph.id_bound() ==
              static_cast<VertexId>(8 * n + 14) * (8 * n + 14) * (8 * n + 14));
      }
    }
    CHECK(class_size_bound(GadgetClass::kPenny, n) ==
          static_cast<std::size_t>(14 * n + 14));
    CHECK(class_size_bound(GadgetClass::kPenny, n) <=
          static_cast<std::size_t>(18 * n + 12));
  }
  CHECK(penny_gadget(1, {}, {}).graph.edge_count() == 41);
  CHECK(penny_gadget(2, {}, {}).graph.edge_count() == 57);
  CHECK(penny_gadget(2, {1}, {2}).graph.edge_count() == 71);
  CHECK(penny_gadget(2, {1, 2}, {}).graph.edge_count() == 71);
}

TEST_CASE("grid sizes follow the closed form") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : subsets(std::min(n, 3))) {
      for (const auto& b : subsets(std::min(n, 3))) {
        auto inst = grid_gadget(n, a, b);
        std::size_t want = 12 * n + 14 + 4 * (a.size() + b.size());
        CHECK(inst.graph.vertex_count() == want);
        CHECK(inst.graph.vertex_count() <=
              class_size_bound(GadgetClass::kGrid, n));
        CHECK(inst.graph.edge_count() ==
              18 * n + 19 + 6 * (a.size() + b.size()));
      }
    }
    CHECK(class_size_bound(GadgetClass::kGrid, n) ==
          static_cast<std::size_t>(20 * n + 14));
    CHECK(class_size_bound(GadgetClass::kGrid, n) <=
          static_cast<std::size_t>(20 * n + 18));
  }
}

TEST_CASE("flag choices never move the frontier") {
  for (int n = 1; n <= 3; ++n) {
    auto base_p = frontier_of(penny_gadget(n, {}, {}));
    CHECK(base_p.verts.size() == 6);
    CHECK(base_p.edges.size() == 9);
    auto base_g = frontier_of(grid_gadget(n, {}, {}));
    CHECK(base_g.verts.size() == 6);
    CHECK(base_g.edges.size() == 7);
    for (const auto& a : subsets(n)) {
      for (const auto& b : subsets(n)) {
        CHECK(frontier_of(penny_gadget(n, a, b)) == base_p);
        CHECK(frontier_of(grid_gadget(n, a, b)) == base_g);
      }
    }
  }
}

TEST_CASE("absent flags still reserve their ids") {
  auto bare = penny_gadget(2, {}, {});
  auto flagged = penny_gadget(2, {1}, {2});
  const auto& small = bare.graph.vertices();
  const auto& big = flagged.graph.vertices();
  CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  CHECK(bare.shared == flagged.shared);
}

TEST_CASE("membership is exactly flag disjointness") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : subsets(n)) {
      for (const auto& b : subsets(n)) {
        for (auto cls : {GadgetClass::kPenny, GadgetClass::kUnitDistance}) {
          auto inst = penny_gadget(n, a, b, cls);
          CHECK(inst.member == sets_disjoint(a, b));
          CHECK(inst.canonical.has_value() == inst.member);
        }
        for (auto cls : {GadgetClass::kGrid, GadgetClass::kInducedGrid}) {
          auto inst = grid_gadget(n, a, b, cls);
          CHECK(inst.member == sets_disjoint(a, b));
          CHECK(inst.canonical.has_value() == inst.member);
        }
      }
    }
  }
}

TEST_CASE("member canonicals validate with room to spare") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : subsets(n)) {
      for (const auto& b : subsets(n)) {
        if (!sets_disjoint(a, b)) continue;
        for (auto cls : {GadgetClass::kPenny, GadgetClass::kUnitDistance,
                         GadgetClass::kGrid, GadgetClass::kInducedGrid}) {
          auto inst = gadget(cls, n, a, b);
          REQUIRE(inst.canonical.has_value());
          auto report = validate(inst.graph, *inst.canonical);
          CHECK(report.valid);
          CHECK(report.violations.empty());
          CHECK(report.min_margin >= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("flag builders reject bad indices") {
  CHECK_THROWS_AS(penny_gadget(0, {}, {}), Error);
  CHECK_THROWS_AS(penny_gadget(2, {3}, {}), Error);
  CHECK_THROWS_AS(penny_gadget(2, {0}, {}), Error);
  CHECK_THROWS_AS(penny_gadget(2, {1, 1}, {}), Error);
  CHECK_THROWS_AS(grid_gadget(2, {}, {-1}), Error);
  try {
    penny_gadget(2, {3}, {});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadIndex);
  }
}

TEST_CASE("propagation rebuilds member layouts") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : subsets(n)) {
      for (const auto& b : subsets(n)) {
        if (!sets_disjoint(a, b)) continue;
        auto penny = penny_gadget(n, a, b);
        auto rp = rigid_propagate(penny);
        REQUIRE(rp.embedding.has_value());
        CHECK(!rp.collision.has_value());
        for (const auto& [v, p] : penny.canonical->points) {
          Point q = rp.embedding->points.at(v);
          CHECK(dist(p, q) < 1e-7);
        }
        CHECK(validate(penny.graph, *rp.embedding).valid);

        auto grid = grid_gadget(n, a, b);
        auto rg = rigid_propagate(grid);
        REQUIRE(rg.embedding.has_value());
        CHECK(!rg.collision.has_value());
        for (const auto& [v, p] : grid.canonical->points) {
          Point q = rg.embedding->points.at(v);
          // seed corner moves to the origin, a pure shift
          CHECK(q.x == p.x + 1);
          CHECK(q.y == p.y);
        }
        CHECK(validate(grid.graph, *rg.embedding).valid);
      }
    }
  }
}

TEST_CASE("propagation pins the clash on the overlapping flag") {
  struct Case {
    std::vector<int> a, b;
    int want;
  };
  for (const Case& c : {Case{{2}, {2}, 2},
                        Case{{1, 3}, {3}, 3},
                        Case{{1, 2}, {2, 3}, 2}}) {
    auto penny = penny_gadget(3, c.a, c.b);
    auto rp = rigid_propagate(penny);
    CHECK(!rp.embedding.has_value());
    REQUIRE(rp.collision.has_value());
    CHECK(rp.collision->index == c.want);

    auto grid = grid_gadget(3, c.a, c.b);
    auto rg = rigid_propagate(grid);
    CHECK(!rg.embedding.has_value());
    REQUIRE(rg.collision.has_value());
    CHECK(rg.collision->index == c.want);
  }
}

TEST_CASE("propagation covers larger instances") {
  auto penny = penny_gadget(6, {1, 4}, {2, 6});
  auto rp = rigid_propagate(penny);
  REQUIRE(rp.embedding.has_value());
  CHECK(validate(penny.graph, *rp.embedding).valid);

  auto clash = rigid_propagate(penny_gadget(6, {5}, {5}));
  REQUIRE(clash.collision.has_value());
  CHECK(clash.collision->index == 5);
}

TEST_CASE("lattice search agrees with membership") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& a : subsets(n)) {
      for (const auto& b : subsets(n)) {
        auto inst = grid_gadget(n, a, b);
        CHECK(lattice_embeddable(inst.graph) == inst.member);
      }
    }
  }
}


TEST_CASE("square family sizes follow the frozen laws") {
  for (int k = 1; k <= 4; ++k) {
    auto copy = unit_square_copy(k);
    CHECK(copy.graph.vertex_count() == static_cast<std::size_t>(82 * k + 37));
    CHECK(copy.graph.edge_count() == static_cast<std::size_t>(106 * k + 52));
    CHECK(copy.diagonal.size() == static_cast<std::size_t>(4 * k + 5));
    CHECK(copy.diagonal.front() == copy.v1);
    CHECK(copy.diagonal.back() == copy.v2);

    auto bare = unit_square_gadget(k, {}, {});
    CHECK(bare.graph.vertex_count() == static_cast<std::size_t>(128 * k + 76));
    CHECK(bare.graph.edge_count() == static_cast<std::size_t>(160 * k + 108));
    // each flag turns on a grid pair: 18 vertices, 26 edges
    auto one = unit_square_gadget(k, {1}, {});
    CHECK(one.graph.vertex_count() == bare.graph.vertex_count() + 18);
    CHECK(one.graph.edge_count() == bare.graph.edge_count() + 26);
    CHECK(class_size_bound(GadgetClass::kUnitSquare, k) ==
          static_cast<std::size_t>(164 * k + 76));
  }
  CHECK_THROWS_AS(unit_square_copy(0), Error);
  try {
    unit_square_gadget(9, {}, {});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleParameters);
  }
}

TEST_CASE("square family frontier and membership") {
  auto base = frontier_of(unit_square_gadget(2, {}, {}));
  CHECK(base.verts.size() == 6);
  CHECK(base.edges.size() == 4);
  for (const auto& a : subsets(2)) {
    for (const auto& b : subsets(2)) {
      auto inst = unit_square_gadget(2, a, b);
      CHECK(frontier_of(inst) == base);
      CHECK(inst.member == sets_disjoint(a, b));
      CHECK(inst.canonical.has_value() == inst.member);
    }
  }
  auto bare = unit_square_gadget(2, {}, {});
  auto flagged = unit_square_gadget(2, {2}, {1});
  const auto& small = bare.graph.vertices();
  const auto& big = flagged.graph.vertices();
  CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  CHECK(bare.shared == flagged.shared);
}

TEST_CASE("square family canonicals validate with room to spare") {
  for (int k = 1; k <= 2; ++k) {
    auto copy = unit_square_copy(k);
    auto rep = validate(copy.graph, copy.canonical);
    CHECK(rep.valid);
    CHECK(rep.min_margin >= 1e-6);
    for (const auto& a : subsets(k)) {
      for (const auto& b : subsets(k)) {
        if (!sets_disjoint(a, b)) continue;
        auto inst = unit_square_gadget(k, a, b);
        REQUIRE(inst.canonical.has_value());
        auto r = validate(inst.graph, *inst.canonical);
        CHECK(r.valid);
        CHECK(r.violations.empty());
        CHECK(r.min_margin >= 1e-6);
      }
    }
  }
}

TEST_CASE("drawing family sizes follow the frozen laws") {
  for (int n = 1; n <= 4; ++n) {
    auto bare = one_planar_gadget(n, {}, {});
    CHECK(bare.graph.vertex_count() == static_cast<std::size_t>(12 * n + 47));
    CHECK(bare.graph.edge_count() == static_cast<std::size_t>(30 * n + 113));
    // flags add edges only: one on the left rim, two on the right
    for (int i = 1; i <= n; ++i) {
      auto l = one_planar_gadget(n, {i}, {});
      auto r = one_planar_gadget(n, {}, {i});
      CHECK(l.graph.vertices() == bare.graph.vertices());
      CHECK(l.graph.edge_count() == bare.graph.edge_count() + 1);
      CHECK(r.graph.edge_count() == bare.graph.edge_count() + 2);
    }
    CHECK(class_size_bound(GadgetClass::kOnePlanar, n) ==
          static_cast<std::size_t>(12 * n + 47));
  }
  auto base = frontier_of(one_planar_gadget(2, {}, {}));
  CHECK(base.verts.size() == 20);
  CHECK(base.edges.size() == 30);
  for (const auto& a : subsets(2))
    for (const auto& b : subsets(2)) {
      auto inst = one_planar_gadget(2, a, b);
      CHECK(frontier_of(inst) == base);
      CHECK(inst.member == sets_disjoint(a, b));
      // drawing-style family: no metric canonical even for members
      CHECK(!inst.canonical.has_value());
    }
}

TEST_CASE("corridor sizes, walls and tips") {
  for (int r = 4; r <= 10; ++r) {
    auto c = corridor(r);
    CHECK(c.graph.vertex_count() == static_cast<std::size_t>(2 * r + 10));
    CHECK(c.graph.edge_count() == static_cast<std::size_t>(2 * r + 16));
    CHECK(c.wall_x.size() == static_cast<std::size_t>(r + 1));
    CHECK(c.wall_y.size() == static_cast<std::size_t>(r + 1));
    auto rep = validate(c.graph, c.canonical);
    CHECK(rep.valid);
    CHECK(rep.min_margin >= 1e-6);
  }
  try {
    corridor(3);
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooShortCorridor);
  }
}

TEST_CASE("decorated corridors count and reject like the others") {
  for (int deco = 1; deco <= 2; ++deco) {
    int r = 4 * deco + 8;
    auto bare = corridor_instance(r, {}, {}, deco);
    CHECK(bare.graph.vertex_count() == static_cast<std::size_t>(2 * r + 10));
    CHECK(bare.graph.edge_count() == static_cast<std::size_t>(2 * r + 16));
    for (const auto& a : subsets(deco))
      for (const auto& b : subsets(deco)) {
        auto inst = corridor_instance(r, a, b, deco);
        std::size_t f = a.size() + b.size();
        CHECK(inst.graph.vertex_count() == bare.graph.vertex_count() + 6 * f);
        CHECK(inst.graph.edge_count() == bare.graph.edge_count() + 6 * f);
        CHECK(inst.member == sets_disjoint(a, b));
        CHECK(inst.canonical.has_value() == inst.member);
        if (inst.canonical) {
          auto rep = validate(inst.graph, *inst.canonical);
          CHECK(rep.valid);
          CHECK(rep.min_margin >= 1e-6);
        }
      }
  }
  // walls too short for the decoration count
  CHECK_THROWS_AS(corridor_instance(11, {1}, {}, 1), Error);
}

TEST_CASE("pinched corridor shows the clash a fair layout avoids") {
  auto demo = corridor_pinch(16, {1}, {1}, 2);
  CHECK(!demo.report.valid);
  CHECK(demo.report.violations.size() == 7);
  // the same flags laid out fairly have no metric rendering at all
  CHECK(!corridor_instance(16, {1}, {1}, 2).canonical.has_value());
}

TEST_CASE("no propagation engine for the laid-out families") {
  CHECK_THROWS_AS(rigid_propagate(one_planar_gadget(1, {}, {})), Error);
  CHECK_THROWS_AS(rigid_propagate(unit_square_gadget(1, {}, {})), Error);
}

TEST_CASE("staircase props scan back to their own cells") {
  CHECK_THROWS_AS(prop_graph(0), Error);
  for (int n = 1; n <= 6; ++n) {
    auto p = prop_graph(n);
    CHECK(p.graph.vertex_count() == std::size_t(3 * n + 1));
    CHECK(p.graph.edge_count() == std::size_t(4 * n));
    CHECK(p.spine.size() == std::size_t(n + 1));
    auto rep = validate(p.graph, p.canonical);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
    CHECK(rep.min_margin >= 0.01);

    auto scan = prop_scan(p.graph, p.canonical);
    CHECK(scan.displacement_ok);
    if (n < 3) {
      // either diagonal could be the spine of a short chain, so none reported
      CHECK(scan.props.empty());
      continue;
    }
    REQUIRE(scan.props.size() == 1);
    auto& pr = scan.props[0];
    CHECK(!pr.horizontal);
    CHECK(pr.side_pairs.size() == std::size_t(n));
    CHECK(pr.spine == p.spine);
    // cell 0 sides are the first pair created after the spine, east first
    CHECK(pr.side_pairs[0].first == VertexId(n + 2));
    CHECK(pr.side_pairs[0].second == VertexId(n + 3));
  }
}

TEST_CASE("arc strips keep both chords exact while the turn shrinks") {
  CHECK_THROWS_AS(stripe(0, 1.0, 0.01), Error);
  try {
    stripe(3, 1.0, 0.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleParameters);
  }
  CHECK_THROWS_AS(stripe(3, 1.0, 0.06), Error);   // sides too lopsided
  CHECK_THROWS_AS(stripe(60, 1.0, 0.05), Error);  // arc would close

  for (int len = 1; len <= 8; ++len) {
    auto st = stripe(len, 1.0, 0.01);
    CHECK(st.graph.vertex_count() == std::size_t(2 * len + 2));
    CHECK(st.graph.edge_count() == std::size_t(4 * len + 1));
  }

  auto st = stripe(6, 1.0, 0.01);
  auto d = [&](VertexId a, VertexId b) {
    auto pa = st.arc.points.at(a), pb = st.arc.points.at(b);
    return std::hypot(pa.x - pb.x, pa.y - pb.y);
  };
  for (int i = 0; i < 6; ++i) {
    CHECK(d(st.inner[i], st.inner[i + 1]) == doctest::Approx(0.99).epsilon(1e-9));
    CHECK(d(st.outer[i], st.outer[i + 1]) == doctest::Approx(1.01).epsilon(1e-9));
    CHECK(d(st.inner[i], st.outer[i + 1]) == doctest::Approx(1.0).epsilon(1e-7));
  }
  for (int i = 0; i <= 6; ++i)
    CHECK(d(st.inner[i], st.outer[i]) == doctest::Approx(1.0).epsilon(1e-7));

  // inner rows ride a circle of radius rho, so consecutive triples measure
  // curvature 1/rho, and it drains away as the rungs even out
  double prev = 1e9;
  for (double delta : {0.05, 0.01, 0.002, 0.0004}) {
    auto arc = stripe(6, 1.0, delta);
    double curv = menger_curvature(arc.arc.points.at(arc.inner[0]),
                                   arc.arc.points.at(arc.inner[1]),
                                   arc.arc.points.at(arc.inner[2]));
    CHECK(curv == doctest::Approx(1.0 / arc.rho).epsilon(1e-7));
    CHECK(curv < prev / 2);
    prev = curv;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("ringed balls carry their ring, antipodes and independent set") {
  CHECK_THROWS_AS(ringed_grid(0), Error);
  try {
    ringed_grid(9);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleParameters);
  }

  for (int n = 1; n <= 8; ++n) {
    auto t = ringed_grid(n);
    CHECK(t.n == n);
    std::size_t nn = n;
    CHECK(t.graph.vertex_count() == 8 * nn * nn + 24 * nn + 24);
    CHECK(t.graph.edge_count() == 16 * nn * nn + 40 * nn + 31);
    CHECK(t.ring.size() == 8 * nn + 16);
    CHECK(t.independent.size() == 4 * (nn + 1) * (nn + 1));

    // the ring really is an induced-order cycle of fresh vertices
    std::set<VertexId> seen(t.ring.begin(), t.ring.end());
    CHECK(seen.size() == t.ring.size());
    for (std::size_t i = 0; i < t.ring.size(); ++i)
      CHECK(t.graph.has_edge(t.ring[i], t.ring[(i + 1) % t.ring.size()]));
    CHECK(t.far_a == t.ring.front());
    CHECK(t.far_b == t.ring[t.ring.size() / 2]);
    auto hops = t.graph.distance(t.far_a, t.far_b);
    REQUIRE(hops.has_value());
    CHECK(*hops == std::size_t(4 * n + 5));

    for (std::size_t i = 0; i < t.independent.size(); ++i)
      for (std::size_t j = i + 1; j < t.independent.size(); ++j)
        CHECK(!t.graph.has_edge(t.independent[i], t.independent[j]));

    auto rep = validate(t.graph, t.canonical);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
    CHECK(rep.min_margin >= 1e-3);

    auto sep = ring_separation_check(t.graph, t.canonical, t.far_a, t.far_b,
                                     t.n, t.independent, t.ring);
    CHECK(sep.holds);
    CHECK(sep.packing_holds);
    CHECK(sep.measured >= sep.bound);
  }
}
