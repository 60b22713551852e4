#include "doctest.h"

#include <algorithm>
#include <vector>

#include "localcert/attack.hpp"
#include "localcert/schemes.hpp"

using namespace localcert;

namespace {

std::vector<int> comp(const std::vector<int>& a, int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) out.push_back(i);
  return out;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return true;
  return false;
}

}  // namespace

TEST_CASE("one-bit certificates collide and the splice fools every vertex") {
  auto scheme = demo_scheme(1);
  auto out = run_attack(GadgetClass::kPenny, 8, scheme, 4);
  CHECK(out.universe == 8);
  CHECK(out.frontier_size == 6);
  CHECK(out.max_row_bits == 6);
  REQUIRE(out.witness.has_value());

  auto& w = *out.witness;
  CHECK(w.set_a != w.set_b);
  CHECK(!w.spliced.member);
  CHECK(intersects(w.spliced.a, w.spliced.b));
  CHECK(w.verdict.all_accept);
  CHECK(w.verdict.accepts.size() == w.spliced.graph.vertex_count());
  for (auto& [v, ok] : w.verdict.accepts) CHECK(ok);
  CHECK(w.proof.certs.size() == w.spliced.graph.vertex_count());

  // the halves restrict bit-exactly to the honest runs that donated them
  const auto& left_set = w.left_is_a ? w.set_a : w.set_b;
  const auto& right_set = w.left_is_a ? w.set_b : w.set_a;
  auto gl = gadget(GadgetClass::kPenny, 8, left_set, comp(left_set, 8));
  auto gr = gadget(GadgetClass::kPenny, 8, right_set, comp(right_set, 8));
  auto pl = scheme.prover(gl.graph);
  auto pr = scheme.prover(gr.graph);
  for (VertexId v : w.spliced.left) CHECK(w.proof.certs.at(v) == pl.certs.at(v));
  for (VertexId v : w.spliced.right)
    CHECK(w.proof.certs.at(v) == pr.certs.at(v));
}

TEST_CASE("frontier tables enumerate every flag set and collide stably") {
  auto scheme = demo_scheme(1);
  auto small = build_table(GadgetClass::kPenny, 1, scheme);
  CHECK(small.rows.size() == 2);

  auto t1 = build_table(GadgetClass::kPenny, 4, scheme, 1);
  auto t4 = build_table(GadgetClass::kPenny, 4, scheme, 4);
  CHECK(t1.rows.size() == 16);
  CHECK(t1.rows == t4.rows);
  CHECK(t1.frontier_size == 6);
  CHECK(t1.max_bits == 6);
  CHECK(t1.rows.count({}) == 1);
  CHECK(t1.rows.count({1, 2, 3, 4}) == 1);
  for (auto& [key, bits] : t1.rows) CHECK(bits.size() == 6);

  auto c1 = find_collision(t1);
  auto c4 = find_collision(t4);
  REQUIRE(c1.has_value());
  CHECK(c1 == c4);
  CHECK(c1->first < c1->second);
  CHECK(t1.rows.at(c1->first) == t1.rows.at(c1->second));
}

TEST_CASE("wide certificates leave the table collision-free") {
  auto out = run_attack(GadgetClass::kPenny, 4, demo_scheme(64));
  CHECK(out.bound_respected());
  CHECK(out.max_row_bits == 6 * 64);

  // the catalog scheme writes the whole structure into every certificate,
  // so no two flag sets can share a frontier row
  auto controlled =
      run_attack(GadgetClass::kPenny, 4, tiny_scheme(connected_catalog()), 4);
  CHECK(controlled.bound_respected());
  CHECK(controlled.max_row_bits > 1000);
}

TEST_CASE("narrow frontiers guarantee a witness at every larger size") {
  for (int universe = 4; universe <= 10; ++universe) {
    auto out = run_attack(GadgetClass::kPenny, universe, demo_scheme(1), 4);
    CHECK(out.frontier_size == 6);
    // once 2^(frontier bits) runs out of room the collision is forced
    if (out.frontier_size * 1 < std::size_t(universe))
      CHECK(out.witness.has_value());
  }
  // zero-bit certificates force it immediately, whatever the family
  for (GadgetClass cls : {GadgetClass::kGrid, GadgetClass::kOnePlanar,
                          GadgetClass::kUnitSquare}) {
    auto out = run_attack(cls, 2, demo_scheme(0));
    REQUIRE(out.witness.has_value());
    CHECK(!out.witness->spliced.member);
    CHECK(out.witness->verdict.all_accept);
  }
  auto corridor_out = run_attack(GadgetClass::kUnitDiskCorridor, 20,
                                 demo_scheme(0));
  CHECK(corridor_out.universe == 3);
  REQUIRE(corridor_out.witness.has_value());
  CHECK(corridor_out.witness->verdict.all_accept);
}

TEST_CASE("splice preconditions and failure modes") {
  try {
    splice_and_verify(GadgetClass::kPenny, 4, demo_scheme(1), {1}, {1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadIndex);
  }
  try {
    // distinct fingerprints at full width: nothing to splice
    splice_and_verify(GadgetClass::kPenny, 4, demo_scheme(64), {1}, {2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpliceMismatch);
  }
  try {
    // a verifier that keys on a vertex id accepts the honest runs it never
    // sees and must be caught red-handed after the splice
    auto rigged = demo_scheme(0);
    rigged.verifier = [](const LocalInput& in) { return in.view.center != 1; };
    splice_and_verify(GadgetClass::kGrid, 3, rigged, {}, {1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnexpectedRejection);
  }
  CHECK_THROWS_AS(demo_scheme(-1), Error);
  CHECK_THROWS_AS(demo_scheme(65), Error);
  CHECK_THROWS_AS(build_table(GadgetClass::kPenny, 17, demo_scheme(0)), Error);
}
