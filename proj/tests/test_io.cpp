#include "doctest.h"

#include "localcert/io.hpp"

using namespace localcert;

TEST_CASE("graph json round-trip") {
  auto g = LabeledGraph::build({4, 1, 2}, {{4, 1}, {2, 4}}, 64);
  std::string json = graph_to_json(g);
  auto back = graph_from_json(json);
  CHECK(back.vertices() == g.vertices());
  CHECK(back.edges() == g.edges());
  CHECK(back.id_bound() == 64);
  CHECK(graph_to_json(back) == json);
}

TEST_CASE("graph json rejects garbage") {
  CHECK_THROWS_AS((void)graph_from_json("{"), Error);
  CHECK_THROWS_AS((void)graph_from_json("{\"vertices\": []}"), Error);
  CHECK_THROWS_AS(
      (void)graph_from_json(
          "{\"id_bound\": 9, \"vertices\": [1,2], \"edges\": [[1,2,3]]}"),
      Error);
}

TEST_CASE("proof json round-trip") {
  Proof p;
  p.certs[1] = BitString::from_hex("a0:3");
  p.certs[7] = BitString();
  std::string json = proof_to_json(p);
  Proof back = proof_from_json(json);
  CHECK(back.certs == p.certs);
  CHECK(back.max_bits() == 3);
  CHECK_THROWS_AS((void)proof_from_json("{\"certs\": {\"x\": \"a0:3\"}}"), Error);
}

TEST_CASE("embedding csv round-trip keeps full precision") {
  Embedding e;
  e.model = GeometryModel::kPenny;
  e.points[1] = {0.0, 0.0};
  e.points[2] = {0.5, 0.8660254037844386};  // sqrt(3)/2
  std::string csv = embedding_to_csv(e);
  CHECK(csv.substr(0, 7) == "id,x,y\n");
  Embedding back = embedding_from_csv(csv, GeometryModel::kPenny);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[2].x == e.points[2].x);
  CHECK(back.points[2].y == e.points[2].y);
  CHECK(back.model == GeometryModel::kPenny);
}

TEST_CASE("embedding csv rejects malformed rows") {
  CHECK_THROWS_AS((void)embedding_from_csv("x,y\n", GeometryModel::kGrid), Error);
  CHECK_THROWS_AS((void)embedding_from_csv("id,x,y\n1,2\n", GeometryModel::kGrid),
                  Error);
  CHECK_THROWS_AS(
      (void)embedding_from_csv("id,x,y\n1,0,0\n1,1,1\n", GeometryModel::kGrid),
      Error);
}

TEST_CASE("verdict json shape") {
  VerdictMap v;
  v.accepts[3] = true;
  v.accepts[5] = false;
  v.all_accept = false;
  std::string json = verdict_to_json(v);
  CHECK(json.find("\"all\":false") != std::string::npos);
  CHECK(json.find("\"3\":true") != std::string::npos);
  CHECK(json.find("\"5\":false") != std::string::npos);
}
