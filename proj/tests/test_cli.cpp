// Drives the installed binary end to end: round trips through the json/csv
// readers, and the documented exit codes (0 ok, 1 reject/witness, 2 usage).

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "localcert/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LOCALCERT_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "localcert_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
  CHECK(run("").rc == 2);
  CHECK(run("gen --class no-such-family --n 2").rc == 2);
  CHECK(run("attack --class penny --n 2 --scheme wat").rc == 2);
}

TEST_CASE("gen, validate, prove, verify round trip through files") {
  auto dir = scratch();
  auto graph = (dir / "p.json").string();
  auto emb = (dir / "p.csv").string();
  auto proof = (dir / "proof.json").string();

  CHECK(run("gen --class penny --n 2 --a 1 --b 2 --out " + graph + " --emb " +
            emb)
            .rc == 0);
  auto g = localcert::graph_from_json(localcert::read_file(graph));
  CHECK(g.vertex_count() == 36);

  auto val = run("validate --graph " + graph + " --emb " + emb +
                 " --model penny");
  CHECK(val.rc == 0);
  auto vrep = json::parse(val.out);
  CHECK(vrep["valid"] == true);
  CHECK(vrep["violations"].empty());

  CHECK(run("prove --scheme st --graph " + graph + " --out " + proof).rc == 0);
  auto parsed = localcert::proof_from_json(localcert::read_file(proof));
  CHECK(parsed.certs.size() == g.vertex_count());

  auto ver = run("verify --scheme st --graph " + graph + " --proof " + proof);
  CHECK(ver.rc == 0);
  CHECK(json::parse(ver.out)["all"] == true);
}

TEST_CASE("validate accepts canonical builds and rejects a nudged point") {
  CHECK(run("validate --class ringed-grid --n 2").rc == 0);
  CHECK(run("validate --class prop --n 3").rc == 0);
  CHECK(run("validate --class unit-square --n 1").rc == 0);

  auto dir = scratch();
  auto graph = (dir / "q.json").string();
  auto emb = (dir / "q.csv").string();
  REQUIRE(run("gen --class penny --n 1 --out " + graph + " --emb " + emb).rc ==
          0);
  auto text = localcert::read_file(emb);
  auto pos = text.find("1,0,0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, "1,0.5,0");
  localcert::write_file(emb, text);
  auto r = run("validate --graph " + graph + " --emb " + emb +
               " --model penny");
  CHECK(r.rc == 1);
  CHECK(json::parse(r.out)["valid"] == false);
}

TEST_CASE("prove reports non-members with exit 1") {
  auto dir = scratch();
  auto graph = (dir / "big.json").string();
  REQUIRE(run("gen --class penny --n 2 --out " + graph).rc == 0);
  auto r = run("prove --scheme tiny:toy --graph " + graph);
  CHECK(r.rc == 1);
  CHECK(json::parse(r.out).contains("error"));
}

TEST_CASE("attack emits a full witness for narrow certificates") {
  auto r = run("attack --class penny --n 8 --scheme demo:p=1");
  CHECK(r.rc == 1);
  auto w = json::parse(r.out);
  CHECK(w["outcome"] == "witness");
  CHECK(w["universe"] == 8);
  CHECK(w["frontier_size"] == 6);
  CHECK(w["spliced_member"] == false);
  CHECK(w["verdict"]["all"] == true);
  for (const char* key : {"set_a", "set_b", "graph_a", "graph_b", "proof_a",
                          "proof_b", "spliced_graph", "spliced_proof"})
    CHECK(w.contains(key));
  CHECK(w["set_a"] != w["set_b"]);

  // the embedded pieces must round trip through the library readers
  auto spliced =
      localcert::graph_from_json(w["spliced_graph"].dump());
  auto proof = localcert::proof_from_json(w["spliced_proof"].dump());
  CHECK(proof.certs.size() == spliced.vertex_count());
  CHECK(w["verdict"]["accepts"].size() == spliced.vertex_count());
}

TEST_CASE("attack reports bound-respected with exit 0 when certs are wide") {
  auto r = run("attack --class penny --n 4 --scheme demo:p=64");
  CHECK(r.rc == 0);
  auto w = json::parse(r.out);
  CHECK(w["outcome"] == "bound-respected");
  CHECK(w["max_row_bits"] == 384);
  CHECK(!w.contains("set_a"));
}

TEST_CASE("measure prints csv, header only for an empty range") {
  auto empty = run("measure --class penny --scheme demo:p=1 --n-min 2 "
                   "--n-max 1");
  CHECK(empty.rc == 0);
  CHECK(empty.out == "n,vertices,frontier_bits,outcome\n");

  auto r = run("measure --class grid --scheme demo:p=1 --n-min 1 --n-max 2 "
               "--oracle");
  CHECK(r.rc == 0);
  CHECK(r.out.find("n,vertices,frontier_bits,outcome,oracle_agree\n") == 0);
  CHECK(r.out.find("1,30,6,witness,yes\n") != std::string::npos);
  CHECK(r.out.find("2,46,6,witness,yes\n") != std::string::npos);

  CHECK(run("measure --class penny --scheme st --n-min 1 --n-max 1 --oracle")
            .rc == 2);
}

TEST_CASE("lemma-check runs the numeric suite") {
  auto r = run("lemma-check --which midpoint-shortcut --samples 200 --seed 5");
  CHECK(r.rc == 0);
  auto arr = json::parse(r.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["check"] == "midpoint-shortcut");
  CHECK(arr[0]["holds"] == true);

  CHECK(run("lemma-check --which no-such-check").rc == 2);

  auto ring = run("lemma-check --which ring-separation --n 2");
  CHECK(ring.rc == 0);
  CHECK(json::parse(ring.out).size() == 2);
}
