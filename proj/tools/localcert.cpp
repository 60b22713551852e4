// localcert: generators, validators, provers/verifiers, lemma checks, and the
// certificate splicing attack, behind one executable.
//
// Exit codes: 0 success / valid / accept, 1 invalid / reject / witness found,
// 2 usage error.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "localcert/attack.hpp"
#include "localcert/gadgets.hpp"
#include "localcert/geometry.hpp"
#include "localcert/io.hpp"
#include "localcert/schemes.hpp"

using nlohmann::json;
using namespace localcert;

namespace {

struct UsageError {
  std::string message;
};

[[noreturn]] void usage_fail(std::string msg) { throw UsageError{std::move(msg)}; }

void emit(std::string text, const std::string& out) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_file(out, text);
}

Scheme parse_scheme(const std::string& name) {
  if (name == "st" || name == "spanning-tree") return spanning_tree_scheme();
  if (name == "tiny:toy") return tiny_scheme(toy_catalog());
  if (name == "tiny:connected") return tiny_scheme(connected_catalog());
  if (name.rfind("demo:p=", 0) == 0) {
    int p = -1;
    try {
      p = std::stoi(name.substr(7));
    } catch (const std::exception&) {
      usage_fail("bad scheme spec '" + name + "'");
    }
    return demo_scheme(p);
  }
  usage_fail("unknown scheme '" + name +
             "'; try st, tiny:toy, tiny:connected or demo:p=<bits>");
}

std::vector<int> full_set(int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i) out.push_back(i);
  return out;
}

std::vector<int> complement_set(const std::vector<int>& a, int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) out.push_back(i);
  return out;
}

struct Built {
  LabeledGraph graph;
  std::optional<Embedding> canonical;
};

Built build_named(const std::string& cls_name, int n,
                  const std::vector<int>& a, const std::vector<int>& b,
                  double k, double delta) {
  if (cls_name == "prop") {
    auto p = prop_graph(n);
    return {std::move(p.graph), std::move(p.canonical)};
  }
  if (cls_name == "stripe") {
    auto s = stripe(n, k, delta);
    return {std::move(s.graph), std::move(s.arc)};
  }
  if (cls_name == "ringed-grid") {
    auto t = ringed_grid(n);
    return {std::move(t.graph), std::move(t.canonical)};
  }
  auto cls = gadget_class_from_name(cls_name);
  if (!cls)
    usage_fail("unknown class '" + cls_name +
               "'; gadget classes plus prop, stripe, ringed-grid");
  auto inst = gadget(*cls, n, a, b);
  return {std::move(inst.graph), std::move(inst.canonical)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local certification toolbox"};
  app.require_subcommand(1);

  std::string cls, out, emb_out, graph_in, emb_in, proof_in, model_name,
      scheme_name, which = "all";
  int n = 1, jobs = 1, nmin = 1, nmax = 0;
  std::vector<int> a, b;
  double stripe_k = 1.0, stripe_delta = 0.01;
  double x = 400.0, delta = 0.5, rho = 2.0, tol = 1e-9;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool oracle = false;
  int rc = 0;

  auto* gen = app.add_subcommand("gen", "build an instance, write graph json");
  gen->add_option("--class", cls, "family name")->required();
  gen->add_option("--n", n, "size parameter")->required();
  gen->add_option("--a", a, "left flag set")->delimiter(',');
  gen->add_option("--b", b, "right flag set")->delimiter(',');
  gen->add_option("--k", stripe_k, "stripe: mid chord length");
  gen->add_option("--delta", stripe_delta, "stripe: chord imbalance");
  gen->add_option("--out", out, "graph json path (default stdout)");
  gen->add_option("--emb", emb_out, "also write the canonical embedding csv");
  gen->callback([&] {
    auto built = build_named(cls, n, a, b, stripe_k, stripe_delta);
    if (!emb_out.empty()) {
      if (!built.canonical)
        usage_fail("instance has no canonical embedding to write");
      write_file(emb_out, embedding_to_csv(*built.canonical));
    }
    emit(graph_to_json(built.graph), out);
  });

  auto* val = app.add_subcommand("validate", "check an embedding against its model");
  val->add_option("--class", cls, "build this family's canonical instance");
  val->add_option("--n", n, "size parameter");
  val->add_option("--a", a, "left flag set")->delimiter(',');
  val->add_option("--b", b, "right flag set")->delimiter(',');
  val->add_option("--k", stripe_k, "stripe: mid chord length");
  val->add_option("--delta", stripe_delta, "stripe: chord imbalance");
  val->add_option("--graph", graph_in, "graph json to validate instead");
  val->add_option("--emb", emb_in, "embedding csv (with --graph)");
  val->add_option("--model", model_name, "geometry model (with --graph)");
  val->add_option("--tol", tol, "comparison tolerance");
  val->add_option("--out", out, "report path (default stdout)");
  val->callback([&] {
    std::optional<LabeledGraph> g;
    Embedding e;
    if (!graph_in.empty()) {
      if (emb_in.empty() || model_name.empty())
        usage_fail("--graph needs --emb and --model");
      auto model = model_from_string(model_name);
      if (!model) usage_fail("unknown model '" + model_name + "'");
      g = graph_from_json(read_file(graph_in));
      e = embedding_from_csv(read_file(emb_in), *model, tol);
    } else {
      if (cls.empty()) usage_fail("need --class/--n or --graph/--emb/--model");
      auto built = build_named(cls, n, a, b, stripe_k, stripe_delta);
      if (!built.canonical)
        usage_fail("instance has no canonical embedding to validate");
      g = std::move(built.graph);
      e = std::move(*built.canonical);
    }
    auto rep = validate(*g, e);
    emit(validation_report_to_json(rep), out);
    rc = rep.valid ? 0 : 1;
  });

  auto* prove = app.add_subcommand("prove", "run a scheme's prover");
  prove->add_option("--scheme", scheme_name, "scheme spec")->required();
  prove->add_option("--graph", graph_in, "graph json path");
  prove->add_option("--class", cls, "or build this family");
  prove->add_option("--n", n, "size parameter");
  prove->add_option("--a", a, "left flag set")->delimiter(',');
  prove->add_option("--b", b, "right flag set")->delimiter(',');
  prove->add_option("--out", out, "proof path (default stdout)");
  prove->callback([&] {
    auto scheme = parse_scheme(scheme_name);
    std::optional<LabeledGraph> g;
    if (!graph_in.empty())
      g = graph_from_json(read_file(graph_in));
    else if (!cls.empty())
      g = build_named(cls, n, a, b, stripe_k, stripe_delta).graph;
    else
      usage_fail("need --graph or --class/--n");
    try {
      emit(proof_to_json(scheme.prover(*g)), out);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNotMember) throw;
      emit(json{{"error", "not a member"}, {"scheme", scheme.name}}.dump(2),
           out);
      rc = 1;
    }
  });

  auto* verify = app.add_subcommand("verify", "run a scheme's verifier everywhere");
  verify->add_option("--scheme", scheme_name, "scheme spec")->required();
  verify->add_option("--graph", graph_in, "graph json path")->required();
  verify->add_option("--proof", proof_in, "proof json path")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out, "verdict path (default stdout)");
  verify->callback([&] {
    auto scheme = parse_scheme(scheme_name);
    auto g = graph_from_json(read_file(graph_in));
    auto proof = proof_from_json(read_file(proof_in));
    auto verdict = run_verifier(g, proof, scheme, jobs < 1 ? 1 : jobs);
    emit(verdict_to_json(verdict), out);
    rc = verdict.all_accept ? 0 : 1;
  });

  auto* attack = app.add_subcommand("attack", "pigeonhole the frontier and splice");
  attack->add_option("--class", cls, "gadget class")->required();
  attack->add_option("--n", n, "size parameter")->required();
  attack->add_option("--scheme", scheme_name, "scheme spec")->required();
  attack->add_option("--jobs", jobs, "worker threads");
  attack->add_option("--out", out, "witness path (default stdout)");
  attack->callback([&] {
    auto cls_id = gadget_class_from_name(cls);
    if (!cls_id) usage_fail("unknown gadget class '" + cls + "'");
    auto scheme = parse_scheme(scheme_name);
    auto outcome = run_attack(*cls_id, n, scheme, jobs < 1 ? 1 : jobs);
    json j{{"class", cls},
           {"n", n},
           {"scheme", scheme.name},
           {"universe", outcome.universe},
           {"frontier_size", outcome.frontier_size},
           {"max_row_bits", outcome.max_row_bits}};
    if (!outcome.witness) {
      j["outcome"] = "bound-respected";
      emit(j.dump(2), out);
      return;
    }
    const auto& w = *outcome.witness;
    int universe = flag_universe(*cls_id, n);
    auto ga = gadget(*cls_id, n, w.set_a, complement_set(w.set_a, universe));
    auto gb = gadget(*cls_id, n, w.set_b, complement_set(w.set_b, universe));
    j["outcome"] = "witness";
    j["set_a"] = w.set_a;
    j["set_b"] = w.set_b;
    j["left_is_a"] = w.left_is_a;
    j["graph_a"] = json::parse(graph_to_json(ga.graph));
    j["graph_b"] = json::parse(graph_to_json(gb.graph));
    j["proof_a"] = json::parse(proof_to_json(scheme.prover(ga.graph)));
    j["proof_b"] = json::parse(proof_to_json(scheme.prover(gb.graph)));
    j["spliced_member"] = w.spliced.member;
    j["spliced_graph"] = json::parse(graph_to_json(w.spliced.graph));
    j["spliced_proof"] = json::parse(proof_to_json(w.proof));
    j["verdict"] = json::parse(verdict_to_json(w.verdict));
    emit(j.dump(2), out);
    rc = 1;
  });

  auto* lemma = app.add_subcommand("lemma-check", "numeric lemma spot checks");
  lemma->add_option("--which", which,
                    "midpoint-shortcut | tight-path-regularity | "
                    "curvature-invariance | ring-separation | "
                    "prop-displacement | all");
  lemma->add_option("--samples", samples, "sample count per check");
  lemma->add_option("--seed", seed, "rng seed");
  lemma->add_option("--n", n, "size ceiling for the instance-based checks");
  lemma->add_option("--x", x, "midpoint shortcut: base distance");
  lemma->add_option("--delta", delta, "midpoint shortcut: detour slack");
  lemma->add_option("--rho", rho, "midpoint shortcut: relocation radius");
  lemma->add_option("--out", out, "report path (default stdout)");
  lemma->callback([&] {
    json arr = json::array();
    bool all_hold = true;
    bool matched = false;
    auto want = [&](const char* name) {
      bool hit = which == "all" || which == name;
      matched = matched || hit;
      return hit;
    };
    auto add = [&](const char* name, bool holds, json extra) {
      extra["check"] = name;
      extra["holds"] = holds;
      arr.push_back(std::move(extra));
      all_hold = all_hold && holds;
    };
    if (want("midpoint-shortcut")) {
      auto r = midpoint_shortcut_check(x, delta, rho, samples, seed);
      add("midpoint-shortcut", r.holds,
          {{"worst_ratio", r.worst_ratio},
           {"samples", r.samples},
           {"detail", r.detail}});
    }
    if (want("tight-path-regularity")) {
      auto r = tight_path_regularity_check(samples, seed);
      add("tight-path-regularity", r.holds,
          {{"worst_ratio", r.worst_ratio},
           {"samples", r.samples},
           {"detail", r.detail}});
    }
    if (want("curvature-invariance")) {
      auto r = curvature_invariance_check(samples, seed);
      add("curvature-invariance", r.holds,
          {{"worst_ratio", r.worst_ratio},
           {"samples", r.samples},
           {"detail", r.detail}});
    }
    if (want("ring-separation")) {
      int cap = std::clamp(n, 1, 8);
      for (int nn = 1; nn <= cap; ++nn) {
        auto t = ringed_grid(nn);
        auto sep = ring_separation_check(t.graph, t.canonical, t.far_a,
                                         t.far_b, t.n, t.independent, t.ring);
        add("ring-separation", sep.holds && sep.packing_holds,
            {{"n", nn},
             {"measured", sep.measured},
             {"bound", sep.bound},
             {"packing", sep.packing},
             {"packing_bound", sep.packing_bound}});
      }
    }
    if (want("prop-displacement")) {
      int cap = std::clamp(n, 1, 8);
      for (int k = 1; k <= cap; ++k) {
        auto copy = unit_square_copy(k);
        auto scan = prop_scan(copy.graph, copy.canonical);
        add("prop-displacement",
            scan.displacement_ok && scan.props.size() == 2,
            {{"k", k},
             {"props", scan.props.size()},
             {"failures", scan.failures}});
      }
    }
    if (!matched) usage_fail("unknown check '" + which + "'");
    emit(arr.dump(2), out);
    rc = all_hold ? 0 : 1;
  });

  auto* measure = app.add_subcommand("measure", "attack outcome per size, csv");
  measure->add_option("--class", cls, "gadget class")->required();
  measure->add_option("--scheme", scheme_name, "scheme spec")->required();
  measure->add_option("--n-min", nmin, "first size");
  measure->add_option("--n-max", nmax, "last size (empty range: header only)");
  measure->add_option("--jobs", jobs, "worker threads");
  measure->add_flag("--oracle", oracle,
                    "grid families, n <= 3: cross-check membership against "
                    "the exhaustive lattice embedder");
  measure->add_option("--out", out, "csv path (default stdout)");
  measure->callback([&] {
    auto cls_id = gadget_class_from_name(cls);
    if (!cls_id) usage_fail("unknown gadget class '" + cls + "'");
    if (oracle && *cls_id != GadgetClass::kGrid &&
        *cls_id != GadgetClass::kInducedGrid)
      usage_fail("--oracle only applies to the grid families");
    auto scheme = parse_scheme(scheme_name);
    std::string csv = oracle ? "n,vertices,frontier_bits,outcome,oracle_agree\n"
                             : "n,vertices,frontier_bits,outcome\n";
    for (int nn = nmin; nn <= nmax; ++nn) {
      auto outcome = run_attack(*cls_id, nn, scheme, jobs < 1 ? 1 : jobs);
      int universe = flag_universe(*cls_id, nn);
      auto member = gadget(*cls_id, nn, {}, full_set(universe));
      std::string row = std::to_string(nn) + "," +
                        std::to_string(member.graph.vertex_count()) + "," +
                        std::to_string(outcome.max_row_bits) + "," +
                        (outcome.witness ? "witness" : "bound-respected");
      if (oracle) {
        if (nn > 3) usage_fail("--oracle needs n <= 3");
        bool agree = true;
        for (std::uint32_t am = 0; am < (1u << nn); ++am)
          for (std::uint32_t bm = 0; bm < (1u << nn); ++bm) {
            std::vector<int> fa, fb;
            for (int i = 0; i < nn; ++i) {
              if (am & (1u << i)) fa.push_back(i + 1);
              if (bm & (1u << i)) fb.push_back(i + 1);
            }
            auto inst = gadget(*cls_id, nn, fa, fb);
            agree = agree && lattice_embeddable(inst.graph) == inst.member;
          }
        row += agree ? ",yes" : ",no";
      }
      csv += row + "\n";
    }
    emit(csv, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
