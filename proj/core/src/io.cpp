#include "localcert/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace localcert {

using nlohmann::json;

static json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::kFormatError, "malformed JSON");
  return j;
}

std::string graph_to_json(const LabeledGraph& g) {
  json j;
  j["id_bound"] = g.id_bound();
  j["vertices"] = g.vertices();
  auto& edges = j["edges"] = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("id_bound") || !j.contains("vertices") ||
      !j.contains("edges"))
    fail(ErrorCode::kFormatError, "graph JSON needs id_bound, vertices, edges");
  try {
    std::vector<VertexId> ids = j["vertices"].get<std::vector<VertexId>>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        fail(ErrorCode::kFormatError, "edge entries are [u, v] pairs");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return LabeledGraph::build(std::move(ids), std::move(edges),
                               j["id_bound"].get<VertexId>());
  } catch (const json::exception& ex) {
    fail(ErrorCode::kFormatError, std::string("graph JSON: ") + ex.what());
  }
}

std::string proof_to_json(const Proof& p) {
  json certs = json::object();
  for (const auto& [id, cert] : p.certs) certs[std::to_string(id)] = cert.to_hex();
  json j;
  j["certs"] = certs;
  return j.dump();
}

Proof proof_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("certs") || !j["certs"].is_object())
    fail(ErrorCode::kFormatError, "proof JSON needs a certs object");
  Proof p;
  for (const auto& [key, value] : j["certs"].items()) {
    VertexId id = 0;
    try {
      std::size_t used = 0;
      id = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument("trail");
    } catch (const std::exception&) {
      fail(ErrorCode::kFormatError, "proof cert key is not a vertex id: " + key);
    }
    if (!value.is_string())
      fail(ErrorCode::kFormatError, "proof cert values are hex strings");
    p.certs[id] = BitString::from_hex(value.get<std::string>());
  }
  return p;
}

std::string verdict_to_json(const VerdictMap& v) {
  json accepts = json::object();
  for (const auto& [id, ok] : v.accepts) accepts[std::to_string(id)] = ok;
  json j;
  j["accepts"] = accepts;
  j["all"] = v.all_accept;
  return j.dump();
}

static std::string fmt_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string embedding_to_csv(const Embedding& e) {
  std::string out = "id,x,y\n";
  for (const auto& [id, pt] : e.points) {
    out += std::to_string(id);
    out += ',';
    out += fmt_double(pt.x);
    out += ',';
    out += fmt_double(pt.y);
    out += '\n';
  }
  return out;
}

Embedding embedding_from_csv(const std::string& text, GeometryModel model, double tol) {
  Embedding e;
  e.model = model;
  e.tol = tol;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.substr(0, 6) != "id,x,y")
    fail(ErrorCode::kFormatError, "embedding CSV must start with id,x,y header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    unsigned long long id = 0;
    double x = 0, y = 0;
    char trail = 0;
    if (std::sscanf(line.c_str(), "%llu,%lf,%lf%c", &id, &x, &y, &trail) != 3)
      fail(ErrorCode::kFormatError,
           "embedding CSV line " + std::to_string(lineno) + " is not id,x,y");
    if (!e.points.emplace(id, Point{x, y}).second)
      fail(ErrorCode::kFormatError,
           "embedding CSV repeats vertex " + std::to_string(id));
  }
  return e;
}

std::string validation_report_to_json(const ValidationReport& r) {
  auto issues = [](const std::vector<PairIssue>& list) {
    json arr = json::array();
    for (const auto& issue : list)
      arr.push_back({{"u", issue.u},
                     {"v", issue.v},
                     {"measured", issue.measured},
                     {"relation", issue.relation}});
    return arr;
  };
  json j;
  j["valid"] = r.valid;
  j["violations"] = issues(r.violations);
  j["fragile_pairs"] = issues(r.fragile_pairs);
  j["min_margin"] = r.min_margin;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kFormatError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kFormatError, "cannot write " + path);
  out << content;
}

}  // namespace localcert
