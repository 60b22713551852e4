#pragma once

#include <string>

#include "localcert/certify.hpp"
#include "localcert/geometry.hpp"
#include "localcert/graph.hpp"

namespace localcert {

// Graph interchange JSON:
//   {"id_bound": int, "vertices": [int...], "edges": [[int,int]...]}
// vertices ascending, edge pairs smaller id first, edges sorted.
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

// Proof JSON: {"certs": {"<id>": "<hex>:<bitlen>"}}
std::string proof_to_json(const Proof& p);
Proof proof_from_json(const std::string& text);

// Verdict JSON: {"accepts": {"<id>": bool}, "all": bool}
std::string verdict_to_json(const VerdictMap& v);

// Embedding CSV: header "id,x,y", one row per vertex, 17 significant digits.
std::string embedding_to_csv(const Embedding& e);
// model/tol are not part of the CSV; callers supply them.
Embedding embedding_from_csv(const std::string& text, GeometryModel model,
                             double tol = 1e-9);

std::string validation_report_to_json(const ValidationReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace localcert
