#pragma once

// Internal helpers shared by the gadget builders.  Not installed.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "localcert/gadgets.hpp"

namespace localcert::detail {

// Hands out ids in slot order.  Absent decoration slots still consume an
// id, which keeps each half's ids and edges independent of the other
// half's flag set.
class Assembler {
 public:
  // side: 'l' left, 'r' right, 's' separator (counted in both halves)
  VertexId slot(bool present, char side, std::string role, int index = 0,
                std::optional<Point> pos = std::nullopt);

  void edge(VertexId u, VertexId v);

  GadgetInstance finish(GadgetClass cls, int n, std::vector<int> a,
                        std::vector<int> b, bool member, std::size_t id_bound,
                        std::optional<GeometryModel> model, double tol = 1e-9);

 private:
  VertexId next_ = 1;
  std::vector<VertexId> ids_, left_, right_, shared_;
  std::set<std::pair<VertexId, VertexId>> edges_;
  std::map<VertexId, VertexRole> roles_;
  std::map<VertexId, Point> points_;
};

// Validates a flag set: sorted copy, entries in 1..n, no repeats.
std::vector<int> checked_flags(std::vector<int> flags, int n, const char* which);

bool has_flag(const std::vector<int>& flags, int i);

bool disjoint_flags(const std::vector<int>& a, const std::vector<int>& b);

// The separator neighborhood must look the same no matter which flags are
// set; builders compare against their flagless instance after assembly.
void check_frontier_match(const GadgetInstance& inst,
                          const GadgetInstance& base);

}  // namespace localcert::detail
