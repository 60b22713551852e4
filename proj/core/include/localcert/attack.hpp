#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "localcert/certify.hpp"
#include "localcert/gadgets.hpp"

namespace localcert {

// How many decoration flags one side of an instance of this class and size
// can carry.
int flag_universe(GadgetClass cls, int n);

// Honest certificates near the separator, one row per left flag set A; the
// right side always carries the complement, so every row is a member run.
// Row bits are the certificates of N[S] concatenated in ascending id order.
struct FrontierTable {
  std::map<std::vector<int>, BitString> rows;
  std::size_t frontier_size = 0;  // |N[S]|
  std::size_t max_bits = 0;       // widest row
};

FrontierTable build_table(GadgetClass cls, int n, const Scheme& scheme,
                          unsigned jobs = 1);

// First pair of distinct flag sets with identical frontier bits, minimizing
// (A, A') lexicographically; nullopt when all rows differ.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_collision(
    const FrontierTable& table);

// A universally accepted proof on a non-member.  One colliding run donates
// its left half and certificates, the other donates the right; the verifier
// cannot see the difference from any single vertex.
struct FoolingWitness {
  std::vector<int> set_a, set_b;  // the colliding pair as passed in
  bool left_is_a = true;          // false: the set_b run supplies the left
  GadgetInstance spliced;
  Proof proof;
  VerdictMap verdict;  // rechecked: every vertex accepts
};

FoolingWitness splice_and_verify(GadgetClass cls, int n, const Scheme& scheme,
                                 const std::vector<int>& a,
                                 const std::vector<int>& b, unsigned jobs = 1);

struct AttackOutcome {
  std::size_t universe = 0;  // rows enumerated: 2^universe
  std::size_t frontier_size = 0;
  std::size_t max_row_bits = 0;
  std::optional<FoolingWitness> witness;

  // No frontier collision: certificates were wide enough for this size.
  bool bound_respected() const { return !witness.has_value(); }
};

AttackOutcome run_attack(GadgetClass cls, int n, const Scheme& scheme,
                         unsigned jobs = 1);

// Deliberately weak scheme for demonstrations: every vertex carries the same
// p-bit slice of a whole-graph fingerprint and neighbors must agree on it.
Scheme demo_scheme(int p);

}  // namespace localcert
