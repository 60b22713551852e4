#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localcert/bits.hpp"
#include "localcert/graph.hpp"

namespace localcert {

struct Proof {
  std::map<VertexId, BitString> certs;

  std::size_t max_bits() const;
};

// Certificate-only is the base model: a vertex sees its id, its certificate,
// its neighbors' ids and their certificates.  Locally-checkable additionally
// exposes the edges induced on N[v].
enum class VerifierMode { kCertificateOnly, kLocallyCheckable };

// Everything a verifier invocation may legally depend on.  run_verifier
// constructs these; nothing else ever reaches the verifier.
struct LocalInput {
  VertexView view;  // induced_edges cleared in certificate-only mode
  BitString own_cert;
  std::map<VertexId, BitString> neighbor_certs;
  VertexId id_bound = 0;
};

struct VerdictMap {
  std::map<VertexId, bool> accepts;
  bool all_accept = true;
};

using ProverFn = std::function<Proof(const LabeledGraph&)>;
using VerifierFn = std::function<bool(const LocalInput&)>;

struct Scheme {
  std::string name;
  VerifierMode mode = VerifierMode::kCertificateOnly;
  ProverFn prover;
  VerifierFn verifier;
  // Worst-case certificate bits the scheme claims for an n-vertex member.
  std::function<std::size_t(std::size_t n, VertexId id_bound)> claimed_bits;
  // Optional scheme-specific forged proofs for soundness_search to try
  // before falling back to random certificates.
  std::function<std::vector<Proof>(const LabeledGraph&, std::uint64_t seed,
                                   std::size_t max_count)>
      structured_forgeries;
};

// Evaluates the verifier at every vertex with exactly its legal local data.
// jobs > 1 shards vertices across threads (verifiers must be pure).
VerdictMap run_verifier(const LabeledGraph& g, const Proof& p, const Scheme& s,
                        unsigned jobs = 1);

struct CompletenessReport {
  std::size_t members_checked = 0;
  std::vector<std::string> failures;  // descriptions of rejected members
  std::size_t max_observed_bits = 0;
  std::size_t max_claimed_bits = 0;
  bool ok() const { return failures.empty(); }
};

CompletenessReport check_completeness(const Scheme& s,
                                      const std::vector<LabeledGraph>& members);

// Falsification search on a (caller-asserted) non-member: tries all-zero
// certificates of several lengths, the scheme's structured forgeries, then
// seeded random certificates, up to `budget` attempts total.  Returns a proof
// every vertex accepts, or nullopt ("exhausted": no counterexample found).
std::optional<Proof> soundness_search(const Scheme& s, const LabeledGraph& g,
                                      std::size_t budget, std::uint64_t seed);

}  // namespace localcert
