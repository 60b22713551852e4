#include "localcert/certify.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace localcert {

std::size_t Proof::max_bits() const {
  std::size_t m = 0;
  for (const auto& [id, cert] : certs) m = std::max(m, cert.size());
  return m;
}

static LocalInput local_input(const LabeledGraph& g, const Proof& p, VerifierMode mode,
                              VertexId v) {
  LocalInput in;
  in.view = g.closed_neighborhood(v);
  if (mode == VerifierMode::kCertificateOnly) in.view.induced_edges.clear();
  in.id_bound = g.id_bound();
  auto own = p.certs.find(v);
  if (own == p.certs.end())
    fail(ErrorCode::kMissingCertificate, "no certificate for vertex " + std::to_string(v));
  in.own_cert = own->second;
  for (VertexId w : in.view.neighbors) {
    auto it = p.certs.find(w);
    if (it == p.certs.end())
      fail(ErrorCode::kMissingCertificate, "no certificate for vertex " + std::to_string(w));
    in.neighbor_certs.emplace(w, it->second);
  }
  return in;
}

VerdictMap run_verifier(const LabeledGraph& g, const Proof& p, const Scheme& s,
                        unsigned jobs) {
  const auto& vs = g.vertices();
  std::vector<char> verdict(vs.size(), 0);

  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      verdict[i] = s.verifier(local_input(g, p, s.mode, vs[i])) ? 1 : 0;
  };

  if (jobs <= 1 || vs.size() < 2 * jobs) {
    worker(0, vs.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (vs.size() + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < vs.size(); lo += chunk)
      pool.emplace_back(worker, lo, std::min(lo + chunk, vs.size()));
    for (auto& t : pool) t.join();
  }

  VerdictMap out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.accepts[vs[i]] = verdict[i] != 0;
    if (!verdict[i]) out.all_accept = false;
  }
  return out;
}

CompletenessReport check_completeness(const Scheme& s,
                                      const std::vector<LabeledGraph>& members) {
  CompletenessReport report;
  for (const auto& g : members) {
    Proof p = s.prover(g);
    report.max_observed_bits = std::max(report.max_observed_bits, p.max_bits());
    if (s.claimed_bits)
      report.max_claimed_bits = std::max(
          report.max_claimed_bits, s.claimed_bits(g.vertex_count(), g.id_bound()));
    VerdictMap verdict = run_verifier(g, p, s);
    if (!verdict.all_accept) {
      std::string who;
      for (const auto& [v, ok] : verdict.accepts)
        if (!ok) {
          who = std::to_string(v);
          break;
        }
      report.failures.push_back("member with " + std::to_string(g.vertex_count()) +
                                " vertices rejected at vertex " + who);
    }
    ++report.members_checked;
  }
  return report;
}

std::optional<Proof> soundness_search(const Scheme& s, const LabeledGraph& g,
                                      std::size_t budget, std::uint64_t seed) {
  std::size_t used = 0;
  auto try_proof = [&](const Proof& p) -> bool {
    if (used >= budget) return false;
    ++used;
    return run_verifier(g, p, s).all_accept;
  };

  // All-identical zero certificates at a few representative lengths.
  std::vector<std::size_t> lengths = {0, 1, 2, 4, 8};
  if (s.claimed_bits) lengths.push_back(s.claimed_bits(g.vertex_count(), g.id_bound()));
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  for (std::size_t len : lengths) {
    if (used >= budget) return std::nullopt;
    Proof p;
    for (VertexId v : g.vertices()) {
      BitString zero;
      for (std::size_t i = 0; i < len; ++i) zero.push_bit(false);
      p.certs[v] = zero;
    }
    if (try_proof(p)) return p;
  }

  if (s.structured_forgeries) {
    for (Proof& p : s.structured_forgeries(g, seed, budget - std::min(used, budget))) {
      if (used >= budget) return std::nullopt;
      if (try_proof(p)) return p;
    }
  }

  std::mt19937_64 rng(seed);
  std::size_t max_len = 8;
  if (s.claimed_bits)
    max_len = std::max<std::size_t>(max_len, s.claimed_bits(g.vertex_count(), g.id_bound()));
  while (used < budget) {
    Proof p;
    for (VertexId v : g.vertices()) {
      std::size_t len = rng() % (max_len + 1);
      BitString cert;
      for (std::size_t i = 0; i < len; ++i) cert.push_bit(rng() & 1);
      p.certs[v] = cert;
    }
    if (try_proof(p)) return p;
  }
  return std::nullopt;
}

}  // namespace localcert
