#pragma once

#include "ringexp/chain.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/symbolic.hpp"
#include "ringexp/topology.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <string>

namespace ringexp {

// Certificates are JSON payloads {"kind", "context", "verdict"} carrying
// everything a checker needs: the objects involved, the windows, the n_table
// (or its digest when large) and the rejected candidates with their refuters.
// The checker replays windows and evaluates the claims directly; it never runs
// a decider's candidate search.

namespace cert {

using nlohmann::json;

/// mode: "expansive", "positive" or "zero"; scope: "candidate" or "search".
json finite_payload(const RingPtr& ring, const RingAutomorphism* alpha, const std::string& mode,
                    const std::string& scope, const FiniteVerdict& v);
json decomposition_payload(const RingPtr& ring, const LocalDecomposition& d);
json doubling_payload(const RingAutomorphism& alpha, const GeneratorSet& i, std::size_t depth, const DoublingReport& r);
json count_maximals_payload(const GeneratorSet& j, const GeneratorSet& k, std::size_t n, bool holds);

json sym_criterion_payload(const SymGenerator& i, bool value);
json sym_oracle_payload(const SymGenerator& i, const SymOracleOptions& opt, const SymOracleResult& r);
/// candidate and a generator it does not refine (k >= 2), or {R} for k = 1
json sym_minimal_payload(std::size_t k, const SymGenerator& candidate, const SymGenerator& certificate);

/// mode: "expansive", "positive", "single_power" or "minimal" (h ignored).
json top_payload(const FiniteSpace& x, const SpaceMap& h, const std::string& mode, const TopVerdict& v);
json extension_payload(const FiniteSpace& x, PointMask y, const ExtensionVerdict& v);

/// mode: "positive" (single cover), "sweep" or "minimal".
json chain_payload(const std::string& mode, std::int64_t step, std::int64_t m, std::size_t n_max,
                   const ChainVerdict& v);

}  // namespace cert

struct CheckResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Validates payloads. Keeps per-ring and per-window-class caches so that a
/// batch of related payloads is audited without repeated setup.
class CertificateChecker {
 public:
  explicit CertificateChecker(const Bounds& bounds = {});
  ~CertificateChecker();
  CertificateChecker(const CertificateChecker&) = delete;
  CertificateChecker& operator=(const CertificateChecker&) = delete;

  CheckResult check(const nlohmann::json& payload);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CheckResult check_certificate(const nlohmann::json& payload, const Bounds& bounds = {});

}  // namespace ringexp
