#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ringexp::suites {

struct SuiteOptions {
  std::uint64_t seed = 0;
  bool keep_payloads = true;
};

/// Outcome of one acceptance suite. Failures beyond the first 25 are only
/// counted.
struct SuiteReport {
  int id = 0;
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;
  double budget = 0.0;  ///< seconds, 0 when unbounded
  std::vector<nlohmann::json> payloads;

  bool pass() const { return failed == 0 && checks > 0; }
  bool expect(bool ok, const std::string& what);
  void note(std::string s) { notes.push_back(std::move(s)); }
  void keep(nlohmann::json payload, const SuiteOptions& opt) {
    if (opt.keep_payloads) payloads.push_back(std::move(payload));
  }
  nlohmann::json summary() const;
};

constexpr int kSuiteCount = 11;

/// Short names in suite order: "generators", "decider-oracle", ...
const std::vector<std::string>& suite_names();
/// 1-based id for a name or number, 0 when unknown.
int suite_id(const std::string& name);

SuiteReport run_generators_suite(const SuiteOptions& opt);      // 1
SuiteReport run_decider_oracle_suite(const SuiteOptions& opt);  // 2
SuiteReport run_propositions_suite(const SuiteOptions& opt);    // 3
SuiteReport run_doubling_suite(const SuiteOptions& opt);        // 4
SuiteReport run_product_quotient_suite(const SuiteOptions& opt);  // 5
SuiteReport run_criterion_gate_suite(const SuiteOptions& opt);  // 6
SuiteReport run_semilocal_suite(const SuiteOptions& opt);       // 7
SuiteReport run_zariski_suite(const SuiteOptions& opt);         // 8
SuiteReport run_topology_suite(const SuiteOptions& opt);        // 9
SuiteReport run_chain_suite(const SuiteOptions& opt);           // 10
/// Revalidates the payloads of the given reports.
SuiteReport run_audit(const std::vector<const SuiteReport*>& sources);  // 11

/// Runs one suite. Suite 11 first runs suites 1..10 to collect payloads.
SuiteReport run_suite(int id, const SuiteOptions& opt);
/// All suites in order; the audit reuses the payloads of the others.
std::vector<SuiteReport> run_all(const SuiteOptions& opt);

}  // namespace ringexp::suites
