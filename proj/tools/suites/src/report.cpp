#include "ringexp/suites/suites.hpp"

namespace ringexp::suites {

bool SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failed;
    if (failures.size() < 25) failures.push_back(what);
  }
  return ok;
}

nlohmann::json SuiteReport::summary() const {
  nlohmann::json j;
  j["id"] = id;
  j["name"] = name;
  j["pass"] = pass();
  j["checks"] = checks;
  j["failed"] = failed;
  j["failures"] = failures;
  j["notes"] = notes;
  j["payloads"] = payloads.size();
  if (budget > 0) j["budget_seconds"] = budget;
  return j;
}

}  // namespace ringexp::suites
