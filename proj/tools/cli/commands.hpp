#pragma once

#include "ringexp/bounds.hpp"
#include "ringexp/verdict.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace ringexp::cli {

enum Exit : int { kOk = 0, kRefuted = 1, kInputError = 2, kCapacity = 3, kUnknown = 4 };

inline int exit_for(Status s) {
  switch (s) {
    case Status::Proved:
      return kOk;
    case Status::Refuted:
      return kRefuted;
    case Status::UnknownAtBound:
      return kUnknown;
  }
  return kInputError;
}

struct JobSpec {
  std::string input;        ///< path, "-" for stdin
  std::string inline_json;  ///< --ring / --space text, used when input is empty
  std::string format = "json";
  std::uint64_t seed = 0;
  Bounds bounds;
  bool check_certificate = false;
};

/// Result of a command: the document to print and the exit code.
struct Outcome {
  nlohmann::json doc;
  int code = kOk;
  std::string text;  ///< used instead of doc for text and dot output
};

nlohmann::json load_document(const JobSpec& job);

Outcome cmd_analyze(const JobSpec& job);
Outcome cmd_expansivity(const JobSpec& job, const std::string& mode, const std::string& automorphism,
                        const std::string& candidate, std::size_t n_max, std::uint32_t adversary_bound);
Outcome cmd_spec(const JobSpec& job, const std::string& exporter);
Outcome cmd_space(const JobSpec& job, const std::string& mode);
Outcome cmd_chain(const JobSpec& job, const std::string& check, std::int64_t shift, std::int64_t m, std::size_t n_max);
Outcome cmd_verify(const JobSpec& job, const std::string& suite);
Outcome cmd_check(const JobSpec& job);

}  // namespace ringexp::cli
