#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hollab {

inline constexpr const char* kVersion = "1.0.0";

struct CheckResult {
  std::string id;
  std::string anchor;  // the claim this check exercises, in words
  bool pass = false;
  std::string witness;  // inputs and both sides, on failure
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by id
  std::int64_t elapsed_ms = 0;
  bool ok() const;
  std::size_t failures() const;
};

const std::vector<std::string>& suite_names();
std::uint64_t default_seed(const std::string& suite);  // std::invalid_argument on an unknown name

// Runs every check of the suite (checks in parallel, assembly by id).
// Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, std::optional<std::uint64_t> seed = std::nullopt);

// {suite, version, seed, checks: [{id, anchor, status, witness?}], elapsed_ms}.
// With timing = false elapsed_ms is written as 0 so reports compare byte for byte.
nlohmann::ordered_json report_to_json(const SuiteReport& r, bool timing = true);
SuiteReport report_from_json(const nlohmann::ordered_json& j);
std::string report_to_markdown(const SuiteReport& r);
std::string report_to_csv(const SuiteReport& r);

}  // namespace hollab
