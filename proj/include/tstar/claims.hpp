#pragma once

#include <string>
#include <vector>

#include "tstar/io.hpp"

namespace tstar {

enum class Verdict { Pass, Fail, Documented };
std::string to_string(Verdict v);

struct ClaimReport {
  std::string id;
  Json inputs = Json::object();
  /// Exact integers are stored as decimal strings.
  Json computed = Json::object();
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  /// Deterministic part only; timing goes under "timing" when asked for.
  Json to_json(bool with_timing = false) const;
};

/// Frozen ids, in run order. baer-q3 only with extended.
std::vector<std::string> claim_ids(bool extended = false);
/// Throws Error for an unknown id.
ClaimReport run_claim(const std::string& id);

}  // namespace tstar
