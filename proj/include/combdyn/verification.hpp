#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace combdyn {

struct VerificationResult {
  std::string id;
  std::string range;            // "n=2..8" or "m=1..5"
  bool pass = false;
  std::string counterexample;   // empty on pass
  std::string detail;           // optional extra information on pass
  double seconds = 0.0;
};

struct TheoremCheck {
  std::string id;
  std::string description;
  char param;        // 'n' or 'm'
  int default_lo;
  int default_hi;
  // Returns std::nullopt on success, otherwise a re-checkable
  // counterexample.  May fill detail through the second argument.
  std::function<std::optional<std::string>(int lo, int hi, std::string& detail)>
      run;
};

const std::vector<TheoremCheck>& theorem_checks();
const TheoremCheck* find_theorem(const std::string& id);
VerificationResult run_theorem(const TheoremCheck& check,
                               std::optional<int> hi_override);

}  // namespace combdyn
