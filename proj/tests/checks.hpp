#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vclass/systems.hpp"

namespace vtest {

struct CheckResult {
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

// Valid LexDouble systems used by the hull and non-density checks.
std::vector<vclass::AdmissibleSystem> lex_systems();

CheckResult check_system_roundtrip();        // recover_system . in_class = id, chains <= 4
CheckResult check_filtration_roundtrip();    // theta . xi = id, chains 2,3, windows <= 3
CheckResult check_tor_description();         // interval vs homological, cyclic vocabulary
CheckResult check_locate_dichotomy();        // exactly one branch, brute force
CheckResult check_hull_laws();               // finite systems and lex families
CheckResult check_nondensity_agreement();    // three forms; ex0 passes, corrupted fails
CheckResult check_fixture_verdicts();        // six fixtures and chain strings
CheckResult check_counts(const std::string& frozen_path);
CheckResult check_monotonicity_closure(std::uint64_t seed, std::size_t per_property);

}  // namespace vtest
