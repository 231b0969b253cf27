// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "checks.hpp"

#ifndef VCLASS_COUNTS_JSON
#error "VCLASS_COUNTS_JSON must point at the frozen oracle counts"
#endif

int main() {
  using vtest::CheckResult;
  struct Item {
    int id;
    const char* name;
    std::function<CheckResult()> run;
  };
  std::vector<Item> items = {
      {1, "system roundtrip on chains <= 4", vtest::check_system_roundtrip},
      {2, "filtration roundtrip on 2- and 3-chains", vtest::check_filtration_roundtrip},
      {3, "class equals Tor description", vtest::check_tor_description},
      {4, "ideal location dichotomy", vtest::check_locate_dichotomy},
      {5, "hull laws", vtest::check_hull_laws},
      {6, "non-density forms agree", vtest::check_nondensity_agreement},
      {7, "fixture verdicts", vtest::check_fixture_verdicts},
      {8, "enumeration counts vs brute force", [] { return vtest::check_counts(VCLASS_COUNTS_JSON); }},
      {9, "monotonicity and closure", [] { return vtest::check_monotonicity_closure(20240611, 5000); }},
  };
  int failed = 0;
  for (auto& it : items) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = it.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d %s (%zu cases, %.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", it.id, it.name, r.cases, secs,
                r.pass ? "" : ": ", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
  return failed ? 1 : 0;
}
