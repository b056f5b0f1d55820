// One line per acceptance criterion; nonzero exit when any fails or runs over budget.
#include <cstdio>

#include "k3lat/suite.hpp"

int main() {
  using namespace k3lat;
  SuiteOptions opts;
  opts.parallel = false;
  int failures = 0;
  double total_ms = 0;
  for (const auto& info : suite_criteria()) {
    CriterionReport r = run_criterion(info.id, opts);
    total_ms += r.elapsed_ms;
    bool in_budget = r.elapsed_ms <= info.budget_seconds * 1000.0;
    bool ok = r.pass() && in_budget;
    failures += !ok;
    std::printf("AC%02d %s %-18s %9.1f ms (budget %.0f s) %s\n", info.id, ok ? "PASS" : "FAIL", info.key.c_str(),
                r.elapsed_ms, info.budget_seconds, info.title.c_str());
    for (const auto& v : r.verdicts.items())
      if (!v.pass)
        std::printf("     failed claim: %s (expected %s, computed %s)\n", v.claim.c_str(), v.expected.dump().c_str(),
                    v.computed.dump().c_str());
    if (!in_budget) std::printf("     over the runtime budget\n");
  }
  std::printf("%d of %zu criteria pass, %.1f s total\n", static_cast<int>(suite_criteria().size()) - failures,
              suite_criteria().size(), total_ms / 1000.0);
  return failures == 0 ? 0 : 1;
}
