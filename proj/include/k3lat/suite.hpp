#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/io.hpp"

namespace k3lat {

struct Verdict {
  std::string claim;
  Json expected;
  Json computed;
  bool pass = false;
};

Json to_json(const Verdict& v);

// Records expected == computed as a verdict.
class VerdictList {
 public:
  bool check(std::string claim, Json expected, Json computed);
  void fail(std::string claim, std::string message);
  const std::vector<Verdict>& items() const { return items_; }
  bool all_pass() const;
  Json to_json() const;

 private:
  std::vector<Verdict> items_;
};

struct CriterionInfo {
  int id = 0;
  std::string key;
  std::string title;
  std::vector<std::string> tags;
  double budget_seconds = 0;
};

const std::vector<CriterionInfo>& suite_criteria();

struct SuiteOptions {
  std::string filter;  // comma-separated ids, keys or tags; empty runs everything
  std::optional<std::vector<RatVector>> kummer_glue;  // replaces the Kummer glue (fault injection)
  bool parallel = true;
};

struct CriterionReport {
  CriterionInfo info;
  VerdictList verdicts;
  Json results = Json::object();
  std::string error;  // exception text, if the criterion threw
  double elapsed_ms = 0;
  bool pass() const { return error.empty() && verdicts.all_pass(); }
};

bool criterion_selected(const CriterionInfo& c, const std::string& filter);
CriterionReport run_criterion(int id, const SuiteOptions& opts = {});
// Reports ordered by criterion id.
std::vector<CriterionReport> run_suite(const SuiteOptions& opts = {});
Json to_json(const CriterionReport& r);  // without timing

}  // namespace k3lat
