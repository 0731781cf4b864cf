#pragma once

// Property suites shared by the verify subcommand and the acceptance tests.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flipper::verify {

struct SuiteReport {
  explicit SuiteReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::map<std::string, double> metrics;
  double seconds = 0;

  bool ok() const { return failures == 0; }
  void fail(const std::string& message);
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Instance count (or size bound for the metric suite); 0 picks the default.
  std::size_t count = 0;
};

SuiteReport flips_suite(const SuiteOptions& opt);
SuiteReport s_classes_suite(const SuiteOptions& opt);
SuiteReport metric_suite(const SuiteOptions& opt);
SuiteReport classifier_suite(const SuiteOptions& opt);
SuiteReport construction_suite(const SuiteOptions& opt);
SuiteReport predictability_suite(const SuiteOptions& opt);

struct StrategyOptions {
  std::uint64_t seed = 1;
  std::vector<std::string> families;  // empty means every sized family
  std::vector<std::size_t> sizes = {20, 50, 100, 200};
  std::vector<std::size_t> radii = {1, 2};
  std::size_t max_rounds = 5000;
};

// Flip star against every built-in connector. Metrics hold the worst
// rounds-to-win per family, radius and size under "rounds/<family>/r<r>/n<n>".
SuiteReport strategy_suite(const StrategyOptions& opt);
SuiteReport wrapper_suite(const SuiteOptions& opt);
SuiteReport translation_suite(const SuiteOptions& opt);

const std::vector<std::string>& suite_names();
// Runs one named suite ("predict" runs construction and predictability).
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace flipper::verify
