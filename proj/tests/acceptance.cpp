// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "flipper/generators.hpp"
#include "flipper/io.hpp"
#include "verify/suites.hpp"

using namespace flipper;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe(const verify::SuiteReport& r) {
  std::ostringstream s;
  s << r.name << " cases=" << r.cases << " failures=" << r.failures << " " << r.seconds << "s";
  if (!r.messages.empty()) s << " first: " << r.messages.front();
  return s.str();
}

double metric(const verify::SuiteReport& r, const std::string& key) {
  auto it = r.metrics.find(key);
  return it == r.metrics.end() ? 0 : it->second;
}

Verdict suite_with(const verify::SuiteReport& r, std::size_t min_cases, double max_seconds) {
  Verdict v;
  v.pass = r.ok() && r.cases >= min_cases && r.seconds < max_seconds;
  v.detail = describe(r);
  return v;
}

Verdict criterion1() {
  verify::SuiteOptions opt;
  opt.count = 500;
  return suite_with(verify::flips_suite(opt), 500, 10);
}

Verdict criterion2() {
  verify::SuiteOptions opt;
  opt.count = 200;
  return suite_with(verify::s_classes_suite(opt), 200, 1e9);
}

Verdict criterion3() {
  verify::SuiteReport r = verify::metric_suite({});
  Verdict v = suite_with(r, 1, 60);
  v.detail += " graphs=" + std::to_string(std::size_t(metric(r, "graphs")));
  return v;
}

Verdict criterion4() {
  verify::SuiteOptions opt;
  opt.count = 30;
  return suite_with(verify::classifier_suite(opt), 30, 1e9);
}

Verdict criterion5() {
  verify::SuiteReport r = verify::construction_suite({});
  return suite_with(r, 20, 1e9);
}

Verdict criterion6() {
  verify::SuiteReport r = verify::predictability_suite({});
  Verdict v = suite_with(r, 25, 1e9);
  v.detail += " subsets=" + std::to_string(std::size_t(metric(r, "subsets")));
  return v;
}

Verdict criterion7() {
  verify::StrategyOptions opt;
  opt.families = {"path", "cycle", "grid", "random_tree", "bounded_degree_random"};
  verify::SuiteReport r = verify::strategy_suite(opt);
  Verdict v = suite_with(r, opt.families.size() * opt.sizes.size() * opt.radii.size() * 4, 1e9);
  for (const std::string& f : opt.families) {
    for (std::size_t radius : opt.radii) {
      std::string key = "rounds/" + f + "/r" + std::to_string(radius) + "/n";
      v.detail += "; " + f + " r" + std::to_string(radius) + ":";
      for (std::size_t n : opt.sizes) v.detail += " " + std::to_string(std::size_t(metric(r, key + std::to_string(n))));
    }
  }
  return v;
}

Verdict criterion8() {
  verify::SuiteOptions opt;
  opt.count = 10;
  return suite_with(verify::wrapper_suite(opt), 10, 1e9);
}

Verdict criterion9() {
  verify::SuiteReport r = verify::translation_suite({});
  return suite_with(r, 30, 1e9);
}

Verdict criterion10() {
  cli::BenchOptions opt;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<cli::BenchRow> rows = cli::run_bench(opt);
  double elapsed = seconds_since(t0);
  double slope = cli::loglog_slope(rows);
  Verdict v;
  v.pass = rows.size() == opt.sizes.size() && slope <= 2.3 && elapsed < 300;
  std::ostringstream s;
  s << "slope " << slope << ", " << elapsed << "s, rounds";
  for (const cli::BenchRow& r : rows) s << " " << r.rounds_to_win;
  v.detail = s.str();
  return v;
}

std::pair<int, std::string> invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::istringstream in;
  int code = cli::run_cli(args, out, err, in);
  return {code, out.str()};
}

Verdict criterion11() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "flipper_acceptance";
  fs::create_directories(dir);
  std::string path = (dir / "tree.g").string();
  {
    std::ofstream f(path);
    write_graph(f, random_tree(200, 5));
  }
  std::vector<std::vector<std::string>> commands = {
      {"play", path, "--radius", "2", "--seed", "3"},
      {"play", path, "--radius", "1", "--connector", "farthest_from_played"},
      {"play", path, "--radius", "1", "--flipper", "flip_star_single", "--seed", "9"},
      {"predict", path, "--radius", "2", "--z", "0,40,80,120,160"},
      {"predict", path, "--radius", "3", "--z", "1,2,3,4,5,6,7"},
  };
  Verdict v{true, ""};
  for (const auto& cmd : commands) {
    auto a = invoke(cmd);
    auto b = invoke(cmd);
    bool same = a == b;
    v.pass = v.pass && same && a.first == 0;
    v.detail += std::string(same ? "same" : "DIFFERENT") + "(exit " + std::to_string(a.first) + ") ";
  }
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},   {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
