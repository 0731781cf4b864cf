#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace flipper::cli {

// Runs one subcommand; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t radius = 0;
  std::size_t rounds_to_win = 0;  // 0 when the game was not won
  std::uint64_t predict_time_ns = 0;
  std::uint64_t total_time_ns = 0;
};

struct BenchOptions {
  std::vector<std::string> families = {"random_tree"};
  std::vector<std::size_t> sizes = {100, 200, 400, 800, 1600};
  std::size_t radius = 2;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  std::size_t max_rounds = 5000;
  bool play = true;
};

std::vector<BenchRow> run_bench(const BenchOptions& opt);
// Least-squares slope of log(predict_time_ns) against log(n).
double loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace flipper::cli
