#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ltft::cli {

inline constexpr const char* kSubcommands[] = {
    "reconstruct",   "vocoder",          "denoise",    "multiplier", "bench-error",
    "bench-discrepancy", "bench-complexity", "frame-diag", "coverage",
};

struct RunConfig {
  std::string subcommand;
  std::string input;   ///< WAV path; empty selects the built-in test signal
  std::string output;  ///< WAV path; optional
  std::string csv;     ///< CSV path; optional

  double b0_frac = 0.1;
  double b1_frac = 0.4;
  double gamma = 6.0;
  double xi = 6.0;
  std::string window = "cos4";

  std::optional<double> redundancy;  ///< A
  std::optional<std::size_t> samples;  ///< N; exclusive with redundancy
  std::string sequence = "hammersley";
  std::uint64_t seed = 0;
  int dilation = 1;
  double lambda = 0.0;
  std::optional<double> cutoff;  ///< multiplier cut frequency; default b1

  std::optional<std::size_t> length;  ///< M of the test signal / bench grid
  double rate = 16000.0;              ///< L of the test signal / bench grid
  std::uint64_t signal_seed = 1;

  std::vector<std::string> methods = {"hammersley", "mc"};
  std::vector<double> redundancies = {1, 2, 4, 8, 16, 32, 64};
  std::vector<std::string> generators = {"hammersley", "mc", "dwt-grid", "regular"};
  std::vector<std::size_t> counts;
  std::size_t dim = 2;
  std::size_t mc_seeds = 10;
  std::size_t queries = 100;
  double dwt_step = 1.1;

  /// "key=value;..." of every field, in a fixed order.
  std::string describe() const;
};

/// Parses `subcommand [flags] [input [output]]`. A `--config FILE` of key=value
/// lines supplies defaults that later flags override. Throws usage-error.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the configuration. Returns the process exit code; failures print one
/// "error: code=<kind> message=<text>" line to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run; usage errors exit with 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace ltft::cli
