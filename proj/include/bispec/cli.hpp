#pragma once

// Command implementations behind the `bispec` executable. Each command takes
// its streams explicitly so tests can drive it in-process.
//
// Output routing: commands that produce a JSON document write it to
// Config::output_path when set (and a human summary to `out`), otherwise the
// JSON goes to `out` and the summary to `err`. `verify` and `demo-compact`
// always print their report/table to `out`; with --out they also write a JSON
// copy.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bispec::cli {

struct Config {
  double tol = 1e-12;
  int max_sweeps = 100;
  std::optional<std::string> output_path;
  std::optional<std::uint64_t> seed;
};

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kNotSelfAdjoint = 3,
  kNoConvergence = 4,
};

/// Seed used by `verify` when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20240601;
/// Random kets drawn per sampled check in `verify`.
inline constexpr int kVerifySamples = 200;

int cmd_spectral(const std::string& input_path, const Config& config, std::ostream& out,
                 std::ostream& err);
int cmd_verify(const std::string& input_path, const Config& config, std::ostream& out,
               std::ostream& err);
int cmd_adjoint(const std::string& input_path, const Config& config, std::ostream& out,
                std::ostream& err);
int cmd_norm(const std::string& input_path, const Config& config, std::ostream& out,
             std::ostream& err);
int cmd_decompose(const std::string& input_path, const Config& config, std::ostream& out,
                  std::ostream& err);
int cmd_demo_compact(long long n_max, double p, double q, const Config& config, std::ostream& out,
                     std::ostream& err);

/// Parses argv and dispatches. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bispec::cli
