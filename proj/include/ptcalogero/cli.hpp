#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptcalogero/model.hpp"
#include "ptcalogero/output.hpp"
#include "ptcalogero/quantum.hpp"

namespace ptcalogero::cli {

enum class Mode { Simulate, Exact, Stability, Perturb, Spectrum, Wedges };
enum class Format { Csv, Json };

std::string_view to_string(Mode m);

/// Malformed command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --sweep NAME=START:STOP:COUNT over one numeric parameter.
struct SweepSpec {
  std::string key;
  double start;
  double stop;
  std::size_t count;

  std::vector<double> values() const;
  bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
  Mode mode = Mode::Simulate;
  double omega = 1.0;
  double gamma = 0.1;
  double g = -0.5;
  std::optional<double> epsilon;  // only simulate accepts a free value
  double a = 0.0;                 // z2'(0)
  double b = 1.0;                 // z2(0)
  std::optional<double> z1_0;     // 0.5 for simulate, 0 otherwise
  double v1_0 = 0.0;              // z1'(0) for simulate
  std::optional<double> t_max;    // 5 for perturb, 50 otherwise
  std::size_t samples = 2000;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t levels = 3;
  quantum::Branch branch = quantum::Branch::Minus;
  std::optional<Format> format;   // json for wedges, csv otherwise
  std::string output;             // empty: standard output
  std::optional<SweepSpec> sweep;
  bool dump_config = false;

  /// Parameters with epsilon resolved for the mode.
  ModelParams params() const;
  double resolved_z1_0() const;
  double resolved_t_max() const;
  Format resolved_format() const;

  bool operator==(const RunConfig&) const = default;
};

/// Flags override config-file values, which override defaults. `args`
/// excludes the program name. Throws UsageError on any malformed input;
/// `--help` throws HelpRequested carrying the usage text.
RunConfig parse_args(const std::vector<std::string>& args);

class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat "key = value" text that parse_args reads back via --config.
std::string dump_config(const RunConfig& cfg);

/// Computes the table for one configuration (no sweep handling, no I/O).
io::Table compute(const RunConfig& cfg);

/// Executes a configuration: writes data to cfg.output (or `out`) and
/// metadata to "<output>.meta.json" (or one "# metadata: " line on `err`
/// for CSV on standard output). Returns 0 on success, including blow-up
/// and singularity findings, and 1 on computational failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract (0 / 1 / 2).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptcalogero::cli
