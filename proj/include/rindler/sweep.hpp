#pragma once

// Parameter sweeps over (family, alpha, r, P) and their CSV form.
//
// CSV schema (one header line, then one row per grid point):
//   family,alpha,r,p,c_eigen,c_xstate,c_closed,raw,deviation
// Floats use 17 significant digits; methods that were not requested are
// empty fields. Rows are ordered by family, alpha, r, p, each ascending.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rindler/errors.hpp"
#include "rindler/states.hpp"

namespace rindler {

class UsageError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSweepDeviationLimit = 1e-9;
inline constexpr const char* kCsvHeader = "family,alpha,r,p,c_eigen,c_xstate,c_closed,raw,deviation";

// A single numeric value: a number, `pi`, `sqrt(x)`, parentheses, and
// products/quotients of those, e.g. "pi/6", "1/sqrt(2)", "0.25*pi".
double parse_value(std::string_view text);

// Either a comma-separated list of values or a grid "min:max:count" with
// count >= 1 evenly spaced points including both ends.
std::vector<double> parse_value_list(std::string_view text);

struct MethodSet {
  bool eigen = true;
  bool xstate = true;
  bool closed = true;

  bool any() const { return eigen || xstate || closed; }
};

// Comma-separated subset of {eigen, xstate, closed}.
MethodSet parse_methods(std::string_view text);

// "theta1", "theta2" or "both".
std::vector<Family> parse_families(std::string_view text);

struct SweepSpec {
  std::vector<Family> families{Family::Theta1, Family::Theta2};
  std::vector<double> alphas;
  std::vector<double> rs;
  std::vector<double> ps;
  MethodSet methods;
  bool allow_degenerate = false;
  std::string out = "-";  // "-" is standard output
  unsigned jobs = 1;
};

// Throws UsageError for empty grids or out-of-range values.
void validate(const SweepSpec& spec);

struct SweepRow {
  Family family = Family::Theta1;
  double alpha = 0.0;
  double r = 0.0;
  double p = 0.0;
  std::optional<double> c_eigen;
  std::optional<double> c_xstate;
  std::optional<double> c_closed;
  double raw = 0.0;        // closed-form pre-clamp value for this family
  double deviation = 0.0;  // max pairwise |difference| among requested methods

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow compute_row(Family family, double alpha, double r, double p, const MethodSet& methods,
                     bool allow_degenerate = false);

// Grid points are evaluated on spec.jobs threads and returned in canonical
// order regardless of scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

double max_deviation(const std::vector<SweepRow>& rows);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);

// Inverse of write_csv. Throws ValidationError on malformed input.
std::vector<SweepRow> parse_csv(std::istream& in);

// key=value per line; blank lines and lines starting with '#' are skipped,
// whitespace around keys and values is trimmed and one pair of surrounding
// double quotes is removed. Throws IoError if the file cannot be read and
// UsageError on a malformed line or a repeated key.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);
std::map<std::string, std::string> parse_config(std::istream& in);

// 17-significant-digit rendering used for every float in emitted CSV.
std::string format_double(double value);

}  // namespace rindler
