#include "rindler/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "rindler/channel.hpp"
#include "rindler/entanglement.hpp"

namespace rindler {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Recursive descent over: expr := factor (('*' | '/') factor)*
//                         factor := '-' factor | number | 'pi' | 'sqrt' '(' expr ')' | '(' expr ')'
class ValueParser {
 public:
  explicit ValueParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail();
    return v;
  }

 private:
  [[noreturn]] void fail() const { throw UsageError("cannot parse value '" + std::string(text_) + "'"); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  double expr() {
    double v = factor();
    while (true) {
      if (consume("*"))
        v *= factor();
      else if (consume("/"))
        v /= factor();
      else
        return v;
    }
  }

  double factor() {
    if (consume("-")) return -factor();
    if (consume("pi")) return std::numbers::pi;
    if (consume("sqrt")) {
      if (!consume("(")) fail();
      const double v = expr();
      if (!consume(")")) fail();
      return std::sqrt(v);
    }
    if (consume("(")) {
      const double v = expr();
      if (!consume(")")) fail();
      return v;
    }
    skip_space();
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr == begin) fail();
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<double> parse_optional(std::string_view field) {
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ValidationError("CSV: bad number '" + std::string(field) + "'");
  }
  return v;
}

double parse_required(std::string_view field) {
  const auto v = parse_optional(field);
  if (!v) throw ValidationError("CSV: missing required number");
  return *v;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

double parse_value(std::string_view text) {
  const double v = ValueParser(trim(text)).parse();
  if (!std::isfinite(v)) throw UsageError("value '" + std::string(text) + "' is not finite");
  return v;
}

std::vector<double> parse_value_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw UsageError("empty value list");
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("grid must be min:max:count, got '" + std::string(text) + "'");
    const double lo = parse_value(parts[0]);
    const double hi = parse_value(parts[1]);
    const double count_value = parse_value(parts[2]);
    if (count_value < 1.0 || count_value != std::floor(count_value) || count_value > 1e7) {
      throw UsageError("grid count must be a positive integer");
    }
    const auto count = static_cast<std::size_t>(count_value);
    if (count == 1) return {lo};
    if (hi < lo) throw UsageError("grid max is below grid min");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
      out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.back() = hi;
    return out;
  }
  std::vector<double> out;
  for (const auto part : split(text, ',')) out.push_back(parse_value(part));
  return out;
}

MethodSet parse_methods(std::string_view text) {
  MethodSet set{false, false, false};
  for (const auto part : split(text, ',')) {
    const auto name = trim(part);
    if (name == "eigen")
      set.eigen = true;
    else if (name == "xstate")
      set.xstate = true;
    else if (name == "closed")
      set.closed = true;
    else
      throw UsageError("unknown method '" + std::string(name) + "' (expected eigen, xstate, closed)");
  }
  return set;
}

std::vector<Family> parse_families(std::string_view text) {
  text = trim(text);
  if (text == "both") return {Family::Theta1, Family::Theta2};
  try {
    return {parse_family(text)};
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

void validate(const SweepSpec& spec) {
  if (spec.families.empty()) throw UsageError("no state family selected");
  if (spec.alphas.empty()) throw UsageError("alpha grid is empty");
  if (spec.rs.empty()) throw UsageError("r grid is empty");
  if (spec.ps.empty()) throw UsageError("p grid is empty");
  if (!spec.methods.any()) throw UsageError("no concurrence method selected");
  if (spec.jobs == 0) throw UsageError("jobs must be at least 1");
  try {
    for (const double a : spec.alphas) validate(StateSpec{Family::Theta1, a, spec.allow_degenerate});
    for (const double r : spec.rs) AccelerationParam{r};
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  for (const double p : spec.ps)
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p = " + std::to_string(p) + " outside [0, 1]");
}

SweepRow compute_row(Family family, double alpha, double r, double p, const MethodSet& methods,
                     bool allow_degenerate) {
  const StateSpec spec{family, alpha, allow_degenerate};
  const AccelerationParam accel(r);

  SweepRow row;
  row.family = family;
  row.alpha = alpha;
  row.r = r;
  row.p = p;
  if (methods.eigen || methods.xstate) {
    const DensityMatrix evolved = evolved_state(spec, accel, p);
    if (methods.eigen) row.c_eigen = concurrence_eigen(evolved).value;
    if (methods.xstate) row.c_xstate = concurrence_xstate(evolved).value;
  }
  const ConcurrenceResult closed = concurrence_closed(family, alpha, accel, p);
  if (methods.closed) row.c_closed = closed.value;
  row.raw = closed.raw;

  std::vector<double> values;
  for (const auto& v : {row.c_eigen, row.c_xstate, row.c_closed})
    if (v) values.push_back(*v);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      row.deviation = std::max(row.deviation, std::abs(values[i] - values[j]));
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<Family> families = spec.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<double> alphas = spec.alphas;
  std::vector<double> rs = spec.rs;
  std::vector<double> ps = spec.ps;
  sort_unique(alphas);
  sort_unique(rs);
  sort_unique(ps);

  const std::size_t total = families.size() * alphas.size() * rs.size() * ps.size();
  std::vector<SweepRow> rows(total);
  auto evaluate = [&](std::size_t index) {
    std::size_t rest = index;
    const std::size_t ip = rest % ps.size();
    rest /= ps.size();
    const std::size_t ir = rest % rs.size();
    rest /= rs.size();
    const std::size_t ia = rest % alphas.size();
    const std::size_t ifam = rest / alphas.size();
    rows[index] = compute_row(families[ifam], alphas[ia], rs[ir], ps[ip], spec.methods, spec.allow_degenerate);
  };

  const std::size_t workers = std::min<std::size_t>(spec.jobs, std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) {
          try {
            evaluate(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

double max_deviation(const std::vector<SweepRow>& rows) {
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.deviation);
  return worst;
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw UsageError("config line " + std::to_string(number) + ": expected key=value");
    const auto key = trim(text.substr(0, eq));
    auto value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw UsageError("config line " + std::to_string(number) + ": empty key");
    if (!out.emplace(std::string(key), std::string(value)).second) {
      throw UsageError("config line " + std::to_string(number) + ": repeated key '" + std::string(key) + "'");
    }
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  return parse_config(in);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.family) << ',' << format_double(row.alpha) << ',' << format_double(row.r) << ','
        << format_double(row.p) << ',' << opt(row.c_eigen) << ',' << opt(row.c_xstate) << ','
        << opt(row.c_closed) << ',' << format_double(row.raw) << ',' << format_double(row.deviation) << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

std::vector<SweepRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) throw ValidationError("CSV: missing or unexpected header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), ',');
    if (fields.size() != 9) throw ValidationError("CSV: expected 9 fields, got " + std::to_string(fields.size()));
    SweepRow row;
    row.family = parse_family(fields[0]);
    row.alpha = parse_required(fields[1]);
    row.r = parse_required(fields[2]);
    row.p = parse_required(fields[3]);
    row.c_eigen = parse_optional(fields[4]);
    row.c_xstate = parse_optional(fields[5]);
    row.c_closed = parse_optional(fields[6]);
    row.raw = parse_required(fields[7]);
    row.deviation = parse_required(fields[8]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rindler
