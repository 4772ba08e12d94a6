// rindler: concurrence of Theta1/Theta2 under local amplitude damping with an
// accelerated observer.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "rindler/figures.hpp"
#include "rindler/sweep.hpp"
#include "rindler/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SweepArgs {
  std::string family = "both";
  std::string alpha = "1/sqrt(2)";
  std::string r = "0";
  std::string p = "0:1:11";
  std::string methods = "eigen,xstate,closed";
  std::string out = "-";
  unsigned jobs = 1;
  bool allow_degenerate = false;
};

// Config values fill only the options not given on the command line.
void apply_config(const CLI::App& cmd, const std::map<std::string, std::string>& config, SweepArgs& args) {
  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"family", [&](const std::string& v) { args.family = v; }},
      {"alpha", [&](const std::string& v) { args.alpha = v; }},
      {"r", [&](const std::string& v) { args.r = v; }},
      {"p", [&](const std::string& v) { args.p = v; }},
      {"methods", [&](const std::string& v) { args.methods = v; }},
      {"out", [&](const std::string& v) { args.out = v; }},
      {"jobs",
       [&](const std::string& v) {
         const double jobs = rindler::parse_value(v);
         if (jobs < 1.0 || jobs != std::floor(jobs) || jobs > 4096.0) throw rindler::UsageError("config: bad jobs value");
         args.jobs = static_cast<unsigned>(jobs);
       }},
      {"allow-degenerate",
       [&](const std::string& v) {
         if (v != "true" && v != "false") throw rindler::UsageError("config: allow-degenerate must be true or false");
         args.allow_degenerate = v == "true";
       }},
  };
  for (const auto& [key, value] : config) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw rindler::UsageError("config: unknown key '" + key + "'");
    if (cmd.count("--" + key) == 0) it->second(value);
  }
}

int run_sweep_command(const SweepArgs& args) {
  rindler::SweepSpec spec;
  spec.families = rindler::parse_families(args.family);
  spec.alphas = rindler::parse_value_list(args.alpha);
  spec.rs = rindler::parse_value_list(args.r);
  spec.ps = rindler::parse_value_list(args.p);
  spec.methods = rindler::parse_methods(args.methods);
  spec.out = args.out;
  spec.jobs = args.jobs;
  spec.allow_degenerate = args.allow_degenerate;

  const auto rows = rindler::run_sweep(spec);
  if (spec.out == "-") {
    rindler::write_csv(std::cout, rows);
    std::cout.flush();
    if (!std::cout) throw rindler::IoError("failed writing to standard output");
  } else {
    std::ofstream out(spec.out, std::ios::binary);
    if (!out) throw rindler::IoError("cannot open '" + spec.out + "' for writing");
    rindler::write_csv(out, rows);
    out.flush();
    if (!out) throw rindler::IoError("failed writing '" + spec.out + "'");
  }

  const double deviation = rindler::max_deviation(rows);
  std::cerr << "sweep: " << rows.size() << " rows, max cross-method deviation " << rindler::format_double(deviation)
            << " (limit 1e-9)\n";
  return deviation <= rindler::kSweepDeviationLimit ? kExitOk : kExitVerification;
}

int run_fig1_command(const std::string& dir, unsigned jobs) {
  double deviation = 0.0;
  for (const auto& file : rindler::write_concurrence_panels(dir, jobs)) {
    deviation = std::max(deviation, rindler::max_deviation(file.rows));
    std::cerr << "fig1: wrote " << file.path.string() << " (" << file.rows.size() << " rows)\n";
  }
  std::cerr << "fig1: max cross-method deviation " << rindler::format_double(deviation) << '\n';
  return deviation <= rindler::kSweepDeviationLimit ? kExitOk : kExitVerification;
}

int run_fig2_command(const std::string& dir) {
  double worst = 0.0;
  for (const auto& file : rindler::write_boundary_surfaces(dir)) {
    for (const auto& pt : file.points) worst = std::max(worst, std::abs(pt.raw));
    std::cerr << "fig2: wrote " << file.path.string() << " (" << file.points.size() << " points)\n";
  }
  std::cerr << "fig2: max |raw| on boundary " << rindler::format_double(worst) << " (limit 1e-10)\n";
  return worst <= 1e-10 ? kExitOk : kExitVerification;
}

int run_verify_command() {
  const auto results = rindler::run_verification();
  rindler::print_report(std::cout, results);
  for (const auto& c : results)
    if (!c.passed) std::cerr << "verify: check '" << c.name << "' failed\n";
  return rindler::all_passed(results) ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of Theta1/Theta2 states under amplitude damping with one accelerated observer"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Evaluate concurrence over an (alpha, r, P) grid and emit CSV");
  sweep->add_option("--family", sweep_args.family, "theta1, theta2 or both")->capture_default_str();
  sweep->add_option("--alpha", sweep_args.alpha, "alpha values: list 'a,b,...' or grid 'min:max:count'")
      ->capture_default_str();
  sweep->add_option("--r", sweep_args.r, "acceleration parameter values in [0, pi/4]")->capture_default_str();
  sweep->add_option("--p", sweep_args.p, "decay probabilities in [0, 1]")->capture_default_str();
  sweep->add_option("--methods", sweep_args.methods, "subset of eigen,xstate,closed")->capture_default_str();
  sweep->add_option("--out", sweep_args.out, "output CSV path, '-' for standard output")->capture_default_str();
  sweep->add_option("--jobs", sweep_args.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_flag("--allow-degenerate", sweep_args.allow_degenerate, "accept alpha in {0, -1, 1}");
  std::string config_path;
  sweep->add_option("--config", config_path, "key=value file using the long flag names; flags take precedence");
  sweep->footer(
      "Values accept numbers, pi, sqrt(x), * and /, e.g. --r 0:pi/4:5 --alpha 1/sqrt(2),0.9.\n"
      "CSV columns: family,alpha,r,p,c_eigen,c_xstate,c_closed,raw,deviation.\n"
      "Exit 0 iff the max cross-method deviation is <= 1e-9.");

  std::string fig1_dir = "fig1";
  unsigned fig1_jobs = 1;
  auto* fig1 = app.add_subcommand("fig1", "Concurrence-vs-P panels for r = 0, pi/6, pi/4 (six CSV files)");
  fig1->add_option("--out", fig1_dir, "output directory")->capture_default_str();
  fig1->add_option("--jobs", fig1_jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  fig1->footer("alpha in {0.3, 1/sqrt(2), 0.8, 0.9}; P at 201 points in [0, 1].");

  std::string fig2_dir = "fig2";
  auto* fig2 = app.add_subcommand("fig2", "Zero-concurrence boundary surfaces over a 50x50 (r, P) grid");
  fig2->add_option("--out", fig2_dir, "output directory")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the invariant battery and print a per-check table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      if (!config_path.empty()) apply_config(*sweep, rindler::read_config_file(config_path), sweep_args);
      return run_sweep_command(sweep_args);
    }
    if (fig1->parsed()) return run_fig1_command(fig1_dir, fig1_jobs);
    if (fig2->parsed()) return run_fig2_command(fig2_dir);
    if (verify->parsed()) return run_verify_command();
  } catch (const rindler::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const rindler::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
