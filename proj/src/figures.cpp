#include "rindler/figures.hpp"

#include <fstream>
#include <numbers>
#include <ostream>

#include "rindler/entanglement.hpp"
#include "rindler/sudden_death.hpp"

namespace rindler {

namespace figure_defaults {

std::vector<double> panel_alphas() { return {0.3, std::numbers::sqrt2 / 2.0, 0.8, 0.9}; }

std::vector<std::pair<double, std::string>> panel_accelerations() {
  return {{0.0, "r0"}, {std::numbers::pi / 6.0, "rpi6"}, {std::numbers::pi / 4.0, "rpi4"}};
}

}  // namespace figure_defaults

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create directory '" + dir.string() + "'");
}

}  // namespace

std::vector<PanelFile> write_concurrence_panels(const std::filesystem::path& dir, unsigned jobs) {
  ensure_directory(dir);
  std::vector<double> ps(figure_defaults::kPanelSamples);
  for (std::size_t j = 0; j < ps.size(); ++j)
    ps[j] = static_cast<double>(j) / static_cast<double>(ps.size() - 1);

  std::vector<PanelFile> files;
  for (const Family family : {Family::Theta1, Family::Theta2}) {
    for (const auto& [r, suffix] : figure_defaults::panel_accelerations()) {
      SweepSpec spec;
      spec.families = {family};
      spec.alphas = figure_defaults::panel_alphas();
      spec.rs = {r};
      spec.ps = ps;
      spec.jobs = jobs;
      PanelFile file{family, r, dir / ("fig1_" + std::string(to_string(family)) + "_" + suffix + ".csv"),
                     run_sweep(spec)};
      write_file(file.path, [&](std::ostream& out) { write_csv(out, file.rows); });
      files.push_back(std::move(file));
    }
  }
  return files;
}

std::vector<SurfacePoint> boundary_surface(Family family, std::size_t samples) {
  std::vector<SurfacePoint> points;
  points.reserve(samples * samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = samples == 1 ? 0.0
                                  : AccelerationParam::kMax * static_cast<double>(i) / static_cast<double>(samples - 1);
    const AccelerationParam accel(i + 1 == samples ? AccelerationParam::kMax : r);
    for (std::size_t j = 1; j <= samples; ++j) {
      const double p = static_cast<double>(j) / static_cast<double>(samples);
      double alpha = 1.0;
      if (family == Family::Theta1) {
        alpha = boundary_alpha_theta1(accel, p);
      } else if (const auto root = boundary_alpha_theta2(accel, p)) {
        alpha = *root;
      }
      points.push_back({accel.value(), p, alpha, concurrence_closed(family, alpha, accel, p).raw});
    }
  }
  return points;
}

void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points) {
  out << "r,p,alpha_boundary,raw\n";
  for (const auto& pt : points) {
    out << format_double(pt.r) << ',' << format_double(pt.p) << ',' << format_double(pt.alpha) << ','
        << format_double(pt.raw) << '\n';
  }
}

std::vector<SurfaceFile> write_boundary_surfaces(const std::filesystem::path& dir) {
  ensure_directory(dir);
  std::vector<SurfaceFile> files;
  for (const Family family : {Family::Theta1, Family::Theta2}) {
    SurfaceFile file{family, dir / ("fig2_" + std::string(to_string(family)) + ".csv"), boundary_surface(family)};
    write_file(file.path, [&](std::ostream& out) { write_surface_csv(out, file.points); });
    files.push_back(std::move(file));
  }
  return files;
}

}  // namespace rindler
