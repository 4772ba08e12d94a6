#pragma once

// Data behind the two published figure sets: concurrence-vs-P panels and the
// zero-concurrence boundary surfaces.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rindler/states.hpp"
#include "rindler/sweep.hpp"

namespace rindler {

namespace figure_defaults {
inline constexpr std::size_t kPanelSamples = 201;   // P points per panel curve
inline constexpr std::size_t kSurfaceSamples = 50;  // per axis of the boundary surface
// Implementation choice; the curves cover both death and no-death regimes.
std::vector<double> panel_alphas();
// r = 0, pi/6, pi/4 with file suffixes "r0", "rpi6", "rpi4".
std::vector<std::pair<double, std::string>> panel_accelerations();
}  // namespace figure_defaults

struct PanelFile {
  Family family;
  double r;
  std::filesystem::path path;
  std::vector<SweepRow> rows;
};

// One CSV per (family, r) panel in the sweep schema. Throws IoError if a file
// cannot be written.
std::vector<PanelFile> write_concurrence_panels(const std::filesystem::path& dir, unsigned jobs = 1);

struct SurfacePoint {
  double r;
  double p;
  double alpha;  // boundary |alpha|; 1 where no death region exists
  double raw;    // closed-form pre-clamp value at the boundary
};

// r in [0, pi/4] (inclusive) and P in (0, 1] with P_j = j / samples.
std::vector<SurfacePoint> boundary_surface(Family family, std::size_t samples = figure_defaults::kSurfaceSamples);

// CSV header: r,p,alpha_boundary,raw
void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points);

struct SurfaceFile {
  Family family;
  std::filesystem::path path;
  std::vector<SurfacePoint> points;
};

std::vector<SurfaceFile> write_boundary_surfaces(const std::filesystem::path& dir);

}  // namespace rindler
