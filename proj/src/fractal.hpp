// Box-counting dimension estimation on interval sets: global estimates,
// windowed local estimates, profiles across the spectrum and scans over
// coupling paths.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coupling.hpp"
#include "intervals.hpp"
#include "spectrum.hpp"

namespace fibspec {

struct DimensionEstimate {
  double value = 0.0;      // clamped to [0, 1]
  double std_error = 0.0;  // max of OLS stderr and local-slope dispersion
  double r_squared = 0.0;
  double eps_min = 0.0;
  double eps_max = 0.0;
  int n_points = 0;
  bool converged = false;  // r^2 >= 0.98
};

// Number of grid cells [anchor + j*eps, anchor + (j+1)*eps) meeting s.
// Endpoints landing on a cell boundary are snapped, so [0,1] at eps = 1/4
// counts 4 cells.
std::int64_t box_count(const IntervalSet& s, double eps, double anchor = 0.0);

// Least-squares slope of log N(eps) against log(1/eps) over n_scales
// geometrically spaced scales.
DimensionEstimate box_dimension(const IntervalSet& s, double eps_min, double eps_max,
                                int n_scales);

// Default scale window for a cover built at tolerance tol:
// [max(smallest band width, 20 tol), diameter/8].
std::pair<double, double> default_scales(const IntervalSet& s, double tol);

// box_dimension of cover(k) within the window; errors when the window
// misses the cover.
DimensionEstimate local_dimension(SpectrumEngine& eng, Interval window, int k,
                                  int n_scales);

// Windows with equal band counts across the level-k cover.
std::vector<std::pair<double, DimensionEstimate>> dimension_profile(SpectrumEngine& eng,
                                                                    int n_windows, int k,
                                                                    int n_scales = 10);

struct CouplingDimension {
  Coupling coupling;
  DimensionEstimate estimate;
};

std::vector<CouplingDimension> dimension_vs_params(const std::vector<Coupling>& path, int k,
                                                   int n_scales);

}  // namespace fibspec
