// Integrated density of states of periodic approximants and pointwise
// dimension of the DOS measure.
#pragma once

#include <cstdint>
#include <vector>

#include "coupling.hpp"
#include "fractal.hpp"
#include "spectrum.hpp"

namespace fibspec {

// Equal-weight-per-band IDS of the level-k approximant: each elementary
// band carries mass 1/F_k, interpolated inside bands by the quasimomentum
// arccos(+-x_k)/pi. Non-decreasing, 0 left of the spectrum, 1 right of it,
// constant on gaps.
class IdsFunction {
 public:
  IdsFunction(SpectrumEngine& eng, int k);

  int level() const { return k_; }
  double value(double lambda) const;
  double weight(double a, double b) const { return value(b) - value(a); }

  const std::vector<ElementaryBand>& bands() const { return bands_; }
  // width of the elementary band containing lambda; 0 when in a gap
  double band_width_at(double lambda) const;
  // inverse of the in-band mass fraction, used for DOS-distributed sampling
  double quantile_in_band(std::size_t band_index, double frac) const;

 private:
  int k_;
  Coupling c_;
  double inv_count_;
  std::vector<ElementaryBand> bands_;
  std::vector<double> edge_sign_;  // +1: use arccos(+x), -1: arccos(-x)
};

// Regression slope of log weight(E - eps, E + eps) against log eps.
// Scale window defaults to [2 * containing band width, diameter/16].
DimensionEstimate pointwise_dimension(SpectrumEngine& eng, int k, double energy,
                                      double eps_min = 0.0, double eps_max = 0.0,
                                      int n_scales = 16);

struct GapReportRow {
  double energy = 0.0;
  DimensionEstimate pointwise;  // d(E)
  DimensionEstimate local_dim;  // box dimension near E
  double gap = 0.0;             // local_dim - d
  bool converged = false;
};

// n_points DOS-distributed sample energies with per-point pointwise and
// local dimension estimates.
std::vector<GapReportRow> dimension_gap_report(SpectrumEngine& eng, int k, int n_points,
                                               std::uint64_t seed);

}  // namespace fibspec
