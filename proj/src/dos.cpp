#include "dos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fibspec {

IdsFunction::IdsFunction(SpectrumEngine& eng, int k)
    : k_(k), c_(eng.coupling()) {
  const BandLevel& lv = eng.level(k);
  bands_ = lv.elementary;
  inv_count_ = 1.0 / static_cast<double>(bands_.size());
  edge_sign_.reserve(bands_.size());
  for (const ElementaryBand& b : bands_) {
    // x_k = +1 at the left edge means x decreases across the band, so
    // arccos(+x) sweeps 0..pi; otherwise use arccos(-x).
    double xl = trace_poly_eval(k_, b.left, c_);
    edge_sign_.push_back(xl > 0.0 ? +1.0 : -1.0);
  }
}

double IdsFunction::value(double lambda) const {
  if (lambda < bands_.front().left) return 0.0;
  if (lambda >= bands_.back().right) return 1.0;
  std::size_t lo = 0, hi = bands_.size() - 1;
  while (lo < hi) {
    std::size_t m = (lo + hi + 1) / 2;
    if (bands_[m].left <= lambda) {
      lo = m;
    } else {
      hi = m - 1;
    }
  }
  const ElementaryBand& b = bands_[lo];
  if (lambda >= b.right) return static_cast<double>(lo + 1) * inv_count_;
  double x = trace_poly_eval(k_, lambda, c_);
  double cx = std::clamp(edge_sign_[lo] * x, -1.0, 1.0);
  return (static_cast<double>(lo) + std::acos(cx) / std::numbers::pi) * inv_count_;
}

double IdsFunction::band_width_at(double lambda) const {
  for (const ElementaryBand& b : bands_) {
    if (lambda >= b.left - 1e-12 && lambda <= b.right + 1e-12) return b.right - b.left;
  }
  return 0.0;
}

double IdsFunction::quantile_in_band(std::size_t j, double frac) const {
  const ElementaryBand& b = bands_[j];
  double target = (static_cast<double>(j) + frac) * inv_count_;
  double a = b.left, r = b.right;
  for (int it = 0; it < 60; ++it) {
    double m = 0.5 * (a + r);
    if (value(m) < target) {
      a = m;
    } else {
      r = m;
    }
  }
  return 0.5 * (a + r);
}

DimensionEstimate pointwise_dimension(SpectrumEngine& eng, int k, double energy,
                                      double eps_min, double eps_max, int n_scales) {
  IntervalSet cover = eng.approx_spectrum(k);
  if (!cover.contains(energy, eng.tol()))
    throw std::invalid_argument("pointwise_dimension: energy outside level-k cover");
  IdsFunction ids(eng, k);

  if (eps_max <= 0.0) eps_max = cover.diameter() / 16.0;
  if (eps_min <= 0.0) {
    double w = ids.band_width_at(energy);
    if (w <= 0.0) w = cover.min_width();
    eps_min = 2.0 * w;
  }
  if (!(eps_max > eps_min * (1.0 + 1e-12)))
    throw std::invalid_argument("pointwise_dimension: degenerate scaling range");
  if (n_scales < 5) throw std::invalid_argument("pointwise_dimension: need >= 5 scales");

  std::vector<double> xs, ys;
  xs.reserve(n_scales);
  ys.reserve(n_scales);
  for (int i = 0; i < n_scales; ++i) {
    double eps = eps_max * std::pow(eps_min / eps_max, double(i) / (n_scales - 1));
    double w = ids.weight(energy - eps, energy + eps);
    if (w <= 0.0) continue;
    xs.push_back(std::log(eps));
    ys.push_back(std::log(w));
  }
  if (xs.size() < 5) throw std::runtime_error("pointwise_dimension: too few usable scales");

  std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = ys[i] - (my + slope * (xs[i] - mx));
    ss_res += e * e;
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  DimensionEstimate est;
  est.value = std::min(1.0, std::max(0.0, slope));
  est.r_squared = ss_tot > 0.0 ? std::min(1.0, std::max(0.0, 1.0 - ss_res / ss_tot)) : 1.0;
  est.std_error =
      n > 2 ? std::sqrt(std::max(ss_res, 0.0) / (double(n) - 2.0) / sxx) : 0.0;
  est.eps_min = eps_min;
  est.eps_max = eps_max;
  est.n_points = static_cast<int>(n);
  est.converged = est.r_squared >= 0.9;
  return est;
}

std::vector<GapReportRow> dimension_gap_report(SpectrumEngine& eng, int k, int n_points,
                                               std::uint64_t seed) {
  if (n_points < 5) throw std::invalid_argument("dimension_gap_report: need >= 5 points");
  IdsFunction ids(eng, k);
  IntervalSet cover = eng.approx_spectrum(k);
  double delta = cover.diameter() / 16.0;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> band(0, ids.bands().size() - 1);
  std::uniform_real_distribution<double> frac(0.05, 0.95);

  std::vector<GapReportRow> rows;
  rows.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    GapReportRow row;
    row.energy = ids.quantile_in_band(band(rng), frac(rng));
    row.pointwise = pointwise_dimension(eng, k, row.energy);
    row.local_dim = local_dimension(eng, {row.energy - delta, row.energy + delta}, k, 10);
    row.gap = row.local_dim.value - row.pointwise.value;
    row.converged = row.pointwise.converged;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fibspec
