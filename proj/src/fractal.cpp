#include "fractal.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace fibspec {

std::int64_t box_count(const IntervalSet& s, double eps, double anchor) {
  if (eps <= 0.0) throw std::invalid_argument("box_count: eps must be > 0");
  if (s.empty()) throw std::invalid_argument("box_count: empty set");
  std::int64_t count = 0;
  std::int64_t last = 0;
  bool have_last = false;
  for (const Interval& b : s.intervals()) {
    double lq = (b.left - anchor) / eps;
    double rq = (b.right - anchor) / eps;
    auto jmin = static_cast<std::int64_t>(std::floor(lq + 1e-9));
    auto jmax = static_cast<std::int64_t>(std::ceil(rq - 1e-9)) - 1;
    if (jmax < jmin) jmax = jmin;
    if (have_last) jmin = std::max(jmin, last + 1);
    if (jmax >= jmin) {
      count += jmax - jmin + 1;
      last = jmax;
      have_last = true;
    }
  }
  return count;
}

DimensionEstimate box_dimension(const IntervalSet& s, double eps_min, double eps_max,
                                int n_scales) {
  if (n_scales < 5) throw std::invalid_argument("box_dimension: need >= 5 scales");
  if (!(eps_min > 0.0) || !(eps_max > eps_min * (1.0 + 1e-12)))
    throw std::invalid_argument("box_dimension: degenerate scaling range");

  std::vector<double> xs(n_scales), ys(n_scales);
  for (int i = 0; i < n_scales; ++i) {
    double eps = eps_max * std::pow(eps_min / eps_max, double(i) / (n_scales - 1));
    xs[i] = std::log(1.0 / eps);
    ys[i] = std::log(static_cast<double>(box_count(s, eps)));
  }

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n_scales; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n_scales;
  my /= n_scales;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n_scales; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double intercept = my - slope * mx;

  double ss_res = 0.0, ss_tot = 0.0;
  for (int i = 0; i < n_scales; ++i) {
    double e = ys[i] - (slope * xs[i] + intercept);
    ss_res += e * e;
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  double se_ols = n_scales > 2 ? std::sqrt(std::max(ss_res, 0.0) / (n_scales - 2) / sxx) : 0.0;

  // box-count residuals are log-periodically autocorrelated, which OLS
  // stderr understates; the dispersion of local slopes is the honest floor
  double se_disp = 0.0;
  if (n_scales > 2) {
    std::vector<double> loc(n_scales - 1);
    double lm = 0.0;
    for (int i = 0; i + 1 < n_scales; ++i) {
      loc[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
      lm += loc[i];
    }
    lm /= loc.size();
    double var = 0.0;
    for (double v : loc) var += (v - lm) * (v - lm);
    var /= (loc.size() - 1);
    se_disp = std::sqrt(var / loc.size());
  }

  DimensionEstimate est;
  est.value = std::min(1.0, std::max(0.0, slope));
  est.std_error = std::max(se_ols, se_disp);
  est.r_squared = std::min(1.0, std::max(0.0, r2));
  est.eps_min = eps_min;
  est.eps_max = eps_max;
  est.n_points = n_scales;
  est.converged = est.r_squared >= 0.98;
  return est;
}

std::pair<double, double> default_scales(const IntervalSet& s, double tol) {
  double eps_min = std::max(s.min_width(), 20.0 * tol);
  double eps_max = s.diameter() / 8.0;
  // coarse covers can have every band wider than diameter/8; fall back to a
  // sub-band window (the count slope there is honestly interval-like)
  if (!(eps_max > eps_min * (1.0 + 1e-12))) eps_min = eps_max / 16.0;
  return {eps_min, eps_max};
}

DimensionEstimate local_dimension(SpectrumEngine& eng, Interval window, int k, int n_scales) {
  IntervalSet cover = eng.approx_spectrum(k);
  IntervalSet sub = cover.clip(window.left, window.right);
  if (sub.empty()) throw std::invalid_argument("local_dimension: window misses spectrum");
  auto [emin, emax] = default_scales(sub, eng.tol());
  if (!(emax > emin * (1.0 + 1e-12))) emax = emin * 16.0;
  return box_dimension(sub, emin, emax, n_scales);
}

std::vector<std::pair<double, DimensionEstimate>> dimension_profile(SpectrumEngine& eng,
                                                                    int n_windows, int k,
                                                                    int n_scales) {
  if (n_windows < 3) throw std::invalid_argument("dimension_profile: need >= 3 windows");
  IntervalSet cover = eng.approx_spectrum(k);
  int nb = static_cast<int>(cover.size());
  double global_min_width = cover.min_width();

  std::vector<std::pair<double, DimensionEstimate>> out;
  for (int w = 0; w < n_windows; ++w) {
    int i0 = (w * nb) / n_windows;
    int i1 = ((w + 1) * nb) / n_windows - 1;
    if (i1 < i0) i1 = i0;
    double l = cover[static_cast<std::size_t>(i0)].left;
    double r = cover[static_cast<std::size_t>(i1)].right;
    IntervalSet sub = cover.clip(l, r);
    // windows share the structural floor so estimates are comparable
    double emin = global_min_width;
    double emax = std::min(sub.diameter() / 4.0, emin * 100.0);
    if (!(emax > emin * (1.0 + 1e-12))) emax = emin * 16.0;
    out.emplace_back(0.5 * (l + r), box_dimension(sub, emin, emax, n_scales));
  }
  return out;
}

std::vector<CouplingDimension> dimension_vs_params(const std::vector<Coupling>& path, int k,
                                                   int n_scales) {
  std::vector<CouplingDimension> out(path.size(), {Coupling(1, 0), {}});
  // independent engines per coupling; merged by index
  parallel_for(path.size(), [&](std::size_t i) {
    SpectrumEngine eng(path[i]);
    IntervalSet cover = eng.approx_spectrum(k);
    auto [emin, emax] = default_scales(cover, eng.tol());
    out[i] = {path[i], box_dimension(cover, emin, emax, n_scales)};
  });
  return out;
}

}  // namespace fibspec
