// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dos.hpp"
#include "fractal.hpp"
#include "jacobi.hpp"
#include "spectrum.hpp"
#include "tracemap.hpp"
#include "transfer.hpp"
#include "words.hpp"

using namespace fibspec;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int idx, const std::string& name, bool ok, const std::string& detail,
            double secs) {
  std::printf("%-4s criterion %2d  %-38s %s  [%.2fs]\n", ok ? "PASS" : "FAIL", idx,
              name.c_str(), detail.c_str(), secs);
  if (!ok) ++g_failures;
}

std::vector<Coupling> coupling_set() {
  return {Coupling(1, 0), Coupling(2, 0), Coupling(1, 2), Coupling(2, 1), Coupling(0.5, -1)};
}

std::vector<double> sample_in(const IntervalSet& s, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, s.measure());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = u(rng);
    double x = s.hull_left();
    for (std::size_t j = 0; j < s.size(); ++j) {
      double w = s[j].right - s[j].left;
      if (t <= w) {
        x = s[j].left + t;
        break;
      }
      t -= w;
    }
    out.push_back(x);
  }
  return out;
}

char fmtbuf[128];
std::string num(double v) {
  std::snprintf(fmtbuf, sizeof(fmtbuf), "%.3g", v);
  return fmtbuf;
}

// 1. trace-map half-traces match the transfer cocycle on the calibrated cells
void criterion1() {
  Timer timer;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (const Coupling& c : coupling_set()) {
    SpectrumEngine eng(c);
    for (int k = 2; k <= 12; ++k) {
      Cell cell = trace_cell(k);
      IntervalSet dom = eng.trace_bounded_set(k, default_bound_c(c));
      for (double lam : sample_in(dom, 20, rng)) {
        double a = trace_poly_eval(k, lam, c);
        double b = half_trace(cell, lam, c);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    }
  }
  double secs = timer.seconds();
  report(1, "trace map vs cocycle (k<=12)", worst <= 1e-9 && secs < 5.0,
         "max rel err " + num(worst), secs);
}

// 2. trace-map bands match the eigenvalue oracle's band edges
void criterion2() {
  Timer timer;
  double worst = 0.0;
  for (const Coupling& c : coupling_set()) {
    SpectrumEngine eng(c);
    for (int k = 2; k <= 8; ++k) {
      IntervalSet tb = eng.bands(k);
      IntervalSet ob = band_edges_oracle(k, c);
      if (tb.size() != ob.size()) {
        worst = 1e9;
        continue;
      }
      for (std::size_t i = 0; i < tb.size(); ++i)
        worst = std::max({worst, std::abs(tb[i].left - ob[i].left),
                          std::abs(tb[i].right - ob[i].right)});
    }
  }
  double secs = timer.seconds();
  report(2, "Floquet oracle equivalence (k<=8)", worst <= 1e-8 && secs < 30.0,
         "max edge err " + num(worst), secs);
}

// 3. invariant conservation along 500 random bounded-regime orbits
void criterion3() {
  Timer timer;
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  int found = 0;
  while (found < 500) {
    TraceTriple t{u(rng), u(rng), u(rng)};
    double i0 = invariant(t);
    if (std::abs(i0) > 10.0) continue;
    bool bounded = true;
    double drift = 0.0;
    TraceTriple s = t;
    for (int n = 0; n < 40 && bounded; ++n) {
      s = step(s);
      bounded = !(std::abs(s[0]) > 2.0 && std::abs(s[1]) > 2.0) && std::abs(s[0]) <= 1e6 &&
                std::abs(s[1]) <= 1e6 && std::abs(s[2]) <= 1e6;
      if (!bounded) break;
      drift = std::max(drift, std::abs(invariant(s) - i0));
    }
    if (!bounded) continue;
    ++found;
    worst = std::max(worst, drift / (1.0 + std::abs(i0)));
  }
  report(3, "invariant conservation (500 orbits)", worst <= 1e-8, "max drift " + num(worst),
         timer.seconds());
}

// 4. closed-form invariant line and its derivative
void criterion4() {
  Timer timer;
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> lam(-6.0, 6.0), pp(0.3, 3.0), qq(-3.0, 3.0);
  double worst_val = 0.0, worst_der = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Coupling c(pp(rng) * (i % 2 ? 1.0 : -1.0), qq(rng));
    double x = lam(rng);
    double direct = invariant(gamma(x, c));
    double closed = invariant_on_line(x, c);
    worst_val = std::max(worst_val,
                         std::abs(direct - closed) / std::max(1.0, std::abs(closed)));
    double h = 0.25;
    double fd = (invariant_on_line(x + h, c) - invariant_on_line(x - h, c)) / (2.0 * h);
    double exact = c.q() * (1.0 - c.p() * c.p()) / (4.0 * c.p() * c.p());
    worst_der = std::max(worst_der, std::abs(fd - exact));
  }
  report(4, "invariant line closed form", worst_val <= 1e-12 && worst_der <= 1e-8,
         "value " + num(worst_val) + ", derivative " + num(worst_der), timer.seconds());
}

// 5. nested covers
void criterion5() {
  Timer timer;
  bool ok = true;
  double tol = SpectrumEngine::kDefaultTol;
  for (const Coupling& c : {Coupling(1, 1), Coupling(2, 1)}) {
    SpectrumEngine eng(c);
    IntervalSet prev = eng.approx_spectrum(4);
    for (int k = 5; k <= 15; ++k) {
      IntervalSet cur = eng.approx_spectrum(k);
      if (!cur.subset_of(prev, 10.0 * tol)) ok = false;
      prev = cur;
    }
  }
  report(5, "cover nesting k=4..14, (1,1) and (2,1)", ok, ok ? "nested" : "violated",
         timer.seconds());
}

// 6. Lebesgue-measure decay at (1,1)
void criterion6() {
  Timer timer;
  SpectrumEngine eng(Coupling(1, 1));
  std::vector<double> ms;
  for (int k = 4; k <= 14; ++k) ms.push_back(eng.approx_spectrum(k).measure());
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < ms.size(); ++i)
    if (!(ms[i + 1] < ms[i])) decreasing = false;
  double ratio = ms.back() / ms.front();
  double secs = timer.seconds();
  report(6, "zero-measure trend at (1,1)", decreasing && ratio <= 0.5 && secs < 60.0,
         "m14/m4 = " + num(ratio), secs);
}

// 7. free-case exactness
void criterion7() {
  Timer timer;
  IntervalSet cover = escape_spectrum(Coupling(1, 0), 30, 1e-4);
  IntervalSet target = IntervalSet::normalized({{-2.0, 2.0}});
  bool ok = cover.subset_of(target, 1e-4) && target.subset_of(cover, 1e-4);
  double worst = 0.0;
  SpectrumEngine eng(Coupling(1, 0));
  for (int k = 2; k <= 10; ++k)
    worst = std::max(worst, std::abs(eng.bands(k).measure() - 4.0));
  report(7, "free-case exactness", ok && worst <= 1e-6,
         "bands |measure-4| " + num(worst), timer.seconds());
}

// 8. box-dimension estimator calibration on middle-alpha Cantor sets
void criterion8() {
  Timer timer;
  double worst = 0.0;
  for (double alpha : {1.0 / 3.0, 0.5, 0.6}) {
    double beta = (1.0 - alpha) / 2.0;
    std::vector<Interval> iv{{0.0, 1.0}};
    for (int l = 0; l < 10; ++l) {
      std::vector<Interval> next;
      for (const Interval& b : iv) {
        double w = b.right - b.left;
        next.push_back({b.left, b.left + beta * w});
        next.push_back({b.right - beta * w, b.right});
      }
      iv = std::move(next);
    }
    IntervalSet s = IntervalSet::normalized(std::move(iv), 0.0);
    DimensionEstimate est = box_dimension(s, std::pow(beta, 10.0), std::pow(beta, 2.0), 9);
    double exact = std::log(2.0) / std::log(2.0 / (1.0 - alpha));
    worst = std::max(worst, std::abs(est.value - exact));
  }
  report(8, "Cantor calibration (3 fixtures)", worst <= 0.03, "max err " + num(worst),
         timer.seconds());
}

// 9. multifractality signature
void criterion9() {
  Timer timer;
  SpectrumEngine diag(Coupling(1, 0.5));
  auto prof_d = dimension_profile(diag, 5, 13);
  double lo = 2.0, hi = 0.0, max_se = 0.0;
  for (auto& [c, e] : prof_d) {
    lo = std::min(lo, e.value);
    hi = std::max(hi, e.value);
    max_se = std::max(max_se, e.std_error);
  }
  bool flat = hi - lo <= 2.0 * max_se;

  SpectrumEngine tri(Coupling(2, 1));
  auto prof_t = dimension_profile(tri, 5, 13);
  const DimensionEstimate& l = prof_t.front().second;
  const DimensionEstimate& r = prof_t.back().second;
  bool separated = std::abs(l.value - r.value) > 2.0 * (l.std_error + r.std_error);

  double secs = timer.seconds();
  report(9, "profile flat at (1,0.5), split at (2,1)", flat && separated && secs < 180.0,
         "spread " + num(hi - lo) + " vs 2se " + num(2.0 * max_se) + "; split " +
             num(std::abs(l.value - r.value)),
         secs);
}

// 10. weak-coupling limit along (1+t, t)
void criterion10() {
  Timer timer;
  std::vector<double> vals;
  for (double t : {0.4, 0.2, 0.1, 0.05}) {
    SpectrumEngine eng(Coupling(1.0 + t, t));
    IntervalSet cover = eng.approx_spectrum(14);
    auto [emin, emax] = default_scales(cover, eng.tol());
    vals.push_back(box_dimension(cover, emin, emax, 12).value);
  }
  bool increasing = vals[0] < vals[1] && vals[1] < vals[2] && vals[2] < vals[3];
  report(10, "weak-coupling dimension limit", increasing && vals[3] >= 0.9,
         num(vals[0]) + " -> " + num(vals[3]), timer.seconds());
}

// 11. Per2, reversibility and the torus semiconjugacy
void criterion11() {
  Timer timer;
  double worst_p2 = 0.0;
  for (double x : {-3.0, -1.0, 0.75, 1.0, 2.0, 5.0}) {
    TraceTriple t = per2_point(x);
    TraceTriple s = step(step(t));
    for (int i = 0; i < 3; ++i) worst_p2 = std::max(worst_p2, std::abs(s[i] - t[i]));
  }
  std::mt19937_64 rng(111);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_rev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    TraceTriple t{u(rng), u(rng), u(rng)};
    TraceTriple a = inverse_step(t);
    TraceTriple fs = step({t[2], t[1], t[0]});
    TraceTriple b{fs[2], fs[1], fs[0]};
    for (int j = 0; j < 3; ++j) worst_rev = std::max(worst_rev, std::abs(a[j] - b[j]));
  }
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  double worst_semi = 0.0;
  for (int i = 0; i < 100; ++i) {
    double th = ang(rng), ph = ang(rng);
    TraceTriple lhs = step(torus_factor(th, ph));
    TraceTriple rhs = torus_factor(th + ph, th);
    for (int j = 0; j < 3; ++j) worst_semi = std::max(worst_semi, std::abs(lhs[j] - rhs[j]));
  }
  report(11, "Per2 / reversibility / torus factor",
         worst_p2 <= 1e-12 && worst_rev <= 1e-13 && worst_semi <= 1e-12,
         "per2 " + num(worst_p2) + ", rev " + num(worst_rev) + ", semi " + num(worst_semi),
         timer.seconds());
}

// 12. DOS properties
void criterion12() {
  Timer timer;
  SpectrumEngine weak(Coupling(1, 0.2));
  IdsFunction ids(weak, 14);
  bool mass_ok = std::abs(ids.value(1e9) - 1.0) <= 1e-12 && ids.value(-1e9) == 0.0;

  auto rows = dimension_gap_report(weak, 14, 20, 1205);
  std::vector<double> ds;
  for (const GapReportRow& r : rows)
    if (r.pointwise.r_squared >= 0.9) ds.push_back(r.pointwise.value);
  std::sort(ds.begin(), ds.end());
  double median = ds.empty() ? -1.0 : ds[ds.size() / 2];
  bool median_ok = ds.size() >= 10 && median > 0.8 && median < 1.0;

  SpectrumEngine strong(Coupling(1, 2));
  auto rows2 = dimension_gap_report(strong, 13, 20, 1205);
  double mean_gap = 0.0;
  int n_conv = 0;
  for (const GapReportRow& r : rows2)
    if (r.converged) {
      mean_gap += r.gap;
      ++n_conv;
    }
  mean_gap = n_conv > 0 ? mean_gap / n_conv : -1.0;
  bool gap_ok = n_conv >= 10 && mean_gap > 0.0;

  report(12, "DOS mass, pointwise median, dim gap", mass_ok && median_ok && gap_ok,
         "median " + num(median) + ", mean gap " + num(mean_gap), timer.seconds());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%s\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return g_failures == 0 ? 0 : 1;
}
