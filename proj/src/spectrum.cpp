#include "spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "tracemap.hpp"
#include "words.hpp"

namespace fibspec {

namespace {

constexpr double kClamp = 1e150;

struct Edge {
  double x;
  double sign;  // root of x_k = sign
};

double golden_ratio_step() { return (std::sqrt(5.0) - 1.0) / 2.0; }

}  // namespace

double trace_poly_eval(int k, double lambda, const Coupling& c, bool* saturated) {
  if (k < 1) throw std::invalid_argument("trace_poly_eval: k must be >= 1");
  if (saturated) *saturated = false;
  TraceTriple t = gamma(lambda, c);
  if (k == 1) return t[0];
  for (int i = 0; i < k - 1; ++i) {
    t = step(t);
    for (int j = 0; j < 2; ++j) {
      if (t[j] > kClamp) {
        t[j] = kClamp;
        if (saturated) *saturated = true;
      } else if (t[j] < -kClamp) {
        t[j] = -kClamp;
        if (saturated) *saturated = true;
      }
    }
  }
  return t[0];
}

Interval search_bounds(const Coupling& c) {
  double r = search_radius(c);
  return {-r, r};
}

SpectrumEngine::SpectrumEngine(const Coupling& c, double tol)
    : c_(c), tol_(tol), bound_c_(default_bound_c(c)) {
  if (tol <= 0.0) throw std::invalid_argument("spectrum engine: tol must be > 0");
}

namespace {

class LevelFn {
 public:
  LevelFn(int k, const Coupling& c) : k_(k), c_(c) {}
  double operator()(double x) const { return trace_poly_eval(k_, x, c_); }

  // root of x_k = shift on a bracketing interval
  double bisect_root(double a, double b, double fa, double fb, double shift,
                     double tol) const {
    while (b - a > tol) {
      double m = 0.5 * (a + b);
      if (m == a || m == b) break;
      double fm = (*this)(m) - shift;
      if (fa * fm <= 0.0) {
        b = m;
        fb = fm;
      } else {
        a = m;
        fa = fm;
      }
    }
    (void)fb;
    return 0.5 * (a + b);
  }

  // golden-section maximum of sign * x_k over [a, b]
  std::pair<double, double> golden_max(double a, double b, double sign, double xtol) const {
    const double gr = golden_ratio_step();
    double c1 = b - gr * (b - a), d1 = a + gr * (b - a);
    double fc = sign * (*this)(c1), fd = sign * (*this)(d1);
    while (b - a > xtol) {
      if (fc > fd) {
        b = d1;
        d1 = c1;
        fd = fc;
        c1 = b - gr * (b - a);
        fc = sign * (*this)(c1);
      } else {
        a = c1;
        c1 = d1;
        fc = fd;
        d1 = a + gr * (b - a);
        fd = sign * (*this)(d1);
      }
    }
    double m = 0.5 * (a + b);
    return {m, sign * (*this)(m)};
  }

 private:
  int k_;
  Coupling c_;
};

}  // namespace

std::vector<SpectrumEngine::Component> SpectrumEngine::domains(int k) {
  if (k <= 4) {
    double r = search_radius(c_);
    double lo = std::min(-r, c_.q() - 2.0 * bound_c_) - 0.5;
    double hi = std::max(r, c_.q() + 2.0 * bound_c_) + 0.5;
    return {{lo, hi, 64}};
  }
  const std::vector<Component>& a = sigma_hat_default(k - 2);
  const std::vector<Component>& b = sigma_hat_default(k - 1);
  std::vector<Component> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end(),
            [](const Component& x, const Component& y) { return x.left < y.left; });
  std::vector<Component> out;
  for (const Component& comp : all) {
    if (!out.empty() && comp.left <= out.back().right + IntervalSet::kMergeTol) {
      out.back().right = std::max(out.back().right, comp.right);
      out.back().count += comp.count;
    } else {
      out.push_back(comp);
    }
  }
  return out;
}

const BandLevel& SpectrumEngine::level(int k) {
  if (k < 1) throw std::invalid_argument("level: k must be >= 1");
  auto it = levels_.find(k);
  if (it != levels_.end()) return it->second;

  const LevelFn f(k, c_);
  const std::vector<Component> doms = domains(k);
  const std::int64_t target = fibonacci(k);

  std::vector<ElementaryBand> elementary;
  int mult = 1;
  bool done = false;
  for (int round = 0; round < 8 && !done; ++round, mult *= 4) {
    // collect roots of x_k = +-1 on per-component grids
    std::vector<Edge> edges;
    for (const Component& comp : doms) {
      double pad = 1e-7;
      int n = (64 + 48 * comp.count) * mult;
      double lo = comp.left - pad, hi = comp.right + pad;
      std::vector<double> vals(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) vals[i] = f(lo + (hi - lo) * i / n);
      for (double s : {1.0, -1.0}) {
        for (int i = 0; i < n; ++i) {
          double ga = vals[i] - s, gb = vals[i + 1] - s;
          if (ga == 0.0) {
            edges.push_back({lo + (hi - lo) * i / n, s});
          } else if (ga * gb < 0.0) {
            double xa = lo + (hi - lo) * i / n;
            double xb = lo + (hi - lo) * (i + 1) / n;
            edges.push_back({f.bisect_root(xa, xb, ga, gb, s, tol_), s});
          }
        }
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.x < b.x; });

    elementary.clear();
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      double mid = 0.5 * (edges[i].x + edges[i + 1].x);
      if (std::abs(f(mid)) <= 1.0) {
        elementary.push_back(
            {edges[i].x, edges[i + 1].x, edges[i].sign > 0.0 ? +1 : -1});
      }
    }
    std::int64_t nb = static_cast<std::int64_t>(elementary.size());
    if (nb > target) throw std::runtime_error("band isolation: spurious roots");
    if (nb == target) {
      done = true;
      break;
    }

    // closed gaps: tangencies of x_k with +-1 inside a band. Chebyshev nodes
    // match the edgeward clustering of the oscillation extrema.
    double total = 0.0;
    for (const ElementaryBand& b : elementary) total += b.right - b.left;
    std::vector<ElementaryBand> split;
    std::int64_t found = nb;
    for (const ElementaryBand& b : elementary) {
      std::vector<double> touches;
      int n = 64 + static_cast<int>(8.0 * static_cast<double>(target) *
                                    (total > 0.0 ? (b.right - b.left) / total : 0.0));
      double mid = 0.5 * (b.left + b.right), half = 0.5 * (b.right - b.left);
      std::vector<double> xs(static_cast<std::size_t>(n) + 1), vs(xs.size());
      for (int i = 0; i <= n; ++i) {
        xs[i] = mid - half * std::cos(std::numbers::pi * i / n);
        vs[i] = f(xs[i]);
      }
      for (int i = 1; i < n; ++i) {
        if ((vs[i] - vs[i - 1]) * (vs[i + 1] - vs[i]) < 0.0) {
          double sign = vs[i] > 0.0 ? 1.0 : -1.0;
          auto [xm, vm] = f.golden_max(xs[i - 1], xs[i + 1], sign,
                                       1e-12 * (1.0 + std::abs(xs[i])));
          if (std::abs(std::abs(vm) - 1.0) <= 1e-9) touches.push_back(xm);
        }
      }
      found += static_cast<std::int64_t>(touches.size());
      double cur = b.left;
      for (double t : touches) {
        split.push_back({cur, t, b.orientation});
        cur = t;
      }
      split.push_back({cur, b.right, b.orientation});
    }
    if (found == target) {
      elementary = std::move(split);
      done = true;
    }
  }
  if (!done || static_cast<std::int64_t>(elementary.size()) != target)
    throw std::runtime_error("band isolation failed: missed bands at level " +
                             std::to_string(k));

  BandLevel lv;
  lv.k = k;
  lv.elementary = std::move(elementary);
  std::vector<Interval> merged;
  merged.reserve(lv.elementary.size());
  for (const ElementaryBand& b : lv.elementary) merged.push_back({b.left, b.right});
  lv.bands = IntervalSet::normalized(std::move(merged));
  lv.band_count = static_cast<int>(lv.bands.size());
  return levels_.emplace(k, std::move(lv)).first->second;
}

std::vector<SpectrumEngine::Component> SpectrumEngine::expand_to_threshold(int k,
                                                                           double c_thr) {
  const BandLevel& lv = level(k);
  const LevelFn f(k, c_);
  auto absf = [&](double x) { return std::abs(f(x)); };
  // root of |x_k| = C on a bracket where |x_k| - C changes sign
  auto bisect_h = [&](double a, double b) {
    double fa = absf(a) - c_thr, fb = absf(b) - c_thr;
    while (b - a > tol_) {
      double m = 0.5 * (a + b);
      if (m == a || m == b) break;
      double fm = absf(m) - c_thr;
      if (fa * fm <= 0.0) {
        b = m;
        fb = fm;
      } else {
        a = m;
        fa = fm;
      }
    }
    (void)fb;
    return 0.5 * (a + b);
  };
  // |x_k| is unimodal on a gap: all interior critical points of x_k lie in
  // gaps, one per gap, once tangencies are fused into their bands.
  auto golden_max_abs = [&](double a, double b) {
    const double gr = golden_ratio_step();
    double xtol = 1e-12 * (1.0 + std::abs(a));
    double c1 = b - gr * (b - a), d1 = a + gr * (b - a);
    double fc = absf(c1), fd = absf(d1);
    while (b - a > xtol) {
      if (fc > fd) {
        b = d1;
        d1 = c1;
        fd = fc;
        c1 = b - gr * (b - a);
        fc = absf(c1);
      } else {
        a = c1;
        c1 = d1;
        fc = fd;
        d1 = a + gr * (b - a);
        fd = absf(d1);
      }
    }
    double m = 0.5 * (a + b);
    return std::pair<double, double>{m, absf(m)};
  };

  // merge elementary bands that share endpoints (tangencies)
  std::vector<Component> merged;
  for (const ElementaryBand& b : lv.elementary) {
    if (!merged.empty() && b.left <= merged.back().right + 1e-12) {
      merged.back().right = b.right;
      merged.back().count += 1;
    } else {
      merged.push_back({b.left, b.right, 1});
    }
  }

  // outer crossings: walk outward until |x_k| exceeds the threshold
  double ext_l = merged.front().left - 1.0;
  while (absf(ext_l) <= c_thr) ext_l -= 1.0;
  double ext_r = merged.back().right + 1.0;
  while (absf(ext_r) <= c_thr) ext_r += 1.0;

  std::vector<Component> comps;
  double cur_left = bisect_h(ext_l, merged.front().left);
  int cur_count = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    cur_count += merged[i].count;
    if (i + 1 == merged.size()) {
      comps.push_back({cur_left, bisect_h(merged[i].right, ext_r), cur_count});
      break;
    }
    double gl = merged[i].right, gr = merged[i + 1].left;
    if (gr - gl <= 2.0 * tol_) continue;  // negligible gap: merge through
    auto [xm, peak] = golden_max_abs(gl, gr);
    if (peak < c_thr) continue;  // gap extremum below C: merge through
    comps.push_back({cur_left, bisect_h(gl, xm), cur_count});
    cur_count = 0;
    cur_left = bisect_h(xm, gr);
  }
  return comps;
}

const std::vector<SpectrumEngine::Component>& SpectrumEngine::sigma_hat_default(int k) {
  auto it = sigma_.find(k);
  if (it != sigma_.end()) return it->second;
  std::vector<Component> comps = expand_to_threshold(k, bound_c_);
  return sigma_.emplace(k, std::move(comps)).first->second;
}

IntervalSet SpectrumEngine::bands(int k) { return level(k).bands; }

IntervalSet SpectrumEngine::trace_bounded_set(int k, double c_thr) {
  if (c_thr < 1.0) throw std::invalid_argument("trace_bounded_set: C must be >= 1");
  std::vector<Component> comps = (c_thr == bound_c_)
                                     ? sigma_hat_default(k)
                                     : expand_to_threshold(k, c_thr);
  std::vector<Interval> iv;
  iv.reserve(comps.size());
  for (const Component& c : comps) iv.push_back({c.left, c.right});
  return IntervalSet::normalized(std::move(iv));
}

IntervalSet SpectrumEngine::approx_spectrum(int k, double c_thr) {
  double cc = c_thr <= 0.0 ? bound_c_ : c_thr;
  return IntervalSet::unite(trace_bounded_set(k, cc), trace_bounded_set(k + 1, cc));
}

BandLevel bands(int k, const Coupling& c, double tol) {
  SpectrumEngine eng(c, tol);
  return eng.level(k);
}

IntervalSet trace_bounded_set(int k, const Coupling& c, double bound_c, double tol) {
  SpectrumEngine eng(c, tol);
  return eng.trace_bounded_set(k, bound_c);
}

IntervalSet approx_spectrum(int k, const Coupling& c, double bound_c, double tol) {
  SpectrumEngine eng(c, tol);
  return eng.approx_spectrum(k, bound_c);
}

IntervalSet escape_spectrum(const Coupling& c, int depth, double resolution, double bound_c) {
  if (depth < 2) throw std::invalid_argument("escape_spectrum: depth must be >= 2");
  if (resolution <= 0.0) throw std::invalid_argument("escape_spectrum: resolution must be > 0");
  double cc = bound_c <= 0.0 ? default_bound_c(c) : bound_c;
  auto escaped = [&](double x) { return escape_time(x, c, cc, depth).escaped(); };

  Interval dom = search_bounds(c);
  // fixed binary subdivision tree: deeper depths prune monotonically. The
  // initial cells are independent subtrees, processed in parallel and merged
  // in index order.
  struct Node {
    double l, r;
    bool el, er;
  };
  const int kInitial = 256;
  std::vector<bool> edge_escaped(kInitial + 1);
  parallel_for(static_cast<std::size_t>(kInitial) + 1, [&](std::size_t i) {
    edge_escaped[i] = escaped(dom.left + (dom.right - dom.left) * double(i) / kInitial);
  });

  std::vector<std::vector<Interval>> kept_per_cell(kInitial);
  parallel_for(static_cast<std::size_t>(kInitial), [&](std::size_t i) {
    std::vector<Interval>& kept = kept_per_cell[i];
    std::vector<Node> stack;
    stack.push_back({dom.left + (dom.right - dom.left) * double(i) / kInitial,
                     dom.left + (dom.right - dom.left) * double(i + 1) / kInitial,
                     edge_escaped[i], edge_escaped[i + 1]});
    while (!stack.empty()) {
      Node nd = stack.back();
      stack.pop_back();
      if (nd.r - nd.l <= resolution) {
        if (!nd.el || !nd.er || !escaped(0.5 * (nd.l + nd.r)))
          kept.push_back({nd.l, nd.r});
        continue;
      }
      double m = 0.5 * (nd.l + nd.r);
      bool em = escaped(m);
      if (nd.el && nd.er && em) continue;  // agreement: all escaped
      if (!nd.el && !nd.er && !em) {
        kept.push_back({nd.l, nd.r});  // agreement: all bounded
        continue;
      }
      stack.push_back({nd.l, m, nd.el, em});
      stack.push_back({m, nd.r, em, nd.er});
    }
  });
  std::vector<Interval> kept;
  for (const auto& cell : kept_per_cell) kept.insert(kept.end(), cell.begin(), cell.end());
  return IntervalSet::normalized(std::move(kept), resolution * 0.5);
}

}  // namespace fibspec
