// Band-set computation from the trace map: level-k bands {|x_k| <= 1},
// trace-bounded sets {|x_k| <= C}, their nested covers, and the escape-time
// approximation of the spectrum.
//
// Root isolation is hierarchical: the bands of level k live inside the
// union of the C-level sets of levels k-2 and k-1, so each level is only
// searched inside the previous cover, with grid density driven by the
// number of bands a component holds and re-densified until the exact band
// count F_k (tangencies counted by multiplicity) is reached.
#pragma once

#include <map>
#include <vector>

#include "coupling.hpp"
#include "intervals.hpp"

namespace fibspec {

// x_k(lambda) by iterating the trace map from gamma; components are clamped
// at 1e150 and *saturated reports whether clamping occurred.
double trace_poly_eval(int k, double lambda, const Coupling& c, bool* saturated = nullptr);

struct ElementaryBand {
  double left;
  double right;
  int orientation;  // +1 when x_k = +1 at the left edge
};

struct BandLevel {
  int k = 0;
  std::vector<ElementaryBand> elementary;  // exactly F_k, touch-split
  IntervalSet bands;                       // merged closed bands
  int band_count = 0;                      // merged count (<= F_k)
};

Interval search_bounds(const Coupling& c);  // [-R, R], R = 2 max(1,|p|) + |q|

class SpectrumEngine {
 public:
  explicit SpectrumEngine(const Coupling& c, double tol = kDefaultTol);

  const Coupling& coupling() const { return c_; }
  double tol() const { return tol_; }
  double bound_c() const { return bound_c_; }

  // Elementary bands of {|x_k| <= 1} with orientations; k >= 1.
  const BandLevel& level(int k);

  IntervalSet bands(int k);                            // {|x_k| <= 1}, merged
  IntervalSet trace_bounded_set(int k, double c_thr);  // {|x_k| <= C}
  // trace_bounded_set(k) u trace_bounded_set(k+1); c_thr <= 0 means default.
  IntervalSet approx_spectrum(int k, double c_thr = -1.0);

  static constexpr double kDefaultTol = 1e-10;

 private:
  struct Component {
    double left;
    double right;
    int count;  // bands inside
  };

  std::vector<Component> domains(int k);
  const std::vector<Component>& sigma_hat_default(int k);
  std::vector<Component> expand_to_threshold(int k, double c_thr);

  Coupling c_;
  double tol_;
  double bound_c_;
  std::map<int, BandLevel> levels_;
  std::map<int, std::vector<Component>> sigma_;
};

// One-shot wrappers.
BandLevel bands(int k, const Coupling& c, double tol = SpectrumEngine::kDefaultTol);
IntervalSet trace_bounded_set(int k, const Coupling& c, double bound_c,
                              double tol = SpectrumEngine::kDefaultTol);
IntervalSet approx_spectrum(int k, const Coupling& c, double bound_c = -1.0,
                            double tol = SpectrumEngine::kDefaultTol);

// Adaptive escape-time cover of the spectrum at the given resolution. The
// subdivision tree is deterministic, so deeper depths give nested covers.
IntervalSet escape_spectrum(const Coupling& c, int depth, double resolution,
                            double bound_c = -1.0);

}  // namespace fibspec
