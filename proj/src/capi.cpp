// extern-C surface of libfibspec: status codes, a thread-local error
// message, and opaque interval-set handles over the C++ core.
#include "fibspec/fibspec.h"

#include <cstring>
#include <exception>
#include <string>

#include "dos.hpp"
#include "fractal.hpp"
#include "intervals.hpp"
#include "jacobi.hpp"
#include "spectrum.hpp"
#include "tracemap.hpp"
#include "transfer.hpp"
#include "words.hpp"

struct fibspec_intervals {
  fibspec::IntervalSet set;
};

namespace {

thread_local std::string g_last_error;

fibspec_status fail(fibspec_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
fibspec_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(FIBSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FIBSPEC_ERR_NUMERICAL, e.what());
  }
}

fibspec::Coupling make_coupling(double p, double q) { return fibspec::Coupling(p, q); }

double pick_bound_c(const fibspec::Coupling& c, double bound_c) {
  return bound_c <= 0.0 ? fibspec::default_bound_c(c) : bound_c;
}

double pick_tol(double tol) { return tol <= 0.0 ? fibspec::SpectrumEngine::kDefaultTol : tol; }

fibspec_status require(bool cond, const char* what) {
  return cond ? FIBSPEC_OK : fail(FIBSPEC_ERR_INVALID_ARGUMENT, what);
}

fibspec_dimension to_c(const fibspec::DimensionEstimate& e) {
  return {e.value, e.std_error, e.r_squared, e.eps_min, e.eps_max, e.n_points,
          e.converged ? 1 : 0};
}

}  // namespace

extern "C" {

const char* fibspec_version(void) { return "0.1.0"; }

const char* fibspec_last_error(void) { return g_last_error.c_str(); }

fibspec_status fibspec_fibonacci(int k, long long* out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    *out = fibspec::fibonacci(k);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_fib_word(int k, char* buf, size_t cap, size_t* len) {
  if (auto s = require(len != nullptr, "len is null")) return s;
  return guarded([&] {
    std::string w = fibspec::fib_word(k);
    *len = w.size();
    if (buf == nullptr) return FIBSPEC_OK;
    if (cap < w.size() + 1) return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "word buffer too small");
    std::memcpy(buf, w.c_str(), w.size() + 1);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_trace_step(const double in[3], double out[3]) {
  if (auto s = require(in && out, "null pointer")) return s;
  fibspec::TraceTriple t = fibspec::step({in[0], in[1], in[2]});
  out[0] = t[0];
  out[1] = t[1];
  out[2] = t[2];
  return FIBSPEC_OK;
}

fibspec_status fibspec_trace_inverse_step(const double in[3], double out[3]) {
  if (auto s = require(in && out, "null pointer")) return s;
  fibspec::TraceTriple t = fibspec::inverse_step({in[0], in[1], in[2]});
  out[0] = t[0];
  out[1] = t[1];
  out[2] = t[2];
  return FIBSPEC_OK;
}

fibspec_status fibspec_trace_invariant(const double in[3], double* out) {
  if (auto s = require(in && out, "null pointer")) return s;
  *out = fibspec::invariant({in[0], in[1], in[2]});
  return FIBSPEC_OK;
}

fibspec_status fibspec_gamma(double lambda, double p, double q, double out[3]) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::TraceTriple t = fibspec::gamma(lambda, make_coupling(p, q));
    out[0] = t[0];
    out[1] = t[1];
    out[2] = t[2];
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_invariant_on_line(double lambda, double p, double q, double* out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    *out = fibspec::invariant_on_line(lambda, make_coupling(p, q));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_critical_energy(double p, double q, double* out, int* exists) {
  if (auto s = require(out && exists, "null pointer")) return s;
  return guarded([&] {
    auto e0 = fibspec::critical_energy(make_coupling(p, q));
    *exists = e0.has_value() ? 1 : 0;
    *out = e0.value_or(0.0);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_per2_point(double x, double out[3]) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::TraceTriple t = fibspec::per2_point(x);
    out[0] = t[0];
    out[1] = t[1];
    out[2] = t[2];
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_torus_factor(double theta, double phi, double out[3]) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  fibspec::TraceTriple t = fibspec::torus_factor(theta, phi);
  out[0] = t[0];
  out[1] = t[1];
  out[2] = t[2];
  return FIBSPEC_OK;
}

fibspec_status fibspec_escape_time(double lambda, double p, double q, double bound_c,
                                   int maxiter, int* escaped, int* escape_index,
                                   double final_triple[3], double* max_abs) {
  if (auto s = require(escaped && escape_index, "null pointer")) return s;
  return guarded([&] {
    fibspec::Coupling c = make_coupling(p, q);
    fibspec::OrbitResult r = fibspec::escape_time(lambda, c, pick_bound_c(c, bound_c), maxiter);
    *escaped = r.escaped() ? 1 : 0;
    *escape_index = r.escape_index;
    if (final_triple) {
      final_triple[0] = r.final_triple[0];
      final_triple[1] = r.final_triple[1];
      final_triple[2] = r.final_triple[2];
    }
    if (max_abs) *max_abs = r.max_abs;
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_surface_mesh(double v, double lo, double hi, int n, double* xyz,
                                    size_t cap_triples, size_t* count) {
  if (auto s = require(count != nullptr, "count is null")) return s;
  return guarded([&] {
    auto pts = fibspec::surface_mesh(v, lo, hi, n);
    *count = pts.size();
    if (xyz == nullptr) return FIBSPEC_OK;
    if (cap_triples < pts.size())
      return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "mesh buffer too small");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      xyz[3 * i] = pts[i][0];
      xyz[3 * i + 1] = pts[i][1];
      xyz[3 * i + 2] = pts[i][2];
    }
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_trace_eval(int k, double lambda, double p, double q, double* out,
                                  int* saturated) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    bool sat = false;
    *out = fibspec::trace_poly_eval(k, lambda, make_coupling(p, q), &sat);
    if (saturated) *saturated = sat ? 1 : 0;
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_half_trace(const char* word, double lambda, double p, double q,
                                  double* out) {
  if (auto s = require(word && out, "null pointer")) return s;
  return guarded([&] {
    *out = fibspec::half_trace(std::string(word), lambda, make_coupling(p, q));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_half_trace_trace_cell(int k, double lambda, double p, double q,
                                             double* out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    *out = fibspec::half_trace(fibspec::trace_cell(k), lambda, make_coupling(p, q));
    return FIBSPEC_OK;
  });
}

void fibspec_intervals_free(fibspec_intervals* s) { delete s; }

size_t fibspec_intervals_size(const fibspec_intervals* s) { return s ? s->set.size() : 0; }

fibspec_status fibspec_intervals_get(const fibspec_intervals* s, size_t i, double* left,
                                     double* right) {
  if (auto st = require(s && left && right, "null pointer")) return st;
  if (i >= s->set.size()) return fail(FIBSPEC_ERR_INVALID_ARGUMENT, "index out of range");
  *left = s->set[i].left;
  *right = s->set[i].right;
  return FIBSPEC_OK;
}

double fibspec_intervals_measure(const fibspec_intervals* s) {
  return s ? s->set.measure() : 0.0;
}

fibspec_status fibspec_search_bounds(double p, double q, double* lo, double* hi) {
  if (auto s = require(lo && hi, "null pointer")) return s;
  return guarded([&] {
    fibspec::Interval b = fibspec::search_bounds(make_coupling(p, q));
    *lo = b.left;
    *hi = b.right;
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_bands(int k, double p, double q, double tol, fibspec_intervals** out,
                             int* band_count) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::BandLevel lv = fibspec::bands(k, make_coupling(p, q), pick_tol(tol));
    if (band_count) *band_count = lv.band_count;
    *out = new fibspec_intervals{std::move(lv.bands)};
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_trace_bounded_set(int k, double p, double q, double bound_c,
                                         double tol, fibspec_intervals** out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::Coupling c = make_coupling(p, q);
    *out = new fibspec_intervals{
        fibspec::trace_bounded_set(k, c, pick_bound_c(c, bound_c), pick_tol(tol))};
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_approx_spectrum(int k, double p, double q, double bound_c, double tol,
                                       fibspec_intervals** out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::Coupling c = make_coupling(p, q);
    *out = new fibspec_intervals{
        fibspec::approx_spectrum(k, c, pick_bound_c(c, bound_c), pick_tol(tol))};
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_escape_spectrum(double p, double q, int depth, double resolution,
                                       double bound_c, fibspec_intervals** out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::Coupling c = make_coupling(p, q);
    *out = new fibspec_intervals{
        fibspec::escape_spectrum(c, depth, resolution, pick_bound_c(c, bound_c))};
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_oracle_bands(int k, double p, double q, int use_trace_cell,
                                    fibspec_intervals** out) {
  if (auto s = require(out != nullptr, "out is null")) return s;
  return guarded([&] {
    fibspec::Coupling c = make_coupling(p, q);
    fibspec::IntervalSet set =
        use_trace_cell ? fibspec::band_edges_oracle(k, c)
                       : fibspec::band_edges_for_cell(fibspec::original_cell(k), c);
    *out = new fibspec_intervals{std::move(set)};
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_measure_scan(int kmin, int kmax, double p, double q, double bound_c,
                                    double tol, double* rows, size_t cap_rows, size_t* n) {
  if (auto s = require(n != nullptr, "n is null")) return s;
  if (kmin < 2 || kmax < kmin) return fail(FIBSPEC_ERR_INVALID_ARGUMENT, "bad level range");
  return guarded([&] {
    *n = static_cast<size_t>(kmax - kmin + 1);
    if (rows == nullptr) return FIBSPEC_OK;
    if (cap_rows < *n) return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "rows buffer too small");
    fibspec::Coupling c = make_coupling(p, q);
    fibspec::SpectrumEngine eng(c, pick_tol(tol));
    double cc = pick_bound_c(c, bound_c);
    for (int k = kmin; k <= kmax; ++k) {
      std::size_t i = static_cast<std::size_t>(k - kmin);
      rows[3 * i] = k;
      rows[3 * i + 1] = static_cast<double>(eng.level(k).band_count);
      rows[3 * i + 2] = eng.approx_spectrum(k, cc).measure();
    }
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_box_count(const fibspec_intervals* s, double eps, long long* out) {
  if (auto st = require(s && out, "null pointer")) return st;
  return guarded([&] {
    *out = fibspec::box_count(s->set, eps);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_box_dimension(const fibspec_intervals* s, double eps_min,
                                     double eps_max, int n_scales, fibspec_dimension* out) {
  if (auto st = require(s && out, "null pointer")) return st;
  return guarded([&] {
    *out = to_c(fibspec::box_dimension(s->set, eps_min, eps_max, n_scales));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_spectrum_dimension(double p, double q, int k, int n_scales,
                                          fibspec_dimension* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    fibspec::IntervalSet cover = eng.approx_spectrum(k);
    auto [emin, emax] = fibspec::default_scales(cover, eng.tol());
    *out = to_c(fibspec::box_dimension(cover, emin, emax, n_scales));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_local_dimension(double p, double q, int k, double window_left,
                                       double window_right, int n_scales,
                                       fibspec_dimension* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    *out = to_c(fibspec::local_dimension(eng, {window_left, window_right}, k, n_scales));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_dimension_profile(double p, double q, int k, int n_windows,
                                         int n_scales, double* centers,
                                         fibspec_dimension* est, size_t cap, size_t* n) {
  if (auto st = require(n != nullptr, "n is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    auto prof = fibspec::dimension_profile(eng, n_windows, k, n_scales);
    *n = prof.size();
    if (centers == nullptr || est == nullptr) return FIBSPEC_OK;
    if (cap < prof.size())
      return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "profile buffer too small");
    for (std::size_t i = 0; i < prof.size(); ++i) {
      centers[i] = prof[i].first;
      est[i] = to_c(prof[i].second);
    }
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_ids_value(int k, double p, double q, double lambda, double* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    fibspec::IdsFunction ids(eng, k);
    *out = ids.value(lambda);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_dos_weight(int k, double p, double q, double a, double b,
                                  double* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    fibspec::IdsFunction ids(eng, k);
    *out = ids.weight(a, b);
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_ids_bands(int k, double p, double q, double* rows, size_t cap_rows,
                                 size_t* n) {
  if (auto st = require(n != nullptr, "n is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    fibspec::IdsFunction ids(eng, k);
    *n = ids.bands().size();
    if (rows == nullptr) return FIBSPEC_OK;
    if (cap_rows < *n) return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "rows buffer too small");
    for (std::size_t i = 0; i < *n; ++i) {
      const fibspec::ElementaryBand& b = ids.bands()[i];
      rows[4 * i] = b.left;
      rows[4 * i + 1] = b.right;
      rows[4 * i + 2] = ids.value(b.left);
      rows[4 * i + 3] = ids.value(b.right);
    }
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_pointwise_dimension(double p, double q, int k, double energy,
                                           double eps_min, double eps_max, int n_scales,
                                           fibspec_dimension* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    *out = to_c(fibspec::pointwise_dimension(eng, k, energy, eps_min, eps_max, n_scales));
    return FIBSPEC_OK;
  });
}

fibspec_status fibspec_dos_report(double p, double q, int k, int n_points,
                                  unsigned long long seed, double* rows, size_t cap_rows,
                                  size_t* n) {
  if (auto st = require(n != nullptr, "n is null")) return st;
  return guarded([&] {
    fibspec::SpectrumEngine eng(make_coupling(p, q));
    auto report = fibspec::dimension_gap_report(eng, k, n_points, seed);
    *n = report.size();
    if (rows == nullptr) return FIBSPEC_OK;
    if (cap_rows < *n) return fail(FIBSPEC_ERR_BUFFER_TOO_SMALL, "rows buffer too small");
    for (std::size_t i = 0; i < *n; ++i) {
      rows[5 * i] = report[i].energy;
      rows[5 * i + 1] = report[i].pointwise.value;
      rows[5 * i + 2] = report[i].local_dim.value;
      rows[5 * i + 3] = report[i].gap;
      rows[5 * i + 4] = report[i].converged ? 1.0 : 0.0;
    }
    return FIBSPEC_OK;
  });
}

}  // extern "C"
