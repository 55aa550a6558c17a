#include "tracemap.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fibspec {

namespace {
constexpr double kClamp = 1e150;

double clamp_component(double x) {
  if (x > kClamp) return kClamp;
  if (x < -kClamp) return -kClamp;
  return x;
}
}  // namespace

TraceTriple step(const TraceTriple& t) { return {2.0 * t[0] * t[1] - t[2], t[0], t[1]}; }

TraceTriple inverse_step(const TraceTriple& t) {
  return {t[1], t[2], 2.0 * t[1] * t[2] - t[0]};
}

namespace {

// fma-based exact product: a*b = p + e
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

double invariant(const TraceTriple& t) {
  // compensated evaluation: the monomials cancel to O(1) even when the
  // components are large, so naive summation loses the result entirely
  double x = t[0], y = t[1], z = t[2];
  double p, e;
  double terms[8];
  two_prod(x, x, p, e);
  terms[0] = p;
  terms[1] = e;
  two_prod(y, y, p, e);
  terms[2] = p;
  terms[3] = e;
  two_prod(z, z, p, e);
  terms[4] = p;
  terms[5] = e;
  double xy, exy;
  two_prod(x, y, xy, exy);
  double xyz, exyz;
  two_prod(xy, z, xyz, exyz);
  terms[6] = -2.0 * xyz;
  terms[7] = -2.0 * (exyz + exy * z);

  // Neumaier summation
  double sum = -1.0, comp = 0.0;
  for (double v : terms) {
    double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return sum + comp;
}

TraceTriple gamma(double lambda, const Coupling& c) {
  double p = c.p(), q = c.q();
  return {(lambda - q) / 2.0, lambda / (2.0 * p), (1.0 + p * p) / (2.0 * p)};
}

double invariant_on_line(double lambda, const Coupling& c) {
  double p2 = c.p() * c.p(), q = c.q();
  return (lambda * q * (1.0 - p2) + q * q * p2 + (p2 - 1.0) * (p2 - 1.0)) / (4.0 * p2);
}

std::optional<double> critical_energy(const Coupling& c) {
  double p2 = c.p() * c.p(), q = c.q();
  double slope = q * (1.0 - p2);
  if (slope == 0.0) return std::nullopt;
  return -(q * q * p2 + (p2 - 1.0) * (p2 - 1.0)) / slope;
}

OrbitResult escape_time(double lambda, const Coupling& c, double bound_c, int maxiter) {
  double thr = std::abs((1.0 + c.p() * c.p()) / (2.0 * c.p()));
  if (bound_c <= thr || bound_c < 1.0)
    throw std::invalid_argument("escape_time: C below (1+p^2)/2p");
  if (maxiter < 1) throw std::invalid_argument("escape_time: maxiter must be >= 1");

  TraceTriple t = gamma(lambda, c);
  OrbitResult res;
  res.max_abs = std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
  for (int n = 1; n <= maxiter; ++n) {
    t = step(t);
    t[0] = clamp_component(t[0]);
    t[1] = clamp_component(t[1]);
    res.max_abs = std::max(res.max_abs, std::abs(t[0]));
    // t = (x_{n+1}, x_n, x_{n-1}); pair (x_n, x_{n+1}) over the bound
    if (std::abs(t[1]) > bound_c && std::abs(t[0]) > bound_c) {
      res.status = OrbitResult::Status::escaped;
      res.escape_index = n;
      res.final_triple = t;
      return res;
    }
  }
  res.status = OrbitResult::Status::bounded_up_to_maxiter;
  res.final_triple = t;
  return res;
}

TraceTriple per2_point(double x) {
  if (x == 0.5) throw std::invalid_argument("per2_point: x = 1/2 excluded");
  return {x, x / (2.0 * x - 1.0), x};
}

TraceTriple torus_factor(double theta, double phi) {
  constexpr double tau = 2.0 * std::numbers::pi;
  return {std::cos(tau * (theta + phi)), std::cos(tau * theta), std::cos(tau * phi)};
}

std::vector<TraceTriple> surface_mesh(double v, double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("surface_mesh: n must be >= 2");
  std::vector<TraceTriple> out;
  for (int i = 0; i < n; ++i) {
    double x = lo + (hi - lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      double y = lo + (hi - lo) * j / (n - 1);
      // I = v is quadratic in z: z^2 - 2xy z + (x^2 + y^2 - 1 - v) = 0
      double disc = (x * x - 1.0) * (y * y - 1.0) + v;
      if (disc < 0.0) continue;
      double s = std::sqrt(disc);
      for (double z : {x * y + s, x * y - s}) {
        TraceTriple t{x, y, z};
        if (std::abs(invariant(t) - v) <= 1e-10 * (1.0 + std::abs(v))) out.push_back(t);
        if (s == 0.0) break;
      }
    }
  }
  return out;
}

}  // namespace fibspec
