// The Fibonacci trace map f(x,y,z) = (2xy - z, x, y), its inverse, the
// Fricke-Vogt invariant, the line of initial conditions, escape-time
// analysis and the dynamical fixtures (Per_2, torus factor, symmetry).
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "coupling.hpp"

namespace fibspec {

using TraceTriple = std::array<double, 3>;

TraceTriple step(const TraceTriple& t);
TraceTriple inverse_step(const TraceTriple& t);

// I(x,y,z) = x^2 + y^2 + z^2 - 2xyz - 1, conserved by the trace map.
double invariant(const TraceTriple& t);

// gamma(lambda) = ((lambda - q)/2, lambda/(2p), (1 + p^2)/(2p)).
TraceTriple gamma(double lambda, const Coupling& c);

// Closed form of I(gamma(lambda)).
double invariant_on_line(double lambda, const Coupling& c);

// Energy where the invariant vanishes along gamma; nullopt when the
// invariant is lambda-independent (q(1 - p^2) = 0).
std::optional<double> critical_energy(const Coupling& c);

struct OrbitResult {
  enum class Status { escaped, bounded_up_to_maxiter };
  Status status = Status::bounded_up_to_maxiter;
  int escape_index = -1;
  TraceTriple final_triple{};
  double max_abs = 0.0;

  bool escaped() const { return status == Status::escaped; }
};

// Iterates the trace map from gamma(lambda). Escapes at the first index n
// with two consecutive half-traces |x_n|, |x_{n+1}| both above bound_c; a
// single exceedance does not imply escape. Components are clamped at 1e150.
OrbitResult escape_time(double lambda, const Coupling& c, double bound_c, int maxiter);

// Period-two curve (x, x/(2x - 1), x); x = 1/2 excluded.
TraceTriple per2_point(double x);

// Semiconjugacy with the torus automorphism [[1,1],[1,0]]:
// F(theta, phi) = (cos 2pi(theta+phi), cos 2pi theta, cos 2pi phi).
TraceTriple torus_factor(double theta, double phi);

// Points of the level surface I = v over an (x, y) grid on [lo, hi]^2;
// both z-roots of the quadratic, cells with complex roots omitted.
std::vector<TraceTriple> surface_mesh(double v, double lo, double hi, int n);

}  // namespace fibspec
