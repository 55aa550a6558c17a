// Coupling parameters (p, q) with the normalization p(a) = 1, q(a) = 0.
#pragma once

#include <cmath>
#include <stdexcept>

namespace fibspec {

class Coupling {
 public:
  Coupling(double p, double q) : p_(p), q_(q) {
    if (p == 0.0) throw std::invalid_argument("coupling: p must be nonzero");
  }

  double p() const { return p_; }
  double q() const { return q_; }

  double hopping(char letter) const { return letter == 'a' ? 1.0 : p_; }
  double potential(char letter) const { return letter == 'a' ? 0.0 : q_; }

 private:
  double p_;
  double q_;
};

// Gershgorin-type radius: the spectrum lies in [-R, R].
inline double search_radius(const Coupling& c) {
  return 2.0 * std::max(1.0, std::abs(c.p())) + std::abs(c.q());
}

// Default escape bound, strictly above |(1 + p^2)/(2p)| and >= 1.
inline double default_bound_c(const Coupling& c) {
  double thr = std::abs((1.0 + c.p() * c.p()) / (2.0 * c.p()));
  return std::max(1.0, thr) + 1.0;
}

}  // namespace fibspec
