// 2x2 real matrices with log-scale tracking for long cocycle products.
#pragma once

#include <cmath>

namespace fibspec {

struct Mat2 {
  double a, b, c, d;  // [[a, b], [c, d]]

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

inline constexpr Mat2 kIdentity2{1.0, 0.0, 0.0, 1.0};

// Product accumulated with periodic rescaling; entries stay below 1e100 and
// the stripped magnitude lives in log_scale.
struct ScaledMat2 {
  Mat2 m = kIdentity2;
  double log_scale = 0.0;

  void multiply_left(const Mat2& t) {
    m = t * m;
    double s = m.max_abs();
    if (s > 1e100) {
      m.a /= s;
      m.b /= s;
      m.c /= s;
      m.d /= s;
      log_scale += std::log(s);
    }
  }

  // entry-or-trace value rescaled back, saturating at +-1e300
  double restore(double v) const {
    if (v == 0.0) return 0.0;
    double l = log_scale + std::log(std::abs(v));
    if (l > 690.0) return v > 0 ? 1e300 : -1e300;
    return (v > 0 ? 1.0 : -1.0) * std::exp(l);
  }
};

}  // namespace fibspec
