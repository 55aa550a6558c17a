#include "eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fibspec {

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form,
// eigenvalue-only variant (accumulates no transforms).
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

double hypot2(double a, double b) { return std::hypot(a, b); }

}  // namespace

void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  int n = static_cast<int>(d.size());
  if (n == 0) return;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 64) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (i == l) {
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
          }
        }
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n <= 0 || static_cast<std::size_t>(n) * n != a.size())
    throw std::invalid_argument("symmetric_eigenvalues: bad dimensions");
  if (n > 2000) throw std::invalid_argument("symmetric_eigenvalues: n > 2000");
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double diff = std::abs(a[static_cast<std::size_t>(i) * n + j] -
                             a[static_cast<std::size_t>(j) * n + i]);
      if (diff > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
    }
  }
  std::vector<double> d, e;
  householder_tridiag(a, n, d, e);
  tridiagonal_eigenvalues(d, e);
  return d;
}

}  // namespace fibspec
