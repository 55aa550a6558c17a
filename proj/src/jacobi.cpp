#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eigen_sym.hpp"

namespace fibspec {

PeriodicCellMatrix periodic_matrix(const Cell& cell, const Coupling& c, int phase) {
  int n = static_cast<int>(cell.size());
  if (n < 2) throw std::invalid_argument("periodic_matrix: cell must have >= 2 sites");
  if (phase != 1 && phase != -1) throw std::invalid_argument("periodic_matrix: phase must be +-1");
  PeriodicCellMatrix m;
  m.n = n;
  m.phase = phase;
  m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  auto add = [&](int i, int j, double v) { m.a[static_cast<std::size_t>(i) * n + j] += v; };
  for (int i = 0; i < n; ++i) add(i, i, c.potential(cell[i].pot));
  for (int i = 0; i + 1 < n; ++i) {
    double b = c.hopping(cell[i + 1].hop);
    add(i, i + 1, b);
    add(i + 1, i, b);
  }
  double corner = phase * c.hopping(cell[0].hop);
  add(n - 1, 0, corner);
  add(0, n - 1, corner);
  return m;
}

PeriodicCellMatrix periodic_matrix(int k, const Coupling& c, int phase) {
  if (k < 2) throw std::invalid_argument("periodic_matrix: k must be >= 2");
  return periodic_matrix(original_cell(k), c, phase);
}

std::vector<double> eigenvalues_symmetric(const PeriodicCellMatrix& m) {
  return symmetric_eigenvalues(m.a, m.n);
}

IntervalSet band_edges_for_cell(const Cell& cell, const Coupling& c, double merge_tol) {
  std::vector<double> ep = eigenvalues_symmetric(periodic_matrix(cell, c, +1));
  std::vector<double> em = eigenvalues_symmetric(periodic_matrix(cell, c, -1));
  const std::size_t n = ep.size();

  struct Edge {
    double x;
    int from;  // +1 periodic, -1 antiperiodic
  };
  std::vector<Edge> all;
  all.reserve(2 * n);
  for (double x : ep) all.push_back({x, +1});
  for (double x : em) all.push_back({x, -1});
  std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) { return a.x < b.x; });

  double scale = std::max(1.0, std::max(std::abs(all.front().x), std::abs(all.back().x)));
  double degen = 1e-7 * scale;

  // Each consecutive pair is a closed band. Interlacing demands one edge per
  // list in every pair; ties within the degeneracy tolerance may swap freely.
  std::vector<Interval> bands;
  for (std::size_t i = 0; i + 1 < all.size(); i += 2) {
    const Edge& l = all[i];
    const Edge& r = all[i + 1];
    if (l.from == r.from && r.x - l.x > degen) {
      bool tied_left = i > 0 && l.x - all[i - 1].x <= degen;
      bool tied_right = i + 2 < all.size() && all[i + 2].x - r.x <= degen;
      if (!tied_left && !tied_right)
        throw std::runtime_error("Floquet interlacing failed");
    }
    bands.push_back({l.x, r.x});
  }
  return IntervalSet::normalized(std::move(bands), merge_tol);
}

IntervalSet band_edges_oracle(int k, const Coupling& c) {
  if (k < 2) throw std::invalid_argument("band_edges_oracle: k must be >= 2");
  if (fibonacci(k) > 2000) throw std::invalid_argument("band_edges_oracle: F_k > 2000");
  return band_edges_for_cell(trace_cell(k), c);
}

}  // namespace fibspec
