// Finite periodic-approximant matrices and the eigenvalue band-edge oracle.
#pragma once

#include <vector>

#include "coupling.hpp"
#include "intervals.hpp"
#include "words.hpp"

namespace fibspec {

// Floquet reduction of an F_k-periodic operator at quasimomentum 0
// (phase +1) or pi (phase -1): tridiagonal body plus phase-scaled corners.
struct PeriodicCellMatrix {
  int n = 0;
  int phase = +1;
  std::vector<double> a;  // row-major n x n

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

PeriodicCellMatrix periodic_matrix(const Cell& cell, const Coupling& c, int phase);
// Original unit cell fib_word(k), k >= 2.
PeriodicCellMatrix periodic_matrix(int k, const Coupling& c, int phase);

std::vector<double> eigenvalues_symmetric(const PeriodicCellMatrix& m);

// Merges periodic and antiperiodic eigenvalues into closed bands; checks
// Floquet interlacing (one edge of each band from each list, up to
// degeneracy) and throws "Floquet interlacing failed" on violation.
IntervalSet band_edges_for_cell(const Cell& cell, const Coupling& c,
                                double merge_tol = IntervalSet::kMergeTol);

// Band edges of the level-k approximant the trace-map route computes
// (the calibrated cell family trace_cell(k)).
IntervalSet band_edges_oracle(int k, const Coupling& c);

}  // namespace fibspec
