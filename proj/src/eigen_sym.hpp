// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by implicit-shift QL. Eigenvalues only, ascending.
#pragma once

#include <vector>

namespace fibspec {

// a is row-major n x n, symmetric to 1e-12 relative; throws otherwise.
// n is capped at 2000.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

// QL with implicit shifts on a tridiagonal (d = diagonal, e = subdiagonal,
// e[0] unused). Sorted ascending on return.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e);

}  // namespace fibspec
