// Transfer-matrix cocycle: per-site matrices, ordered products over unit
// cells, signed half-traces.
#pragma once

#include <string>

#include "coupling.hpp"
#include "mat2.hpp"
#include "words.hpp"

namespace fibspec {

// T = (1/p) [[lambda - q, -1], [p^2, 0]]; unimodular by construction.
Mat2 site_matrix(const CellSite& site, double lambda, const Coupling& c);
Mat2 site_matrix(char letter, double lambda, const Coupling& c);

// Ordered product over the cell; rightmost factor is site 1.
ScaledMat2 cocycle_product(const Cell& cell, double lambda, const Coupling& c);
ScaledMat2 cocycle_product(const std::string& word, double lambda, const Coupling& c);

// Signed half-trace of the cocycle product. Saturates at +-1e300.
double half_trace(const Cell& cell, double lambda, const Coupling& c);
double half_trace(const std::string& word, double lambda, const Coupling& c);

}  // namespace fibspec
