#include "transfer.hpp"

#include <stdexcept>

namespace fibspec {

Mat2 site_matrix(const CellSite& site, double lambda, const Coupling& c) {
  double p = c.hopping(site.hop);
  double q = c.potential(site.pot);
  return {(lambda - q) / p, -1.0 / p, p, 0.0};
}

Mat2 site_matrix(char letter, double lambda, const Coupling& c) {
  return site_matrix(CellSite{letter, letter}, lambda, c);
}

ScaledMat2 cocycle_product(const Cell& cell, double lambda, const Coupling& c) {
  if (cell.empty()) throw std::invalid_argument("cocycle_product: empty word");
  ScaledMat2 acc;
  for (const CellSite& s : cell) acc.multiply_left(site_matrix(s, lambda, c));
  return acc;
}

ScaledMat2 cocycle_product(const std::string& word, double lambda, const Coupling& c) {
  if (word.empty()) throw std::invalid_argument("cocycle_product: empty word");
  ScaledMat2 acc;
  for (char ch : word) acc.multiply_left(site_matrix(ch, lambda, c));
  return acc;
}

double half_trace(const Cell& cell, double lambda, const Coupling& c) {
  ScaledMat2 m = cocycle_product(cell, lambda, c);
  return m.restore(0.5 * m.m.trace());
}

double half_trace(const std::string& word, double lambda, const Coupling& c) {
  ScaledMat2 m = cocycle_product(word, lambda, c);
  return m.restore(0.5 * m.m.trace());
}

}  // namespace fibspec
