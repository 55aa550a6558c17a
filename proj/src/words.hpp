// Fibonacci substitution combinatorics: words S^k(a), Fibonacci numbers, the
// two-sided sequence omega_s and the unit cells used by the spectral engines.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibspec {

inline constexpr int kMaxLevelDefault = 30;

// F_0 = F_1 = 1, F_k = F_{k-1} + F_{k-2}. Throws on k < 0.
std::int64_t fibonacci(int k);

// One application of a -> ab, b -> a. Throws on empty input or bad letters.
std::string substitute(const std::string& w);

// S^{k-1}(a) for k >= 2; length F_k. Generation is iterative.
std::string fib_word(int k);

// Window of the two-sided sequence omega_s covering positions -m..m.
// omega_s is the limit of S^2 iterated on the seed b|a, with | between
// positions 0 and 1.
struct TwoSidedWindow {
  int m = 0;
  std::vector<char> letters;  // letters[i] holds position i - m

  char at(int pos) const { return letters[static_cast<std::size_t>(pos + m)]; }
};

TwoSidedWindow omega_s_window(int m);

// A unit cell assigns each site a hopping letter and a potential letter.
// For the operator cells both roles carry the same letter; the trace-map
// cell family splits them.
struct CellSite {
  char hop;
  char pot;
};
using Cell = std::vector<CellSite>;

// Cell of the F_k-periodic operator with unit cell fib_word(k), k >= 2.
Cell original_cell(int k);

// Cell family whose half-trace sequence the trace map generates from the
// line of initial conditions. Letters pair a-hops with b-potentials and
// vice versa; the word pattern is a cyclic rotation of fib_word(k).
// v_1 = [ab'], v_2 = [ba', ab'], v_{k+1} = v_{k-1} v_k.  k >= 1.
Cell trace_cell(int k);

}  // namespace fibspec
