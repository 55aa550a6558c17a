#include "doctest.h"
#include "words.hpp"

#include <stdexcept>

using namespace fibspec;

TEST_CASE("fibonacci numbers") {
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 2);
  CHECK(fibonacci(6) == 13);
  CHECK(fibonacci(30) == 1346269);
  CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
}

TEST_CASE("substitution rule") {
  CHECK(substitute("a") == "ab");
  CHECK(substitute("b") == "a");
  CHECK(substitute("ab") == "aba");
  CHECK_THROWS_AS(substitute(""), std::invalid_argument);
  CHECK_THROWS_AS(substitute("ax"), std::invalid_argument);
}

TEST_CASE("fib_word basics") {
  CHECK(fib_word(2) == "ab");
  CHECK(fib_word(3) == "aba");
  CHECK(fib_word(5) == "abaababa");
  CHECK(static_cast<std::int64_t>(fib_word(5).size()) == fibonacci(5));
  CHECK_THROWS_AS(fib_word(1), std::invalid_argument);
}

TEST_CASE("fib_word structure up to level 18") {
  for (int k = 2; k <= 16; ++k) {
    std::string w = fib_word(k), w1 = fib_word(k + 1), w2 = fib_word(k + 2);
    CHECK(w2 == w1 + w);                 // concatenation law
    CHECK(substitute(w) == w1);          // fixed point of S
    CHECK(static_cast<std::int64_t>(w.size()) == fibonacci(k));
    // letter counts
    std::int64_t na = 0, nb = 0;
    for (char ch : w) (ch == 'a' ? na : nb)++;
    CHECK(na == fibonacci(k - 1));
    CHECK(nb == (k >= 2 ? fibonacci(k) - fibonacci(k - 1) : 0));
    // forbidden factors
    CHECK(w2.find("bb") == std::string::npos);
    CHECK(w2.find("aaa") == std::string::npos);
  }
}

TEST_CASE("omega_s window matches the one-sided word") {
  TwoSidedWindow w1 = omega_s_window(1);
  CHECK(w1.at(-1) == 'a');
  CHECK(w1.at(0) == 'b');
  CHECK(w1.at(1) == 'a');

  TwoSidedWindow w = omega_s_window(64);
  std::string u = fib_word(11);  // 89 letters, covers positions 1..64
  for (int k = 1; k <= 64; ++k) CHECK(w.at(k) == u[static_cast<std::size_t>(k - 1)]);
  for (int k = 2; k <= 64; ++k) CHECK(w.at(-k) == u[static_cast<std::size_t>(k - 2)]);
  CHECK(omega_s_window(8).at(8) == fib_word(5)[7]);
  CHECK_THROWS_AS(omega_s_window(0), std::invalid_argument);
}

TEST_CASE("cell families") {
  Cell oc = original_cell(4);
  REQUIRE(oc.size() == 5);
  std::string w = fib_word(4);
  for (std::size_t i = 0; i < oc.size(); ++i) {
    CHECK(oc[i].hop == w[i]);
    CHECK(oc[i].pot == w[i]);
  }

  // the trace cell pairs opposite roles and follows a rotated Fibonacci
  // pattern: same letter counts as fib_word(k)
  for (int k = 2; k <= 14; ++k) {
    Cell tc = trace_cell(k);
    CHECK(static_cast<std::int64_t>(tc.size()) == fibonacci(k));
    std::int64_t na = 0;
    for (const CellSite& s : tc) {
      CHECK(s.hop != s.pot);  // roles always split
      if (s.hop == 'a') ++na;
    }
    CHECK(na == fibonacci(k - 1));
  }
  // recursion v_{k+1} = v_{k-1} v_k
  Cell v3 = trace_cell(3), v4 = trace_cell(4), v5 = trace_cell(5);
  REQUIRE(v5.size() == v3.size() + v4.size());
  for (std::size_t i = 0; i < v3.size(); ++i) {
    CHECK(v5[i].hop == v3[i].hop);
    CHECK(v5[i].pot == v3[i].pot);
  }
  for (std::size_t i = 0; i < v4.size(); ++i) {
    CHECK(v5[v3.size() + i].hop == v4[i].hop);
    CHECK(v5[v3.size() + i].pot == v4[i].pot);
  }
}
