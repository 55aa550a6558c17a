#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "eigen_sym.hpp"
#include "jacobi.hpp"

using namespace fibspec;

TEST_CASE("dense symmetric eigensolver") {
  SUBCASE("identity and diagonal") {
    std::vector<double> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    auto e = symmetric_eigenvalues(id, 3);
    for (double v : e) CHECK(v == doctest::Approx(1.0));
    std::vector<double> d{-1, 0, 0, 0, 0, 0, 0, 0, 2};
    e = symmetric_eigenvalues(d, 3);
    CHECK(e[0] == doctest::Approx(-1.0));
    CHECK(e[1] == doctest::Approx(0.0));
    CHECK(e[2] == doctest::Approx(2.0));
  }

  SUBCASE("2x2 closed form") {
    std::vector<double> m{0, 3, 3, 1};
    auto e = symmetric_eigenvalues(m, 2);
    CHECK(e[0] == doctest::Approx((1 - std::sqrt(37.0)) / 2).epsilon(1e-12));
    CHECK(e[1] == doctest::Approx((1 + std::sqrt(37.0)) / 2).epsilon(1e-12));
  }

  SUBCASE("random symmetric: trace and Frobenius sums match") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int n = 40;
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = u(rng);
        a[static_cast<std::size_t>(i) * n + j] = v;
        a[static_cast<std::size_t>(j) * n + i] = v;
      }
    double tr = 0.0, fro = 0.0;
    for (int i = 0; i < n; ++i) tr += a[static_cast<std::size_t>(i) * n + i];
    for (double v : a) fro += v * v;
    auto e = symmetric_eigenvalues(a, n);
    double se = 0.0, se2 = 0.0;
    for (double v : e) {
      se += v;
      se2 += v * v;
    }
    CHECK(se == doctest::Approx(tr).epsilon(1e-10));
    CHECK(se2 == doctest::Approx(fro).epsilon(1e-10));
  }

  SUBCASE("rejects non-symmetric input") {
    std::vector<double> m{0, 1, 2, 1};
    CHECK_THROWS_AS(symmetric_eigenvalues(m, 2), std::invalid_argument);
  }
}

TEST_CASE("periodic matrix assembly") {
  SUBCASE("k=2 free chain has the wraparound degeneracy") {
    PeriodicCellMatrix m = periodic_matrix(2, Coupling(1, 0), +1);
    CHECK(m.at(0, 1) == doctest::Approx(2.0));  // bond + corner on 2 sites
    auto e = eigenvalues_symmetric(m);
    CHECK(e[0] == doctest::Approx(-2.0));
    CHECK(e[1] == doctest::Approx(2.0));
  }

  SUBCASE("k=3 free chain is the 3-cycle") {
    auto e = eigenvalues_symmetric(periodic_matrix(3, Coupling(1, 0), +1));
    CHECK(e[0] == doctest::Approx(-1.0));
    CHECK(e[1] == doctest::Approx(-1.0));
    CHECK(e[2] == doctest::Approx(2.0));
  }

  SUBCASE("k=4 free chain matches the circulant formula") {
    auto e = eigenvalues_symmetric(periodic_matrix(4, Coupling(1, 0), +1));
    std::vector<double> expect;
    for (int j = 0; j < 5; ++j) expect.push_back(2 * std::cos(2 * std::numbers::pi * j / 5));
    std::sort(expect.begin(), expect.end());
    for (int j = 0; j < 5; ++j) CHECK(e[static_cast<std::size_t>(j)] == doctest::Approx(expect[static_cast<std::size_t>(j)]));
  }

  SUBCASE("k=3 cell aba at (2,1)") {
    PeriodicCellMatrix m = periodic_matrix(3, Coupling(2, 1), +1);
    CHECK(m.at(0, 0) == 0.0);
    CHECK(m.at(1, 1) == 1.0);
    CHECK(m.at(2, 2) == 0.0);
    CHECK(m.at(0, 1) == 2.0);  // p(b) into site 2
    CHECK(m.at(1, 2) == 1.0);  // p(a) into site 3
    CHECK(m.at(2, 0) == 1.0);  // wraparound p(a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == m.at(j, i));
  }

  CHECK_THROWS_AS(periodic_matrix(1, Coupling(1, 0), +1), std::invalid_argument);
}

TEST_CASE("band edge oracle") {
  SUBCASE("k=2 (2,0): two bands from the quadratic") {
    IntervalSet b = band_edges_for_cell(original_cell(2), Coupling(2, 0));
    REQUIRE(b.size() == 2);
    CHECK(b[0].left == doctest::Approx(-3.0));
    CHECK(b[0].right == doctest::Approx(-1.0));
    CHECK(b[1].left == doctest::Approx(1.0));
    CHECK(b[1].right == doctest::Approx(3.0));
  }

  SUBCASE("free chain bands merge to [-2, 2]") {
    IntervalSet b = band_edges_oracle(4, Coupling(1, 0));
    REQUIRE(b.size() == 1);
    CHECK(b[0].left == doctest::Approx(-2.0));
    CHECK(b[0].right == doctest::Approx(2.0));
  }

  SUBCASE("k=5 (1,2) has F_5 disjoint bands") {
    CHECK(band_edges_oracle(5, Coupling(1, 2)).size() == 8);
  }

  SUBCASE("spectral symmetry at q=0 and the Gershgorin bound") {
    // the sign gauge maps phase +1 to phase -(-1)^{F_k}; for odd periods it
    // swaps the two phases, so the symmetric object is their union
    for (const Coupling& c : {Coupling(2, 0), Coupling(0.5, 0)}) {
      for (int k : {6, 7}) {
        std::vector<double> all;
        double r = search_radius(c);
        for (int phase : {+1, -1}) {
          for (double e : eigenvalues_symmetric(periodic_matrix(k, c, phase))) {
            all.push_back(e);
            CHECK(std::abs(e) <= r + 1e-9);
          }
        }
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
          CHECK(std::abs(all[i] + all[all.size() - 1 - i]) <= 1e-9);
      }
    }
  }
}
