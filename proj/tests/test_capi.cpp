// Exercises libfibspec strictly through the public C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "fibspec/fibspec.h"

TEST_CASE("version and words") {
  CHECK(std::strlen(fibspec_version()) > 0);

  long long f = 0;
  CHECK(fibspec_fibonacci(6, &f) == FIBSPEC_OK);
  CHECK(f == 13);
  CHECK(fibspec_fibonacci(-2, &f) == FIBSPEC_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(fibspec_last_error()) > 0);

  size_t len = 0;
  CHECK(fibspec_fib_word(5, nullptr, 0, &len) == FIBSPEC_OK);
  CHECK(len == 8);
  std::vector<char> buf(len + 1);
  CHECK(fibspec_fib_word(5, buf.data(), buf.size(), &len) == FIBSPEC_OK);
  CHECK(std::string(buf.data()) == "abaababa");
  char tiny[3];
  CHECK(fibspec_fib_word(5, tiny, sizeof tiny, &len) == FIBSPEC_ERR_BUFFER_TOO_SMALL);
}

TEST_CASE("trace map surface") {
  double g[3];
  CHECK(fibspec_gamma(2.0, 1.0, 0.0, g) == FIBSPEC_OK);
  CHECK(g[0] == 1.0);
  CHECK(g[1] == 1.0);
  CHECK(g[2] == 1.0);
  CHECK(fibspec_gamma(2.0, 0.0, 0.0, g) == FIBSPEC_ERR_INVALID_ARGUMENT);

  double s[3];
  CHECK(fibspec_trace_step(g, s) == FIBSPEC_OK);
  double inv = 9.0;
  CHECK(fibspec_trace_invariant(s, &inv) == FIBSPEC_OK);
  CHECK(inv == doctest::Approx(0.0));

  double e0 = 0.0;
  int exists = -1;
  CHECK(fibspec_critical_energy(2.0, 1.0, &e0, &exists) == FIBSPEC_OK);
  CHECK(exists == 1);
  CHECK(e0 == doctest::Approx(13.0 / 3.0));

  int escaped = 0, idx = -1;
  double fin[3], mx = 0.0;
  CHECK(fibspec_escape_time(100.0, 1.0, 1.0, -1.0, 50, &escaped, &idx, fin, &mx) ==
        FIBSPEC_OK);
  CHECK(escaped == 1);
  CHECK(idx <= 3);
}

TEST_CASE("bands, oracle and intervals") {
  fibspec_intervals* tb = nullptr;
  int count = 0;
  REQUIRE(fibspec_bands(6, 1.0, 2.0, -1.0, &tb, &count) == FIBSPEC_OK);
  CHECK(count == 13);
  CHECK(fibspec_intervals_size(tb) == 13);

  fibspec_intervals* ob = nullptr;
  REQUIRE(fibspec_oracle_bands(6, 1.0, 2.0, 1, &ob) == FIBSPEC_OK);
  REQUIRE(fibspec_intervals_size(ob) == 13);
  for (size_t i = 0; i < 13; ++i) {
    double l1, r1, l2, r2;
    CHECK(fibspec_intervals_get(tb, i, &l1, &r1) == FIBSPEC_OK);
    CHECK(fibspec_intervals_get(ob, i, &l2, &r2) == FIBSPEC_OK);
    CHECK(std::abs(l1 - l2) <= 1e-8);
    CHECK(std::abs(r1 - r2) <= 1e-8);
  }
  double l, r;
  CHECK(fibspec_intervals_get(tb, 999, &l, &r) == FIBSPEC_ERR_INVALID_ARGUMENT);
  fibspec_intervals_free(tb);
  fibspec_intervals_free(ob);
}

TEST_CASE("measure scan rows") {
  size_t n = 0;
  CHECK(fibspec_measure_scan(4, 8, 1.0, 1.0, -1.0, -1.0, nullptr, 0, &n) == FIBSPEC_OK);
  REQUIRE(n == 5);
  std::vector<double> rows(3 * n);
  CHECK(fibspec_measure_scan(4, 8, 1.0, 1.0, -1.0, -1.0, rows.data(), n, &n) == FIBSPEC_OK);
  for (size_t i = 1; i < n; ++i) CHECK(rows[3 * i + 2] < rows[3 * (i - 1) + 2]);
}

TEST_CASE("dimension and dos surfaces") {
  fibspec_dimension d;
  CHECK(fibspec_spectrum_dimension(1.05, 0.05, 10, 10, &d) == FIBSPEC_OK);
  CHECK(d.value > 0.8);
  CHECK(d.value <= 1.0);

  double v = -1.0;
  CHECK(fibspec_ids_value(6, 2.0, 0.0, 0.0, &v) == FIBSPEC_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(fibspec_dos_weight(6, 2.0, 0.0, -100.0, 100.0, &v) == FIBSPEC_OK);
  CHECK(v == doctest::Approx(1.0));

  size_t n = 0;
  CHECK(fibspec_ids_bands(5, 1.0, 2.0, nullptr, 0, &n) == FIBSPEC_OK);
  CHECK(n == 8);

  CHECK(fibspec_dos_report(1.0, 2.0, 9, 5, 7, nullptr, 0, &n) == FIBSPEC_OK);
  REQUIRE(n == 5);
  std::vector<double> rows(5 * n);
  CHECK(fibspec_dos_report(1.0, 2.0, 9, 5, 7, rows.data(), n, &n) == FIBSPEC_OK);
}

TEST_CASE("surface mesh buffer protocol") {
  size_t count = 0;
  CHECK(fibspec_surface_mesh(1.0, -1.0, 1.0, 8, nullptr, 0, &count) == FIBSPEC_OK);
  CHECK(count > 0);
  std::vector<double> xyz(3 * count);
  CHECK(fibspec_surface_mesh(1.0, -1.0, 1.0, 8, xyz.data(), count, &count) == FIBSPEC_OK);
  double inv;
  double t[3] = {xyz[0], xyz[1], xyz[2]};
  CHECK(fibspec_trace_invariant(t, &inv) == FIBSPEC_OK);
  CHECK(inv == doctest::Approx(1.0).epsilon(1e-9));
}
