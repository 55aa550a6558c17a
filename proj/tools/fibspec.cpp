// fibspec command-line tool. Talks to libfibspec through the C API only.
//
// Subcommands: word, oracle, orbit, bands, spectrum, measure-scan,
// dimension, profile, scan, dos, surface, verify.
#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibspec/fibspec.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

struct CliError {
  int code;
  std::string message;
};

void check(fibspec_status s) {
  if (s == FIBSPEC_OK) return;
  int code = s == FIBSPEC_ERR_INVALID_ARGUMENT ? kExitUsage : kExitNumerical;
  throw CliError{code, fibspec_last_error()};
}

// round-trip exact float formatting, '.' decimal, no locale
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct IntervalsHandle {
  fibspec_intervals* ptr = nullptr;
  ~IntervalsHandle() { fibspec_intervals_free(ptr); }
  fibspec_intervals** out() { return &ptr; }
  fibspec_intervals* get() const { return ptr; }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CliError{kExitUsage, "cannot open output file: " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonOpts {
  double p = 1.0;
  double q = 0.0;
  int level = 6;
  double bound_c = -1.0;  // <= 0: library default
  double tol = -1.0;      // <= 0: library default
  std::string format = "csv";
  std::string out_path;
  std::string config_path;
  std::uint64_t seed = 12345;
};

json config_json(const CommonOpts& o, const json& extra = {}) {
  json cfg{{"p", o.p},     {"q", o.q},       {"level", o.level}, {"C", o.bound_c},
           {"tol", o.tol}, {"format", o.format}, {"seed", o.seed}};
  for (auto& [k, v] : extra.items()) cfg[k] = v;
  return cfg;
}

void emit_intervals_csv(std::ostream& os, const fibspec_intervals* s) {
  os << "band_index,left,right\n";
  for (std::size_t i = 0; i < fibspec_intervals_size(s); ++i) {
    double l, r;
    check(fibspec_intervals_get(s, i, &l, &r));
    os << i << ',' << fmt(l) << ',' << fmt(r) << '\n';
  }
}

json intervals_json(const fibspec_intervals* s) {
  json arr = json::array();
  for (std::size_t i = 0; i < fibspec_intervals_size(s); ++i) {
    double l, r;
    check(fibspec_intervals_get(s, i, &l, &r));
    arr.push_back({{"left", l}, {"right", r}});
  }
  return arr;
}

json dimension_json(const fibspec_dimension& d) {
  return {{"estimate", d.value},   {"stderr", d.std_error}, {"r2", d.r_squared},
          {"eps_min", d.eps_min},  {"eps_max", d.eps_max},  {"n_scales", d.n_points},
          {"converged", d.converged != 0}};
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_word(const CommonOpts& o) {
  std::size_t len = 0;
  check(fibspec_fib_word(o.level, nullptr, 0, &len));
  std::vector<char> buf(len + 1);
  check(fibspec_fib_word(o.level, buf.data(), buf.size(), &len));
  Output out(o.out_path);
  out.stream() << buf.data() << '\n';
  return kExitOk;
}

int run_oracle(const CommonOpts& o, bool fib_cell) {
  IntervalsHandle s;
  check(fibspec_oracle_bands(o.level, o.p, o.q, fib_cell ? 0 : 1, s.out()));
  Output out(o.out_path);
  emit_intervals_csv(out.stream(), s.get());
  return kExitOk;
}

int run_orbit(const CommonOpts& o, double lambda, int maxiter) {
  double t[3];
  check(fibspec_gamma(lambda, o.p, o.q, t));
  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << "index,x,y,z,invariant\n";
  for (int n = 0; n <= maxiter; ++n) {
    double inv;
    check(fibspec_trace_invariant(t, &inv));
    os << n << ',' << fmt(t[0]) << ',' << fmt(t[1]) << ',' << fmt(t[2]) << ',' << fmt(inv)
       << '\n';
    if (std::abs(t[0]) > 1e120 || std::abs(t[1]) > 1e120) break;
    check(fibspec_trace_step(t, t));
  }
  return kExitOk;
}

int run_bands(const CommonOpts& o) {
  IntervalsHandle s;
  int count = 0;
  check(fibspec_bands(o.level, o.p, o.q, o.tol, s.out(), &count));
  Output out(o.out_path);
  if (o.format == "json") {
    json doc{{"version", fibspec_version()},
             {"config", config_json(o)},
             {"band_count", count},
             {"measure", fibspec_intervals_measure(s.get())},
             {"bands", intervals_json(s.get())}};
    out.stream() << doc.dump(2) << '\n';
  } else {
    emit_intervals_csv(out.stream(), s.get());
  }
  return kExitOk;
}

int run_spectrum(const CommonOpts& o, int depth, double resolution) {
  IntervalsHandle s;
  check(fibspec_escape_spectrum(o.p, o.q, depth, resolution, o.bound_c, s.out()));
  Output out(o.out_path);
  if (o.format == "json") {
    json doc{{"version", fibspec_version()},
             {"config", config_json(o, {{"depth", depth}, {"resolution", resolution}})},
             {"measure", fibspec_intervals_measure(s.get())},
             {"intervals", intervals_json(s.get())}};
    out.stream() << doc.dump(2) << '\n';
  } else {
    emit_intervals_csv(out.stream(), s.get());
  }
  return kExitOk;
}

int run_measure_scan(const CommonOpts& o, int kmin, int kmax) {
  std::size_t n = 0;
  check(fibspec_measure_scan(kmin, kmax, o.p, o.q, o.bound_c, o.tol, nullptr, 0, &n));
  std::vector<double> rows(3 * n);
  check(fibspec_measure_scan(kmin, kmax, o.p, o.q, o.bound_c, o.tol, rows.data(), n, &n));
  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << "k,band_count,measure\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << static_cast<int>(rows[3 * i]) << ',' << static_cast<int>(rows[3 * i + 1]) << ','
       << fmt(rows[3 * i + 2]) << '\n';
  }
  return kExitOk;
}

int run_dimension(const CommonOpts& o, int n_scales, int n_windows) {
  Output out(o.out_path);
  if (n_windows > 0) {
    std::size_t n = 0;
    check(fibspec_dimension_profile(o.p, o.q, o.level, n_windows, n_scales, nullptr, nullptr,
                                    0, &n));
    std::vector<double> centers(n);
    std::vector<fibspec_dimension> est(n);
    check(fibspec_dimension_profile(o.p, o.q, o.level, n_windows, n_scales, centers.data(),
                                    est.data(), n, &n));
    json wins = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json w = dimension_json(est[i]);
      w["center"] = centers[i];
      wins.push_back(w);
    }
    json doc{{"version", fibspec_version()},
             {"config", config_json(o, {{"windows", n_windows}, {"n_scales", n_scales}})},
             {"windows", wins}};
    out.stream() << doc.dump(2) << '\n';
  } else {
    fibspec_dimension d;
    check(fibspec_spectrum_dimension(o.p, o.q, o.level, n_scales, &d));
    json doc{{"version", fibspec_version()},
             {"config", config_json(o, {{"n_scales", n_scales}})},
             {"dimension", dimension_json(d)}};
    out.stream() << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int run_profile(const CommonOpts& o, int n_windows, int n_scales) {
  std::size_t n = 0;
  check(
      fibspec_dimension_profile(o.p, o.q, o.level, n_windows, n_scales, nullptr, nullptr, 0, &n));
  std::vector<double> centers(n);
  std::vector<fibspec_dimension> est(n);
  check(fibspec_dimension_profile(o.p, o.q, o.level, n_windows, n_scales, centers.data(),
                                  est.data(), n, &n));
  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << "window_center,value,stderr,r2,converged\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << fmt(centers[i]) << ',' << fmt(est[i].value) << ',' << fmt(est[i].std_error) << ','
       << fmt(est[i].r_squared) << ',' << est[i].converged << '\n';
  }
  return kExitOk;
}

int run_scan(const CommonOpts& o, const std::string& path, int n_scales) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot open couplings file: " + path};
  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << "p,q,value,stderr,r2,converged\n";
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double p, q;
    if (!(ss >> p >> q)) continue;  // header or malformed row
    fibspec_dimension d;
    check(fibspec_spectrum_dimension(p, q, o.level, n_scales, &d));
    os << fmt(p) << ',' << fmt(q) << ',' << fmt(d.value) << ',' << fmt(d.std_error) << ','
       << fmt(d.r_squared) << ',' << d.converged << '\n';
  }
  return kExitOk;
}

int run_dos(const CommonOpts& o, std::optional<double> at, int report_n) {
  Output out(o.out_path);
  if (at.has_value()) {
    double ids = 0.0;
    check(fibspec_ids_value(o.level, o.p, o.q, *at, &ids));
    fibspec_dimension d;
    check(fibspec_pointwise_dimension(o.p, o.q, o.level, *at, -1.0, -1.0, 16, &d));
    json doc{{"version", fibspec_version()},
             {"config", config_json(o, {{"at", *at}})},
             {"ids", ids},
             {"pointwise_dimension", dimension_json(d)}};
    out.stream() << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (report_n > 0) {
    std::size_t n = 0;
    check(fibspec_dos_report(o.p, o.q, o.level, report_n, o.seed, nullptr, 0, &n));
    std::vector<double> rows(5 * n);
    check(fibspec_dos_report(o.p, o.q, o.level, report_n, o.seed, rows.data(), n, &n));
    std::ostream& os = out.stream();
    os << "energy,pointwise_dim,local_dim,gap,converged\n";
    for (std::size_t i = 0; i < n; ++i) {
      os << fmt(rows[5 * i]) << ',' << fmt(rows[5 * i + 1]) << ',' << fmt(rows[5 * i + 2])
         << ',' << fmt(rows[5 * i + 3]) << ',' << static_cast<int>(rows[5 * i + 4]) << '\n';
    }
    return kExitOk;
  }
  // default: elementary bands with cumulative weights
  std::size_t n = 0;
  check(fibspec_ids_bands(o.level, o.p, o.q, nullptr, 0, &n));
  std::vector<double> rows(4 * n);
  check(fibspec_ids_bands(o.level, o.p, o.q, rows.data(), n, &n));
  std::ostream& os = out.stream();
  os << "band_index,left,right,ids_left,ids_right\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << i << ',' << fmt(rows[4 * i]) << ',' << fmt(rows[4 * i + 1]) << ','
       << fmt(rows[4 * i + 2]) << ',' << fmt(rows[4 * i + 3]) << '\n';
  }
  return kExitOk;
}

int run_surface(const CommonOpts& o, double v, int n, double lo, double hi) {
  std::size_t count = 0;
  check(fibspec_surface_mesh(v, lo, hi, n, nullptr, 0, &count));
  std::vector<double> xyz(3 * count);
  check(fibspec_surface_mesh(v, lo, hi, n, xyz.data(), count, &count));
  Output out(o.out_path);
  std::ostream& os = out.stream();
  os << "x,y,z\n";
  for (std::size_t i = 0; i < count; ++i) {
    os << fmt(xyz[3 * i]) << ',' << fmt(xyz[3 * i + 1]) << ',' << fmt(xyz[3 * i + 2]) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: cross-checks between the trace-map route, the cocycle route and
// the eigenvalue oracle
// ---------------------------------------------------------------------------

struct VerifyReport {
  int failures = 0;
  std::ostream& os;

  void result(const std::string& name, bool ok, const std::string& detail) {
    os << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << detail << ")\n";
    if (!ok) ++failures;
  }
};

std::vector<std::pair<double, double>> coupling_set() {
  return {{1, 0}, {2, 0}, {1, 2}, {2, 1}, {0.5, -1}};
}

// uniform samples over an interval-set cover
std::vector<double> sample_in(const fibspec_intervals* s, int n, std::mt19937_64& rng) {
  double total = fibspec_intervals_measure(s);
  std::uniform_real_distribution<double> u(0.0, total);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    double t = u(rng);
    for (std::size_t j = 0; j < fibspec_intervals_size(s); ++j) {
      double l, r;
      fibspec_intervals_get(s, j, &l, &r);
      if (t <= r - l) {
        out.push_back(l + t);
        break;
      }
      t -= r - l;
    }
  }
  return out;
}

int run_verify(const CommonOpts& o, bool quick) {
  Output out(o.out_path);
  VerifyReport rep{0, out.stream()};
  std::mt19937_64 rng(o.seed);

  // 1. trace map vs transfer cocycle on the calibrated cells
  {
    double worst = 0.0;
    int kmax = quick ? 8 : 12;
    for (auto [p, q] : coupling_set()) {
      for (int k = 2; k <= kmax; ++k) {
        IntervalsHandle s;
        check(fibspec_trace_bounded_set(k, p, q, -1.0, -1.0, s.out()));
        for (double lam : sample_in(s.get(), 10, rng)) {
          double a, b;
          int sat;
          check(fibspec_trace_eval(k, lam, p, q, &a, &sat));
          check(fibspec_half_trace_trace_cell(k, lam, p, q, &b));
          worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
      }
    }
    rep.result("trace-map vs cocycle half-traces", worst <= 1e-9,
               "max rel err " + fmt(worst));
  }

  // 2. trace-map bands vs eigenvalue oracle
  {
    double worst = 0.0;
    int kmax = quick ? 6 : 8;
    for (auto [p, q] : coupling_set()) {
      for (int k = 2; k <= kmax; ++k) {
        IntervalsHandle tb, ob;
        int count;
        check(fibspec_bands(k, p, q, -1.0, tb.out(), &count));
        check(fibspec_oracle_bands(k, p, q, 1, ob.out()));
        std::size_t n1 = fibspec_intervals_size(tb.get());
        if (n1 != fibspec_intervals_size(ob.get())) {
          worst = 1e9;
          continue;
        }
        for (std::size_t i = 0; i < n1; ++i) {
          double l1, r1, l2, r2;
          fibspec_intervals_get(tb.get(), i, &l1, &r1);
          fibspec_intervals_get(ob.get(), i, &l2, &r2);
          worst = std::max({worst, std::abs(l1 - l2), std::abs(r1 - r2)});
        }
      }
    }
    rep.result("bands vs eigenvalue oracle", worst <= 1e-8, "max edge err " + fmt(worst));
  }

  // 3. invariant conservation along bounded-regime orbits. An orbit is in
  // the bounded regime when the two-consecutive exceedance test never fires;
  // escaping orbits leave the double-precision level surface at rate
  // eps * x^2 and are outside the conservation statement.
  {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    int wanted = quick ? 100 : 500;
    int found = 0;
    for (int tries = 0; found < wanted && tries < 400000; ++tries) {
      double t[3] = {u(rng), u(rng), u(rng)};
      double i0;
      check(fibspec_trace_invariant(t, &i0));
      if (std::abs(i0) > 10.0) continue;
      double drift = 0.0;
      bool bounded = true;
      for (int n = 0; n < 40 && bounded; ++n) {
        check(fibspec_trace_step(t, t));
        bounded = !(std::abs(t[0]) > 2.0 && std::abs(t[1]) > 2.0) &&
                  std::abs(t[0]) <= 1e6 && std::abs(t[1]) <= 1e6 && std::abs(t[2]) <= 1e6;
        if (!bounded) break;
        double in;
        check(fibspec_trace_invariant(t, &in));
        drift = std::max(drift, std::abs(in - i0) / (1.0 + std::abs(i0)));
      }
      if (!bounded) continue;
      ++found;
      worst = std::max(worst, drift);
    }
    rep.result("Fricke-Vogt invariant conservation", found == wanted && worst <= 1e-8,
               "orbits " + std::to_string(found) + ", max drift " + fmt(worst));
  }

  // 4. reversibility and fixtures
  {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double t[3] = {u(rng), u(rng), u(rng)};
      double a[3], b[3];
      check(fibspec_trace_inverse_step(t, a));
      double s[3] = {t[2], t[1], t[0]};
      check(fibspec_trace_step(s, b));
      std::swap(b[0], b[2]);
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    for (double x : {-3.0, -1.0, 0.75, 1.0, 2.0, 5.0}) {
      double t[3];
      check(fibspec_per2_point(x, t));
      double u2[3];
      check(fibspec_trace_step(t, u2));
      check(fibspec_trace_step(u2, u2));
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(u2[j] - t[j]));
    }
    std::uniform_real_distribution<double> ang(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      double th = ang(rng), ph = ang(rng);
      double f[3], lhs[3], rhs[3];
      check(fibspec_torus_factor(th, ph, f));
      check(fibspec_trace_step(f, lhs));
      check(fibspec_torus_factor(th + ph, th, rhs));
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
    }
    rep.result("reversibility, Per2 and torus-factor fixtures", worst <= 1e-11,
               "max err " + fmt(worst));
  }

  // 5. free-case exactness
  {
    double worst = 0.0;
    int kmax = quick ? 6 : 10;
    for (int k = 2; k <= kmax; ++k) {
      IntervalsHandle s;
      int count;
      check(fibspec_bands(k, 1.0, 0.0, -1.0, s.out(), &count));
      worst = std::max(worst, std::abs(fibspec_intervals_measure(s.get()) - 4.0));
    }
    rep.result("free-case band measure", worst <= 1e-6, "max |measure-4| " + fmt(worst));
  }

  rep.os << (rep.failures == 0 ? "verification passed" : "verification FAILED") << '\n';
  return rep.failures == 0 ? kExitOk : kExitVerification;
}

// key=value lines from a config file become trailing --key=value tokens for
// keys the command line does not already carry
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot open config file: " + path};
  std::vector<std::string> out = args;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto last = s.find_last_not_of(" \t\r");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") continue;
    std::string flag = "--" + key;
    bool given = false;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
    if (!given) out.push_back(flag + "=" + val);
  }
  return out;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_coupling = true,
                bool with_level = true) {
  if (with_coupling) {
    cmd->add_option("--p", o.p, "hopping p = p(b); must be nonzero")
        ->check([](const std::string& s) -> std::string {
          try {
            if (std::stod(s) == 0.0) return "p must be nonzero";
          } catch (const std::exception&) {
            return "p must be a number";
          }
          return {};
        });
    cmd->add_option("--q", o.q, "potential q = q(b)");
  }
  if (with_level) cmd->add_option("--level,-k", o.level, "approximant level k");
  cmd->add_option("--C", o.bound_c, "trace bound C (default (1+p^2)/|2p| based)");
  cmd->add_option("--tol", o.tol, "band-edge tolerance (default 1e-10)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_option("--seed", o.seed, "seed for sampling-based reports");
  cmd->add_option("--config", o.config_path,
                  "config file (key=value per line; flags override)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of tridiagonal Fibonacci Hamiltonians via the trace map"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* word = app.add_subcommand("word", "print the level-k substitution word");
  add_common(word, o, false, true);

  auto* oracle = app.add_subcommand("oracle", "band edges from the eigenvalue oracle (CSV)");
  bool oracle_fib_cell = false;
  add_common(oracle, o);
  oracle->add_flag("--fib-cell", oracle_fib_cell,
                   "diagonalize the fib_word(k) cell instead of the trace-map cell");

  auto* orbit = app.add_subcommand("orbit", "trace-map orbit of gamma(lambda) (CSV)");
  double orbit_lambda = 0.0;
  int orbit_maxiter = 40;
  add_common(orbit, o, true, false);
  orbit->add_option("--lambda", orbit_lambda, "energy")->required();
  orbit->add_option("--maxiter", orbit_maxiter, "orbit length");

  auto* bands = app.add_subcommand("bands", "level-k bands {|x_k| <= 1}");
  add_common(bands, o);

  auto* spectrum = app.add_subcommand("spectrum", "escape-time cover of the spectrum");
  int sp_depth = 30;
  double sp_resolution = 1e-4;
  add_common(spectrum, o, true, false);
  spectrum->add_option("--depth", sp_depth, "escape iteration depth");
  spectrum->add_option("--resolution", sp_resolution, "cover resolution");

  auto* mscan = app.add_subcommand("measure-scan", "band count and cover measure per level");
  int kmin = 4, kmax = 14;
  add_common(mscan, o, true, false);
  mscan->add_option("--kmin", kmin, "first level");
  mscan->add_option("--kmax", kmax, "last level");

  auto* dim = app.add_subcommand("dimension", "box-counting dimension of the level-k cover");
  int dim_scales = 12, dim_windows = 0;
  add_common(dim, o);
  dim->add_option("--n-scales", dim_scales, "number of scales");
  dim->add_option("--windows", dim_windows, "optional windowed profile");

  auto* profile = app.add_subcommand("profile", "local-dimension profile across the spectrum");
  int prof_windows = 5, prof_scales = 10;
  add_common(profile, o);
  profile->add_option("--windows", prof_windows, "number of windows");
  profile->add_option("--n-scales", prof_scales, "number of scales");

  auto* scan = app.add_subcommand("scan", "dimension at couplings read from a CSV path");
  std::string scan_path;
  int scan_scales = 12;
  add_common(scan, o, false, true);
  scan->add_option("--path", scan_path, "CSV file of p,q rows")->required();
  scan->add_option("--n-scales", scan_scales, "number of scales");

  auto* dos = app.add_subcommand("dos", "integrated density of states of the approximant");
  double dos_at = 0.0;
  bool dos_has_at = false;
  int dos_report = 0;
  add_common(dos, o);
  dos->add_option("--at", dos_at, "pointwise dimension at this energy")
      ->each([&](const std::string&) { dos_has_at = true; });
  dos->add_option("--report", dos_report, "dimension-gap report with n sampled energies");

  auto* surface = app.add_subcommand("surface", "points of the invariant surface I = V");
  double surf_v = 0.01, surf_lo = -2.0, surf_hi = 2.0;
  int surf_n = 100;
  add_common(surface, o, false, false);
  surface->add_option("--v", surf_v, "invariant value V >= 0");
  surface->add_option("--n", surf_n, "grid resolution per axis");
  surface->add_option("--lo", surf_lo, "box lower bound");
  surface->add_option("--hi", surf_hi, "box upper bound");

  auto* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
  bool verify_quick = false;
  add_common(verify, o, false, false);
  verify->add_flag("--quick", verify_quick, "smaller levels and sample counts");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config_file(args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }

  try {
    if (word->parsed()) return run_word(o);
    if (oracle->parsed()) return run_oracle(o, oracle_fib_cell);
    if (orbit->parsed()) return run_orbit(o, orbit_lambda, orbit_maxiter);
    if (bands->parsed()) return run_bands(o);
    if (spectrum->parsed()) return run_spectrum(o, sp_depth, sp_resolution);
    if (mscan->parsed()) return run_measure_scan(o, kmin, kmax);
    if (dim->parsed()) return run_dimension(o, dim_scales, dim_windows);
    if (profile->parsed()) return run_profile(o, prof_windows, prof_scales);
    if (scan->parsed()) return run_scan(o, scan_path, scan_scales);
    if (dos->parsed()) return run_dos(o, dos_has_at ? std::optional<double>(dos_at) : std::nullopt, dos_report);
    if (surface->parsed()) return run_surface(o, surf_v, surf_n, surf_lo, surf_hi);
    if (verify->parsed()) return run_verify(o, verify_quick);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
