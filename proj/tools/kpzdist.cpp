#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kpz/distributions.hpp"
#include "kpz/format.hpp"
#include "kpz/painleve.hpp"
#include "kpz/verify.hpp"

namespace {

using kpz::fmt_shortest;

struct Grid {
  double min = 0, max = 0, step = 0;
  std::vector<double> points() const {
    std::vector<double> p;
    for (int i = 0;; i++) {
      double v = min + i * step;
      if (v > max + step * 1e-9) break;
      p.push_back(v);
    }
    return p;
  }
};

bool parse_grid(const std::string& s, Grid& g) {
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> g.min >> c1 >> g.max >> c2 >> g.step)) return false;
  if (c1 != ':' || c2 != ':' || !(is >> std::ws).eof()) return false;
  return g.step > 0 && g.min < g.max;
}

// run fn(i) for i in [0,n) on a worker pool; results land in caller storage
void parallel_for(int n, const std::function<void(int)>& fn) {
  unsigned nt = std::min<unsigned>(std::thread::hardware_concurrency(), n);
  if (nt <= 1) {
    for (int i = 0; i < n; i++) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < nt; k++)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

int write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  os << body;
  if (!os) {
    std::cerr << "error: write failed: " << path << "\n";
    return 2;
  }
  return 0;
}

int cmd_table(const std::string& dist, double tau, const Grid& grid,
              const std::string& out, const std::string& format) {
  if (dist != "gue" && dist != "goe" && dist != "br") {
    std::cerr << "error: --dist must be gue, goe or br\n";
    return 2;
  }
  if (format != "csv" && format != "json") {
    std::cerr << "error: --format must be csv or json\n";
    return 2;
  }
  kpz::PainleveSolution ps = kpz::solve_hastings_mcleod();
  kpz::ABSolution ab;
  if (dist == "br") {
    if (tau >= 0)
      ab = kpz::solve_ab(tau / 2, ps);
    else
      ab = kpz::reflect_ab(kpz::solve_ab(-tau / 2, ps));
  }

  std::vector<double> pts = grid.points();
  int n = (int)pts.size();
  struct Row {
    std::vector<double> vals;
    std::string quality = "ok";
  };
  std::vector<Row> rows(n);
  parallel_for(n, [&](int i) {
    double p = pts[i];
    Row& row = rows[i];
    try {
      if (dist == "br") {
        kpz::BaikRainsPoint bp = kpz::baik_rains_cdf(tau, p, ps, ab);
        row.vals = {bp.tau, bp.r, bp.f_tau, bp.antideriv, bp.y_val};
      } else {
        double f = dist == "gue" ? kpz::f_gue(p, ps) : kpz::f_goe(p, ps);
        row.vals = {p, f};
      }
    } catch (const std::domain_error&) {
      double nan = std::nan("");
      row.quality = "out-of-domain";
      row.vals.assign(dist == "br" ? 5 : 2, nan);
      row.vals[dist == "br" ? 1 : 0] = p;
      if (dist == "br") row.vals[0] = tau;
    }
  });

  std::vector<std::string> cols =
      dist == "br" ? std::vector<std::string>{"tau", "r", "F_tau", "antideriv",
                                              "y", "quality"}
                   : std::vector<std::string>{"s", "F", "quality"};
  std::ostringstream os;
  if (format == "csv") {
    for (size_t c = 0; c < cols.size(); c++)
      os << cols[c] << (c + 1 < cols.size() ? ',' : '\n');
    for (const Row& row : rows) {
      for (double v : row.vals) os << fmt_shortest(v) << ',';
      os << row.quality << '\n';
    }
  } else {
    os << "[";
    for (int i = 0; i < n; i++) {
      os << (i ? ",\n " : "\n ") << "{";
      for (size_t c = 0; c + 1 < cols.size(); c++)
        os << "\"" << cols[c] << "\":" << fmt_shortest(rows[i].vals[c]) << ",";
      os << "\"quality\":\"" << rows[i].quality << "\"}";
    }
    os << "\n]\n";
  }
  return write_output(out, os.str());
}

int cmd_verify(const std::string& suite, const std::string& out,
               const kpz::VerifyOptions& opt) {
  kpz::PainleveSolution ps = kpz::solve_hastings_mcleod();
  nlohmann::json report;
  try {
    report = kpz::run_verify_suite(suite, ps, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int rc = write_output(out, report.dump(2) + "\n");
  if (rc) return rc;
  return report.at("pass").get<bool>() ? 0 : 1;
}

int cmd_crosscheck(const Grid& grid, const std::string& out,
                   const kpz::VerifyOptions& opt, double tol_cross) {
  std::vector<double> s_grid = grid.points();
  if (s_grid.empty()) {
    std::cerr << "error: empty s grid\n";
    return 2;
  }
  std::vector<double> w_grid = {0.1, 0.25, 0.5, 1.0};
  kpz::PainleveSolution ps = kpz::solve_hastings_mcleod();
  nlohmann::json report =
      kpz::run_crosscheck(ps, s_grid, w_grid, opt, tol_cross);
  int rc = write_output(out, report.dump(2) + "\n");
  if (rc) return rc;
  return report.at("pass").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KPZ-class limiting distributions and KP-equation verification"};
  app.require_subcommand(1);

  std::string dist = "gue", grid_str, out, format = "csv", suite;
  double tau = 0, tol_cross = 1e-6;
  kpz::VerifyOptions opt;

  CLI::App* table = app.add_subcommand("table", "tabulate a distribution");
  table->add_option("--dist", dist, "gue | goe | br");
  table->add_option("--tau", tau, "Baik-Rains parameter (br only)");
  table->add_option("--grid", grid_str, "min:max:step")->required();
  table->add_option("--out", out, "output path (default stdout)");
  table->add_option("--format", format, "csv | json");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", suite,
                   "kp-gue | kp-goe | kp-br | symbolic | identities")
      ->required();
  verify->add_option("--out", out, "output path (default stdout)");
  verify->add_option("--tol-kp", opt.tol_kp, "Baik-Rains residual tolerance");
  verify->add_option("--m", opt.m, "Fredholm quadrature size");
  verify->add_option("--L", opt.L, "Fredholm quadrature half-width");
  verify->add_option("--Z", opt.Z, "damped-integral cutoff");
  verify->add_flag("--corrupt-b", opt.corrupt_b)->group("");  // test hook

  CLI::App* cross = app.add_subcommand("crosscheck", "compare the two routes");
  cross->add_option("--grid", grid_str, "s grid, min:max:step");
  cross->add_option("--out", out, "output path (default stdout)");
  cross->add_option("--tol-cross", tol_cross, "|y - g| tolerance");
  cross->add_option("--m", opt.m, "Fredholm quadrature size");
  cross->add_option("--L", opt.L, "Fredholm quadrature half-width");
  cross->add_option("--Z", opt.Z, "damped-integral cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help is 0; any parse failure is usage error
  }

  if (opt.m < 10 || opt.m > 1024 || opt.L <= 0 || opt.L > 200 || opt.Z <= 0 ||
      opt.Z > 200 || opt.tol_kp <= 0 || tol_cross <= 0) {
    std::cerr << "error: parameter out of supported range\n";
    return 2;
  }

  try {
    if (table->parsed()) {
      Grid g;
      if (!parse_grid(grid_str, g)) {
        std::cerr << "error: --grid expects min:max:step with step > 0 and "
                     "min < max\n";
        return 2;
      }
      return cmd_table(dist, tau, g, out, format);
    }
    if (verify->parsed()) return cmd_verify(suite, out, opt);
    Grid g{-4, 4, 2};
    if (!grid_str.empty() && !parse_grid(grid_str, g)) {
      std::cerr << "error: --grid expects min:max:step\n";
      return 2;
    }
    return cmd_crosscheck(g, out, opt, tol_cross);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
