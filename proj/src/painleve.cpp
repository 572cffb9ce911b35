#include "kpz/painleve.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "kpz/airy.hpp"
#include "kpz/format.hpp"
#include "kpz/quadrature.hpp"

namespace kpz {

namespace {
const double kHmax = 0.01;  // step cap keeping Hermite dense output ~1e-11
}

double airy_exp_tail(double x_max, double w) {
  // integrand e^{2wt} Ai(t) decays like e^{2wt - (2/3)t^{3/2}}; 30 units past
  // x_max >= 8 put the tail far below 1e-25 for w <= 2
  std::vector<double> xs, ws;
  composite_rule(x_max, x_max + 30.0, 15, 20, xs, ws);
  double s = 0;
  for (size_t i = 0; i < xs.size(); i++)
    s += ws[i] * std::exp(2.0 * w * xs[i]) * airy_ai(xs[i]);
  return s;
}

PainleveSolution solve_hastings_mcleod(double x_min, double x_max, double tol) {
  if (!(x_min < x_max) || x_max < 8.0)
    throw std::invalid_argument("solve_hastings_mcleod: need x_min < x_max and x_max >= 8");
  if (tol < 1e-13 || tol > 1e-6)
    throw std::invalid_argument("solve_hastings_mcleod: tol outside [1e-13, 1e-6]");

  double ai = airy_ai(x_max), aip = airy_aip(x_max);
  // closed-form tails of the integrals at the seeding point:
  //   int_x^inf Ai^2       = Ai'^2 - x Ai^2
  //   int_x^inf (s-x) Ai^2 = (2x^2 Ai^2 - 2x Ai'^2 - Ai Ai')/3
  double v0 = -(aip * aip - x_max * ai * ai);
  double i2_0 = (2 * x_max * x_max * ai * ai - 2 * x_max * aip * aip - ai * aip) / 3.0;
  double iu_0 = -airy_exp_tail(x_max, 0.0);
  std::vector<double> y0 = {-ai, -aip, v0, i2_0, iu_0};

  auto rhs = [](double x, const double* y, double* f) {
    f[0] = y[1];
    f[1] = 2.0 * y[0] * y[0] * y[0] + x * y[0];
    f[2] = y[0] * y[0];
    f[3] = y[2];
    f[4] = -y[0];
  };

  PainleveSolution ps;
  ps.x_min = x_min;
  ps.x_max = x_max;
  ps.accuracy_warning = x_min < -12.0;
  try {
    // error control must be relative: absolute seed noise at x_max amplifies
    // by Ai(x_min)/Ai(x_max) when shooting leftward
    ps.ode = integrate(rhs, x_max, x_min, y0, tol, 1e-60, kHmax, 1e6);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string("solve_hastings_mcleod: instability: ") + e.what());
  }
  return ps;
}

PainleveSolution solve_hastings_mcleod() {
  return solve_hastings_mcleod(-10.0, 16.0, 1e-13);
}

ABSolution solve_ab(double w, const PainleveSolution& ps) {
  if (w < 0.0)
    throw std::invalid_argument("solve_ab: w < 0; use reflect_ab on the +w solution");
  double x_max = ps.x_max;

  double c = 8.0 / 3.0 * w * w * w;
  if (c > 300.0 || 2.0 * w * x_max - c > 300.0)
    throw std::overflow_error("solve_ab: reflection seeding overflows at x=" +
                              std::to_string(x_max));
  // Boundary values at x_max from a -> 1 and the reflection identities, with
  // the first-order forcing correction J = int_{x_max}^inf e^{2wt} Ai(t) dt
  // (from (e^{2wx} b)' = e^{2wx} u a and u ~ -Ai):
  double J = airy_exp_tail(x_max, w);
  double a0 = 1.0;
  double b0 = -std::exp(-2.0 * w * x_max) * (std::exp(c) - J);
  double am0 = 1.0 - J * std::exp(-c);
  double bm0 = -std::exp(2.0 * w * x_max - c);
  std::vector<double> y0 = {a0, b0, am0, bm0};

  auto rhs = [&ps, w](double x, const double* y, double* f) {
    double u = ps.u(x);
    f[0] = u * y[1];
    f[1] = u * y[0] - 2.0 * w * y[1];
    f[2] = u * y[3];
    f[3] = u * y[2] + 2.0 * w * y[3];
  };

  ABSolution ab;
  ab.w = w;
  ab.ode = integrate(rhs, x_max, ps.x_min, y0, 1e-13, 1e-60, kHmax, 1e30);
  return ab;
}

void ABSolution::derived_w_partials(double x, const PainleveSolution& ps,
                                    double& da, double& db) const {
  double u = ps.u(x), up = ps.up(x);
  double av = a(x), bv = b(x);
  da = 2.0 * u * u * av - (4.0 * w * u + 2.0 * up) * bv;
  db = (-4.0 * w * u + 2.0 * up) * av +
       (8.0 * w * w - 2.0 * x - 2.0 * u * u) * bv;
}

ABSolution reflect_ab(const ABSolution& sol) {
  ABSolution r;
  r.w = -sol.w;
  r.ode.dim = 4;
  r.ode.xs = sol.ode.xs;
  r.ode.ys.resize(sol.ode.xs.size());
  r.ode.fs.resize(sol.ode.xs.size());
  double w = sol.w, c = 8.0 / 3.0 * w * w * w;
  for (size_t i = 0; i < sol.ode.xs.size(); i++) {
    double x = sol.ode.xs[i];
    double ep = c - 2.0 * w * x;  // exponent of e^{(8/3)w^3 - 2wx}
    if (std::fabs(ep) > 690.0)
      throw std::overflow_error("reflect_ab: exponential factor overflow at x=" +
                                std::to_string(x));
    double Ep = std::exp(ep), Em = 1.0 / Ep;
    const std::vector<double>& y = sol.ode.ys[i];
    const std::vector<double>& f = sol.ode.fs[i];
    // a(x,-w) = -b(x,w) e^{-(8/3)w^3+2wx}, etc. (identity block at -w / +w)
    r.ode.ys[i] = {-y[1] * Em, -y[0] * Em, -y[3] * Ep, -y[2] * Ep};
    r.ode.fs[i] = {-(f[1] + 2.0 * w * y[1]) * Em, -(f[0] + 2.0 * w * y[0]) * Em,
                   -(f[3] - 2.0 * w * y[3]) * Ep, -(f[2] - 2.0 * w * y[2]) * Ep};
  }
  return r;
}

void PainleveSolution::write_csv(std::ostream& os) const {
  os << "x,u,up,v\n";
  for (size_t i = 0; i < ode.xs.size(); i++)
    os << fmt_shortest(ode.xs[i]) << ',' << fmt_shortest(ode.ys[i][0]) << ','
       << fmt_shortest(ode.ys[i][1]) << ',' << fmt_shortest(ode.ys[i][2])
       << '\n';
}

void ABSolution::write_csv(std::ostream& os) const {
  os << "x,a,b,am,bm\n";
  for (size_t i = 0; i < ode.xs.size(); i++)
    os << fmt_shortest(ode.xs[i]) << ',' << fmt_shortest(ode.ys[i][0]) << ','
       << fmt_shortest(ode.ys[i][1]) << ',' << fmt_shortest(ode.ys[i][2]) << ','
       << fmt_shortest(ode.ys[i][3]) << '\n';
}

}  // namespace kpz
