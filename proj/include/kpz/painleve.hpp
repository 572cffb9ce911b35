#pragma once

#include <iosfwd>
#include <vector>

#include "kpz/ode.hpp"

// Hastings-McLeod solution of Painleve II (u'' = 2u^3 + xu, u ~ -Ai at +inf)
// together with the running integrals needed by the distribution formulas,
// and the Riemann-Hilbert auxiliary system a(x,w), b(x,w).

namespace kpz {

class PainleveSolution {
 public:
  double x_min = 0, x_max = 0;
  bool accuracy_warning = false;  // set when x_min < -12 (shooting digit loss)

  // state components: u, u', v = int_inf^x u^2,
  // i2 = int_x^inf (s-x) u^2  (so F_GUE = exp(-i2)),
  // iu = int_x^inf u
  double u(double x) const { return ode.eval(x, 0); }
  double up(double x) const { return ode.eval(x, 1); }
  double v(double x) const { return ode.eval(x, 2); }
  double i2(double x) const { return ode.eval(x, 3); }
  double iu(double x) const { return ode.eval(x, 4); }
  void eval(double x, double out[5]) const { ode.eval(x, out); }

  const std::vector<double>& grid() const { return ode.xs; }
  void write_csv(std::ostream& os) const;  // columns: x,u,up,v

  OdeSolution ode;
};

class ABSolution {
 public:
  double w = 0;

  // state components: a(x,w), b(x,w), a(x,-w), b(x,-w)
  double a(double x) const { return ode.eval(x, 0); }
  double b(double x) const { return ode.eval(x, 1); }
  double am(double x) const { return ode.eval(x, 2); }
  double bm(double x) const { return ode.eval(x, 3); }
  void eval(double x, double out[4]) const { ode.eval(x, out); }

  // pointwise w-partials of a and b from the identity block
  void derived_w_partials(double x, const PainleveSolution& ps, double& da,
                          double& db) const;

  const std::vector<double>& grid() const { return ode.xs; }
  void write_csv(std::ostream& os) const;  // columns: x,a,b,am,bm

  OdeSolution ode;
};

PainleveSolution solve_hastings_mcleod(double x_min, double x_max, double tol);
// default domain/tolerance used throughout the verification suites
PainleveSolution solve_hastings_mcleod();

ABSolution solve_ab(double w, const PainleveSolution& ps);
ABSolution reflect_ab(const ABSolution& sol);

// int_{x_max}^inf e^{2wt} Ai(t) dt; enters the b boundary value, exposed for
// tests
double airy_exp_tail(double x_max, double w);

}  // namespace kpz
