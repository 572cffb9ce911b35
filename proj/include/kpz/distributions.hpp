#pragma once

#include "kpz/painleve.hpp"

// Painleve-route distribution functions: F, E, F_GUE, F_GOE, y(x,w) and the
// Baik-Rains CDF F_tau.

namespace kpz {

struct DistributionPoint {
  double s;
  double f_gue, f_goe;   // CDF values
  double f_cap, e_cap;   // F(s), E(s)
};

struct BaikRainsPoint {
  double tau, r;
  double y_val;      // y(r+tau^2, tau/2)
  double f_tau;      // CDF value F_tau(r)
  double antideriv;  // y * F_GUE at r+tau^2
};

double f_gue(double s, const PainleveSolution& ps);
double f_goe(double s, const PainleveSolution& ps);
DistributionPoint distribution_point(double s, const PainleveSolution& ps);

// Eq. combination (2u^2+x-4w^2) a am - (u'+2wu) b am - (u'-2wu) a bm;
// requires ab.w == w
double y_fn(double x, double w, const PainleveSolution& ps,
            const ABSolution& ab);

// F_tau(r) = d/dr ( y(r+tau^2,tau/2) F_GUE(r+tau^2) )
//          = ( a*am - y*v ) F_GUE  evaluated at x = r+tau^2.
// ab must be solved at w = tau/2 (reflect_ab for tau < 0).
BaikRainsPoint baik_rains_cdf(double tau, double r, const PainleveSolution& ps,
                              const ABSolution& ab);

}  // namespace kpz
