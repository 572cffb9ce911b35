#include "kpz/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace kpz {

namespace {
void check_domain(double s, const PainleveSolution& ps, const char* who) {
  if (s < ps.x_min - 1e-12 || s > ps.x_max + 1e-12)
    throw std::domain_error(std::string(who) + ": s outside solution domain");
}
}  // namespace

double f_gue(double s, const PainleveSolution& ps) {
  check_domain(s, ps, "f_gue");
  return std::exp(-ps.i2(s));
}

double f_goe(double s, const PainleveSolution& ps) {
  check_domain(s, ps, "f_goe");
  return std::exp(0.5 * (-ps.i2(s) + ps.iu(s)));
}

DistributionPoint distribution_point(double s, const PainleveSolution& ps) {
  check_domain(s, ps, "distribution_point");
  DistributionPoint p;
  p.s = s;
  double i2 = ps.i2(s), iu = ps.iu(s);
  p.f_cap = std::exp(-0.5 * i2);
  p.e_cap = std::exp(0.5 * iu);
  p.f_gue = p.f_cap * p.f_cap;
  p.f_goe = p.f_cap * p.e_cap;
  return p;
}

double y_fn(double x, double w, const PainleveSolution& ps,
            const ABSolution& ab) {
  if (std::fabs(ab.w - w) > 1e-12)
    throw std::invalid_argument("y_fn: ABSolution solved at a different w");
  check_domain(x, ps, "y_fn");
  double u = ps.u(x), up = ps.up(x);
  double s[4];
  ab.eval(x, s);
  double a = s[0], b = s[1], am = s[2], bm = s[3];
  return (2 * u * u + x - 4 * w * w) * a * am - (up + 2 * w * u) * b * am -
         (up - 2 * w * u) * a * bm;
}

BaikRainsPoint baik_rains_cdf(double tau, double r, const PainleveSolution& ps,
                              const ABSolution& ab) {
  double w = 0.5 * tau;
  if (std::fabs(ab.w - w) > 1e-12)
    throw std::invalid_argument("baik_rains_cdf: ABSolution not solved at tau/2");
  double x = r + tau * tau;
  check_domain(x, ps, "baik_rains_cdf");

  BaikRainsPoint p;
  p.tau = tau;
  p.r = r;
  double y = y_fn(x, w, ps, ab);
  double fg = std::exp(-ps.i2(x));
  double v = ps.v(x);
  double s[4];
  ab.eval(x, s);
  // F_tau = d/dx (y F_GUE) = (y' - y v) F_GUE with y' = a a(-w); v <= 0 here
  p.y_val = y;
  p.antideriv = y * fg;
  p.f_tau = (s[0] * s[2] - y * v) * fg;
  return p;
}

}  // namespace kpz
