#include "kpz/kp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kpz/diffring.hpp"
#include "kpz/format.hpp"

namespace kpz {

std::string KpResidualReport::to_json() const {
  std::ostringstream os;
  os << "{\"x\":" << fmt_shortest(x) << ",\"t\":" << fmt_shortest(t)
     << ",\"r\":" << fmt_shortest(r) << ",\"term_t\":" << fmt_shortest(term_t)
     << ",\"term_nl\":" << fmt_shortest(term_nl)
     << ",\"term_rrr\":" << fmt_shortest(term_rrr)
     << ",\"term_xx\":" << fmt_shortest(term_xx)
     << ",\"coupling_terms\":" << fmt_shortest(coupling_terms)
     << ",\"residual\":" << fmt_shortest(residual) << ",\"method\":\"" << method
     << "\"}";
  return os.str();
}

namespace {
// psi = -u^2 and its first three derivatives at xi, with u'' and u''' reduced
// through the Painleve equation
void gue_psi_derivs(double xi, const PainleveSolution& ps, double& psi,
                    double& psi1, double& psi2, double& psi3) {
  double u = ps.u(xi), u1 = ps.up(xi);
  double u2 = 2 * u * u * u + xi * u;
  double u3 = 6 * u * u * u1 + u + xi * u1;
  psi = -u * u;
  psi1 = -2 * u * u1;
  psi2 = -2 * (u1 * u1 + u * u2);
  psi3 = -2 * (3 * u1 * u2 + u * u3);
}
}  // namespace

KpResidualReport kp_residual_gue(double x, double t, double r,
                                 const PainleveSolution& ps) {
  if (t <= 0) throw std::domain_error("kp_residual_gue: t must be positive");
  double t13 = std::cbrt(t);
  double xi = r / t13 + x * x / (t13 * t13 * t13 * t13);
  double psi, psi1, psi2, psi3;
  gue_psi_derivs(xi, ps, psi, psi1, psi2, psi3);

  double t23 = t13 * t13, t53 = t * t23, t43 = t * t13, t73 = t * t * t13;
  KpResidualReport rep;
  rep.x = x;
  rep.t = t;
  rep.r = r;
  rep.method = "analytic";
  rep.term_t =
      -2.0 / 3.0 / t53 * psi - psi1 / t23 * (r / (3 * t43) + 4 * x * x / (3 * t73));
  rep.term_nl = psi * psi1 / t53;
  rep.term_rrr = psi3 / (12 * t53);
  // d_r^{-1} d_x^2 phi = 4 x^2 t^{-3} psi' + 2 t^{-5/3} psi  (antiderivative
  // vanishing at r -> +inf)
  rep.term_xx = 0.25 * (4 * x * x / (t * t * t) * psi1 + 2 * psi / t53);
  rep.coupling_terms = 0;
  rep.residual = rep.term_t + rep.term_nl + rep.term_rrr + rep.term_xx;
  return rep;
}

double goe_ode_residual(double r, const PainleveSolution& ps) {
  double u = ps.u(r), u1 = ps.up(r);
  double u2 = 2 * u * u * u + r * u;
  double u3 = 6 * u * u * u1 + u + r * u1;
  double u4 = 12 * u * u1 * u1 + 6 * u * u * u2 + 2 * u1 + r * u2;
  // psi = (q' - q^2)/2 with q = -u
  double psi = 0.5 * (-u1 - u * u);
  double psi1 = 0.5 * (-u2 - 2 * u * u1);
  double psi3 = 0.5 * (-u4 - 6 * u1 * u2 - 2 * u * u3);
  return psi3 + 12 * psi1 * psi - r * psi1 - 2 * psi;
}

KpResidualReport kp_residual_br(double x, double t, double r,
                                const PainleveSolution& ps,
                                const ABSolution& ab) {
  if (t <= 0) throw std::domain_error("kp_residual_br: t must be positive");
  double t13 = std::cbrt(t), t23 = t13 * t13;
  double s = r / t13 + x * x / (t23 * t23);
  double w = 0.5 * x / t23;
  if (std::fabs(ab.w - w) > 1e-12)
    throw std::invalid_argument("kp_residual_br: ABSolution not solved at w = x t^{-2/3}/2");

  double u = ps.u(s), u1 = ps.up(s);
  double abv[4];
  ab.eval(s, abv);
  const YPartialTables& tb = y_partial_tables();
  auto ev = [&](const CoeffTable& ct) {
    return ct.eval(u, u1, s, w, abv[0], abv[1], abv[2], abv[3]);
  };
  double y = ev(tb.y);
  if (std::fabs(y) < 1e-12)
    throw std::domain_error("kp_residual_br: |y| < 1e-12 (log-derivative singularity)");
  double y1 = ev(tb.y1), y2 = ev(tb.y2), y3 = ev(tb.y3), y4 = ev(tb.y4),
         y5 = ev(tb.y5);
  double q2y = ev(tb.p2y), q2y1 = ev(tb.p2y1), q2y2 = ev(tb.p2y2),
         q22y = ev(tb.p22y), q22y1 = ev(tb.p22y1);

  // log-derivative combinations in the scaling variable s
  double L2 = y2 / y - y1 * y1 / (y * y);                       // d_s^2 log y
  double L3 = y3 / y - 3 * y1 * y2 / (y * y) + 2 * std::pow(y1 / y, 3);
  double L5 = y5 / y - 10 * y2 * y3 / (y * y) - 5 * y1 * y4 / (y * y) +
              20 * y1 * y1 * y3 / (y * y * y) + 30 * y1 * y2 * y2 / (y * y * y) -
              60 * y1 * y1 * y1 * y2 / (y * y * y * y) +
              24 * std::pow(y1 / y, 5);
  // d_w of d_s^2 log y and of d_w (d_s log y)
  double W1 = q2y2 / y - y2 * q2y / (y * y) - 2 * y1 * q2y1 / (y * y) +
              2 * y1 * y1 * q2y / (y * y * y);
  double W2 = q22y1 / y - 2 * q2y1 * q2y / (y * y) - y1 * q22y / (y * y) +
              2 * y1 * q2y * q2y / (y * y * y);

  double t43 = t * t13, t53 = t * t23, t73 = t * t * t13, t3 = t * t * t;
  KpResidualReport rep;
  rep.x = x;
  rep.t = t;
  rep.r = r;
  rep.method = "analytic";
  rep.term_t = -2.0 / (3.0 * t53) * L2 -
               L3 / t23 * (r / (3 * t43) + 4 * x * x / (3 * t73)) -
               W1 * x / (3 * t23 * t53);
  rep.term_nl = L2 * L3 / t53;
  rep.term_rrr = L5 / (12 * t53);
  rep.term_xx =
      0.25 * (2 * L2 / t53 + 4 * x * x * L3 / t3 + 0.25 * W2 / t53 +
              2 * x * W1 / t73);
  // phi_gue = -t^{-2/3} u^2(s):  phi d_r B + B d_r phi
  rep.coupling_terms =
      -u * u * L3 / t53 - 2 * u * u1 * L2 / t53;
  rep.residual = rep.term_t + rep.term_nl + rep.term_rrr + rep.term_xx +
                 rep.coupling_terms;
  return rep;
}

KpField gue_field(const PainleveSolution& ps) {
  return [&ps](double x, double t, double r) {
    double t13 = std::cbrt(t);
    double xi = r / t13 + x * x / (t13 * t13 * t13 * t13);
    double u = ps.u(xi);
    return -u * u / (t13 * t13);
  };
}

KpResidualReport kp_residual_fd(const KpField& f, double x, double t, double r,
                                double h, double r_anchor) {
  KpResidualReport rep;
  rep.x = x;
  rep.t = t;
  rep.r = r;
  rep.method = "finite-difference";
  rep.term_t = (f(x, t + h, r) - f(x, t - h, r)) / (2 * h);
  rep.term_nl = f(x, t, r) * (f(x, t, r + h) - f(x, t, r - h)) / (2 * h);
  rep.term_rrr = (f(x, t, r + 2 * h) - 2 * f(x, t, r + h) + 2 * f(x, t, r - h) -
                  f(x, t, r - 2 * h)) /
                 (2 * h * h * h) / 12.0;
  // d_r^{-1} d_x^2 with the antiderivative vanishing at the right anchor:
  // -int_r^{anchor} d_x^2 f dr', composite Simpson
  auto fxx = [&](double rr) {
    return (f(x + h, t, rr) - 2 * f(x, t, rr) + f(x - h, t, rr)) / (h * h);
  };
  int nseg = std::max(2, (int)std::ceil((r_anchor - r) / 0.05));
  if (nseg % 2) nseg++;
  double hh = (r_anchor - r) / nseg, simp = fxx(r) + fxx(r_anchor);
  for (int i = 1; i < nseg; i++) simp += fxx(r + i * hh) * (i % 2 ? 4.0 : 2.0);
  rep.term_xx = 0.25 * (-simp * hh / 3.0);
  rep.coupling_terms = 0;
  rep.residual = rep.term_t + rep.term_nl + rep.term_rrr + rep.term_xx;
  return rep;
}

}  // namespace kpz
