#include "kpz/airy.hpp"

#include <cmath>
#include <quadmath.h>
#include <stdexcept>

namespace kpz {

namespace {

typedef __float128 quad;

// Ai(0) = 3^{-2/3}/Gamma(2/3) and -Ai'(0) = 3^{-1/3}/Gamma(1/3),
// each stored as a hi+lo double pair (~32 significant digits).
const quad C1 = quad(3.55028053887817219e-01) + quad(2.05233632436211994e-17);
const quad C2 = quad(2.58819403792806824e-01) + quad(-2.52224311161083207e-17);

// Maclaurin series: Ai = C1*f - C2*g with
//   f = sum a_k x^{3k},   a_0 = 1,   a_{k+1}/a_k = 1/((3k+2)(3k+3))
//   g = sum b_k x^{3k+1}, b_0 = 1,   b_{k+1}/b_k = 1/((3k+3)(3k+4))
// Summed in __float128: at x = -9.5 the largest term exceeds the result by
// ~9 orders of magnitude, which quad precision absorbs with room to spare.
void series_fg(double x, quad& ai, quad& aip) {
  const quad x3 = quad(x) * quad(x) * quad(x);
  quad tf = 1, tg = x;                       // terms of f, g
  quad tfp = quad(x) * quad(x) / 2, tgp = 1; // terms of f', g'
  quad f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 0; k < 300; k++) {
    tf *= x3 / ((3 * k + 2) * (3 * k + 3));
    tg *= x3 / ((3 * k + 3) * (3 * k + 4));
    tfp *= x3 / ((3 * k + 3) * (3 * k + 5));
    tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
    f += tf; g += tg; fp += tfp; gp += tgp;
    if (fabsq(tf) + fabsq(tg) + fabsq(tfp) + fabsq(tgp) < quad(1e-45)) break;
  }
  ai = C1 * f - C2 * g;
  aip = C1 * fp - C2 * gp;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt evaluated by the
// trapezoidal rule.  The integrand extends to an even analytic function of t,
// so the trapezoid rule converges geometrically; the aliasing error is
// ~2 exp(-2 pi^2 / (z h^2)) (saddle width 1/sqrt(z)), so the spacing must
// shrink like 1/sqrt(z) to hold relative accuracy below 1e-16.
double bessel_k_scaled(double nu, double z) {  // returns e^z K_nu(z)
  const double h = std::min(0.2, 0.65 / std::sqrt(z));
  double T = std::acosh(1.0 + 46.0 / z) + 1.0;
  double sum = 0.5;  // t = 0 term of exp(-z(cosh t - 1)) cosh(nu t)
  for (int k = 1; k * h < T; k++) {
    double t = k * h;
    sum += std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
  }
  return h * sum;
}

}  // namespace

double airy_ai_series(double x) {
  quad ai, aip;
  series_fg(x, ai, aip);
  return (double)ai;
}

double airy_aip_series(double x) {
  quad ai, aip;
  series_fg(x, ai, aip);
  return (double)aip;
}

double airy_ai_integral(double x) {
  double z = 2.0 / 3.0 * x * std::sqrt(x);
  if (z > 700.0) return 0.0;
  return std::sqrt(x / 3.0) / M_PI * std::exp(-z) * bessel_k_scaled(1.0 / 3.0, z);
}

double airy_aip_integral(double x) {
  double z = 2.0 / 3.0 * x * std::sqrt(x);
  if (z > 700.0) return 0.0;
  return -x / (M_PI * std::sqrt(3.0)) * std::exp(-z) * bessel_k_scaled(2.0 / 3.0, z);
}

// Oscillatory asymptotics (Abramowitz & Stegun 10.4.60/10.4.62 family):
// with y = -x, z = (2/3) y^{3/2}, chi = z + pi/4,
//   Ai(-y)  =  pi^{-1/2} y^{-1/4} [ sin(chi) * S_even(u)  - cos(chi) * S_odd(u)  ]
//   Ai'(-y) = -pi^{-1/2} y^{+1/4} [ cos(chi) * S_even(v)  + sin(chi) * S_odd(v)  ]
// where S_even/S_odd alternate the standard u_k, v_k coefficients.
namespace {
void airy_osc(double x, double& ai, double& aip) {
  double y = -x;
  double z = 2.0 / 3.0 * y * std::sqrt(y);
  double chi = z + M_PI / 4.0;
  double uk = 1.0, zk = 1.0;
  double su_e = 0, su_o = 0, sv_e = 0, sv_o = 0;
  double sign = 1.0;  // (-1)^{k/2} pattern: + + - - + + ...
  for (int k = 0; k < 40; k++) {
    double vk = (k == 0) ? 1.0 : -uk * (6 * k + 1) / (6 * k - 1);
    double term_u = sign * uk / zk, term_v = sign * vk / zk;
    if (k % 2 == 0) { su_e += term_u; sv_e += term_v; }
    else            { su_o += term_u; sv_o += term_v; }
    if (std::fabs(uk / zk) < 1e-18) break;
    uk *= (6 * k + 1) * (6 * k + 3) * (6 * k + 5) / (216.0 * (k + 1) * (2 * k + 1));
    zk *= z;
    if (k % 2 == 1) sign = -sign;
  }
  double pre = 1.0 / std::sqrt(M_PI);
  double y4 = std::pow(y, 0.25);
  ai = pre / y4 * (std::sin(chi) * su_e - std::cos(chi) * su_o);
  aip = -pre * y4 * (std::cos(chi) * sv_e + std::sin(chi) * sv_o);
}
}  // namespace

double airy_ai_osc(double x) {
  double ai, aip;
  airy_osc(x, ai, aip);
  return ai;
}

double airy_aip_osc(double x) {
  double ai, aip;
  airy_osc(x, ai, aip);
  return aip;
}

double airy_ai(double x) {
  if (!std::isfinite(x)) throw std::domain_error("airy_ai: non-finite argument");
  if (x <= -9.5) return airy_ai_osc(x);
  if (x < 4.5) return airy_ai_series(x);
  return airy_ai_integral(x);
}

double airy_aip(double x) {
  if (!std::isfinite(x)) throw std::domain_error("airy_aip: non-finite argument");
  if (x <= -9.5) return airy_aip_osc(x);
  if (x < 4.5) return airy_aip_series(x);
  return airy_aip_integral(x);
}

}  // namespace kpz
