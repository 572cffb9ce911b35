#pragma once

#include <functional>
#include <string>

#include "kpz/distributions.hpp"
#include "kpz/painleve.hpp"

// KP-equation residuals for the three solution families: GUE self-similar,
// GOE self-similar (reduced ODE), and the Baik-Rains solution, evaluated from
// analytic derivative stacks; a generic finite-difference residual serves as
// the cross-check.

namespace kpz {

struct KpResidualReport {
  double x = 0, t = 0, r = 0;
  double term_t = 0, term_nl = 0, term_rrr = 0, term_xx = 0;
  double coupling_terms = 0;  // the two extra terms of the modified equation
  double residual = 0;        // exact sum of the reported terms
  std::string method;         // "analytic" | "finite-difference"

  std::string to_json() const;
};

// phi(t,x,r) = t^{-2/3} psi(t^{-1/3} r + t^{-4/3} x^2), psi = -u^2
KpResidualReport kp_residual_gue(double x, double t, double r,
                                 const PainleveSolution& ps);

// psi''' + 12 psi' psi - r psi' - 2 psi with psi = (q' - q^2)/2, q = -u
double goe_ode_residual(double r, const PainleveSolution& ps);

// modified-KP residual of B = d_r^2 log y(s,w) at s = t^{-1/3}r + t^{-4/3}x^2,
// w = t^{-2/3}x/2; ab must be solved at that w
KpResidualReport kp_residual_br(double x, double t, double r,
                                const PainleveSolution& ps,
                                const ABSolution& ab);

// generic second-order central-difference residual of the plain KP equation
// for any scalar field; d_r^{-1} by quadrature in r from a right anchor where
// the field vanishes
using KpField = std::function<double(double x, double t, double r)>;
KpResidualReport kp_residual_fd(const KpField& field, double x, double t,
                                double r, double step = 1e-3,
                                double r_anchor = 6.0);

// the GUE self-similar field as a callable, for the FD cross-check
KpField gue_field(const PainleveSolution& ps);

}  // namespace kpz
