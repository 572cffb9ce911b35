#pragma once

#include <vector>

#include "kpz/quadrature.hpp"

// Direct (Fredholm determinant) route: Nystrom discretization of the shifted
// Airy kernel, det(I - K) for F_GUE, resolvent solves, and g(s,w) -- the
// independent oracle for the Painleve route.

namespace kpz {

struct DiscretizedKernel {
  double s = 0;
  QuadratureRule rule;
  std::vector<double> matrix;  // m*m row-major, sqrt(w_i) K(x_i,x_j) sqrt(w_j)
  double at(int i, int j) const { return matrix[i * rule.m + j]; }
};

// K_{Ai,s}(x,y) = int_0^inf Ai(x+l+s) Ai(y+l+s) dl, via the rule's nodes
double airy_kernel(double s, double x, double y, const QuadratureRule& rule);

DiscretizedKernel discretize_kernel(double s, const QuadratureRule& rule);

double fredholm_det_airy(double s, int m = 160, double L = 40.0);

// solves the Nystrom system (I - K) u = rhs on the kernel's nodes, where
// (K u)(x_i) = sum_j w_j K(x_i, x_j) u(x_j)
std::vector<double> resolvent_apply(const DiscretizedKernel& k,
                                    const std::vector<double>& rhs);

// g(s,w): the two-term representation with the R_- integrals truncated at -Z.
// Requires w >= 0.05 (the e^{2wz} damping of the left-tail integrals).
double g_fn(double s, double w, int m = 160, double L = 40.0, double Z = 150.0);

// Psi-hat at the rule nodes (left integral of Ai against e^{2wz}); exposed for
// the Phi-hat consistency test
std::vector<double> psi_hat(double s, double w, const QuadratureRule& rule,
                            double Z);

}  // namespace kpz
