#pragma once

#include <vector>

namespace kpz {

// Gauss-Legendre rule mapped to [0, L]; discretizes the [0,inf) integrals of
// the Fredholm route (truncated at L).
struct QuadratureRule {
  int m = 0;
  double L = 0;
  std::vector<double> nodes;    // strictly increasing, inside (0, L)
  std::vector<double> weights;  // positive, sum to L
};

// n-point Gauss-Legendre nodes/weights on [-1, 1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

QuadratureRule build_rule(int m, double L);

// composite Gauss-Legendre rule on [a, b]: npanel panels, npts points each;
// appends to xs/ws
void composite_rule(double a, double b, int npanel, int npts,
                    std::vector<double>& xs, std::vector<double>& ws);

}  // namespace kpz
