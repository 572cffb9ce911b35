#include "kpz/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace kpz {

// Newton iteration on the Legendre polynomial recurrence; nodes seeded from
// the Chebyshev-like asymptotic estimate.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; i++) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5)), z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; j++) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > 1e-15);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

QuadratureRule build_rule(int m, double L) {
  if (m < 10 || L <= 0) throw std::invalid_argument("build_rule: need m >= 10 and L > 0");
  std::vector<double> x, w;
  gauss_legendre(m, x, w);
  QuadratureRule r;
  r.m = m;
  r.L = L;
  r.nodes.resize(m);
  r.weights.resize(m);
  for (int i = 0; i < m; i++) {
    r.nodes[i] = 0.5 * L * (x[i] + 1.0);
    r.weights[i] = 0.5 * L * w[i];
  }
  return r;
}

void composite_rule(double a, double b, int npanel, int npts,
                    std::vector<double>& xs, std::vector<double>& ws) {
  std::vector<double> x, w;
  gauss_legendre(npts, x, w);
  double hp = (b - a) / npanel;
  for (int p = 0; p < npanel; p++) {
    double lo = a + p * hp;
    for (int i = 0; i < npts; i++) {
      xs.push_back(lo + 0.5 * hp * (x[i] + 1.0));
      ws.push_back(0.5 * hp * w[i]);
    }
  }
}

}  // namespace kpz
