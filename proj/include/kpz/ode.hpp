#pragma once

#include <functional>
#include <vector>

// Adaptive explicit Runge-Kutta integration (Dormand-Prince 8(5,3) pair)
// with every accepted step stored for cubic Hermite dense output.  The step
// size is capped so the Hermite interpolation error stays below ~1e-11 for
// the smooth O(1)-scale systems solved here.

namespace kpz {

using OdeRhs = std::function<void(double x, const double* y, double* dydx)>;

class OdeSolution {
 public:
  int dim = 0;
  std::vector<double> xs;                // ascending
  std::vector<std::vector<double>> ys;   // state at xs[i]
  std::vector<std::vector<double>> fs;   // derivative at xs[i]

  double x_min() const { return xs.front(); }
  double x_max() const { return xs.back(); }
  // cubic Hermite interpolation of one component (clamped to the grid range
  // endpoints is a caller error; out-of-range throws)
  double eval(double x, int comp) const;
  void eval(double x, double* out) const;
};

// Integrates from x0 to x1 (either direction).  Throws std::runtime_error if
// |y| exceeds blowup (message names the x where it happened) or if the step
// size underflows.
OdeSolution integrate(const OdeRhs& rhs, double x0, double x1,
                      const std::vector<double>& y0, double rtol, double atol,
                      double hmax, double blowup = 1e30);

}  // namespace kpz
