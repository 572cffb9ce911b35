#pragma once

// Airy function Ai and its derivative on the real line, absolute error
// below 1e-13 on [-20,20].  Three evaluation branches:
//   x in (-9.5, 4.5): Maclaurin series summed in quad precision (the series
//                     alternates badly for negative x, so extra digits are
//                     needed to absorb the cancellation)
//   x >= 4.5:         Bessel-K integral representation,
//                     Ai(x) = sqrt(x/3)/pi * K_{1/3}(z), z = (2/3)x^{3/2}
//   x <= -9.5:        trigonometric asymptotic expansion
// The branch internals are exposed so tests can compare them across the
// crossover regions.

namespace kpz {

double airy_ai(double x);
double airy_aip(double x);

// individual branches (valid only on their stated ranges)
double airy_ai_series(double x);
double airy_aip_series(double x);
double airy_ai_integral(double x);   // x >= 4
double airy_aip_integral(double x);  // x >= 4
double airy_ai_osc(double x);        // x <= -8
double airy_aip_osc(double x);       // x <= -8

}  // namespace kpz
