#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kpz/airy.hpp"

using kpz::airy_ai;
using kpz::airy_aip;

// Reference values computed with an independent arbitrary-precision
// implementation (50-digit working precision, rounded to double).
struct Ref { double x, ai, aip; };
static const Ref refs[] = {
    {-20, -1.76406127077984698e-01, 8.92862856736471255e-01},
    {-15.5, -1.66447954090419764e-01, 9.04937935430212170e-01},
    {-12, -6.65551750543731252e-02, 1.02311045336797068e+00},
    {-10, 4.02412384864431899e-02, 9.96265044132790045e-01},
    {-9.7, 2.80237501916297760e-01, 4.86286291239266255e-01},
    {-8, -5.27050503563862016e-02, 9.35560938198306546e-01},
    {-6, -3.29145173629823096e-01, 3.45935487281342879e-01},
    {-5, 3.50761009024114334e-01, 3.27192818554443154e-01},
    {-3, -3.78814293677658065e-01, 3.14583769216598808e-01},
    {-2.5, -1.12325067692966088e-01, 6.78852734264794311e-01},
    {-1, 5.35560883292352075e-01, -1.01605671166452097e-02},
    {0, 3.55028053887817239e-01, -2.58819403792806798e-01},
    {0.5, 2.31693606480833481e-01, -2.24910532664683888e-01},
    {1, 1.35292416312881414e-01, -1.59147441296793202e-01},
    {2, 3.49241304232743785e-02, -5.30903844336536312e-02},
    {3, 6.59113935746071921e-03, -1.19129767059513187e-02},
    {4, 9.51563851204801844e-04, -1.95864095020417900e-03},
    {4.25, 5.64639835342501360e-04, -1.19520513454491424e-03},
    {4.5, 3.30250323514308961e-04, -7.17866567557508858e-04},
    {5, 1.08344428136074422e-04, -2.47413890868462480e-04},
    {5.5, 3.36853119085998124e-05, -8.04633913055651450e-05},
    {6, 9.94769436025288882e-06, -2.47652003970349555e-05},
    {8, 4.69220761609923157e-08, -1.34143929790678648e-07},
    {10, 1.10475325528986860e-10, -3.52063367673892370e-10},
    {16, 4.15688882891702441e-20, -1.66918867683818094e-19},
    {20, 1.69167286867054043e-27, -7.58639162574835447e-27},
};

TEST_CASE("reference table, absolute error <= 1e-13 on [-20,20]") {
  for (const Ref& r : refs) {
    CHECK(std::fabs(airy_ai(r.x) - r.ai) <= 1e-13);
    CHECK(std::fabs(airy_aip(r.x) - r.aip) <= 1e-13);
  }
}

TEST_CASE("closed forms at zero") {
  // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
  CHECK(airy_ai(0) == doctest::Approx(0.355028053887817239).epsilon(1e-15));
  CHECK(airy_aip(0) == doctest::Approx(-0.258819403792806798).epsilon(1e-15));
}

TEST_CASE("decay for large positive x") {
  CHECK(airy_ai(10) < 1e-9);
  CHECK(std::fabs(airy_aip(8)) < std::fabs(airy_aip(6)));
  CHECK(airy_ai(200) == 0.0);  // underflow contract
}

TEST_CASE("ODE residual Ai'' = x Ai via finite differences") {
  const double h = 1e-4;
  for (double x = -10; x <= 10.01; x += 0.5) {
    double fd2 = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CHECK(std::fabs(fd2 - x * airy_ai(x)) <= 1e-6);
  }
}

TEST_CASE("derivative consistent with central difference") {
  const double h = 1e-5;
  double fd = (airy_ai(1 + h) - airy_ai(1 - h)) / (2 * h);
  CHECK(std::fabs(fd - airy_aip(1)) <= 1e-8);
}

TEST_CASE("branch crossover: series vs integral agree on [4,6]") {
  for (double x = 4.0; x <= 6.001; x += 0.125) {
    CHECK(std::fabs(kpz::airy_ai_series(x) - kpz::airy_ai_integral(x)) <= 1e-11);
    CHECK(std::fabs(kpz::airy_aip_series(x) - kpz::airy_aip_integral(x)) <= 1e-11);
  }
}

TEST_CASE("branch crossover: series vs oscillatory asymptotics near -9.5") {
  for (double x = -10.0; x <= -8.0; x += 0.25) {
    CHECK(std::fabs(kpz::airy_ai_series(x) - kpz::airy_ai_osc(x)) <= 1e-12);
    CHECK(std::fabs(kpz::airy_aip_series(x) - kpz::airy_aip_osc(x)) <= 1e-12);
  }
}

TEST_CASE("sign pattern and first zero bracket") {
  for (double x = 0; x <= 20; x += 0.5) CHECK(airy_ai(x) > 0.0);
  CHECK(airy_ai(-2.3) > 0.0);
  CHECK(airy_ai(-2.4) < 0.0);
}

TEST_CASE("non-finite input rejected") {
  CHECK_THROWS_AS(airy_ai(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(airy_aip(INFINITY), std::domain_error);
}
