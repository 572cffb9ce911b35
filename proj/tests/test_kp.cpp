#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kpz/kp.hpp"

using namespace kpz;

static const PainleveSolution& ps() {
  static PainleveSolution s = solve_hastings_mcleod();
  return s;
}

TEST_CASE("GUE self-similar solution satisfies KP") {
  for (double x : {0.0, 0.5, 1.0})
    for (double t : {0.5, 1.0, 2.0})
      for (double r : {-2.0, 0.0, 2.0}) {
        KpResidualReport rep = kp_residual_gue(x, t, r, ps());
        CHECK(std::fabs(rep.residual) < 1e-6);
        CHECK(rep.method == "analytic");
        CHECK(rep.residual == rep.term_t + rep.term_nl + rep.term_rrr +
                                  rep.term_xx + rep.coupling_terms);
      }
}

TEST_CASE("analytic GUE terms match finite differences term by term") {
  KpField f = gue_field(ps());
  for (double x : {0.0, 1.0})
    for (double t : {1.0, 2.0}) {
      double r = 0.0;
      KpResidualReport a = kp_residual_gue(x, t, r, ps());
      KpResidualReport d = kp_residual_fd(f, x, t, r);
      CHECK(std::fabs(a.term_t - d.term_t) < 1e-3);
      CHECK(std::fabs(a.term_nl - d.term_nl) < 1e-3);
      CHECK(std::fabs(a.term_rrr - d.term_rrr) < 1e-3);
      CHECK(std::fabs(a.term_xx - d.term_xx) < 1e-3);
      CHECK(std::fabs(d.residual) < 1e-3);
      CHECK(d.method == "finite-difference");
    }
}

TEST_CASE("GOE reduced ODE residual") {
  for (double r = -4.0; r <= 4.0; r += 0.5)
    CHECK(std::fabs(goe_ode_residual(r, ps())) < 1e-6);
}

TEST_CASE("Baik-Rains solution satisfies the modified KP equation") {
  for (double x : {0.2, 0.5, 1.0})
    for (double t : {1.0, 2.0}) {
      double w = 0.5 * x / std::cbrt(t * t);
      ABSolution ab = solve_ab(w, ps());
      for (double r : {-1.0, 0.0, 1.0}) {
        KpResidualReport rep = kp_residual_br(x, t, r, ps(), ab);
        CHECK(std::fabs(rep.residual) < 1e-4);
        // the coupling terms are genuinely load-bearing here
        CHECK(std::fabs(rep.residual - rep.coupling_terms) > 1e-4);
      }
    }
}

TEST_CASE("mismatched ab solution rejected") {
  ABSolution ab = solve_ab(0.3, ps());
  CHECK_THROWS_AS(kp_residual_br(1.0, 1.0, 0.0, ps(), ab),
                  std::invalid_argument);
}

TEST_CASE("nonpositive t rejected") {
  CHECK_THROWS_AS(kp_residual_gue(0.0, 0.0, 0.0, ps()), std::domain_error);
  CHECK_THROWS_AS(kp_residual_gue(0.0, -1.0, 0.0, ps()), std::domain_error);
}

TEST_CASE("report serializes deterministically") {
  KpResidualReport rep = kp_residual_gue(0.5, 1.0, 0.0, ps());
  std::string a = rep.to_json(), b = rep.to_json();
  CHECK(a == b);
  CHECK(a.find("\"method\":\"analytic\"") != std::string::npos);
  CHECK(a.find("\"residual\":") != std::string::npos);
}
