#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kpz/painleve.hpp"

// Verification suites behind `verify` / `crosscheck`: each returns a JSON
// report {suite, checks:[{name, value, tolerance, pass}], pass}.

namespace kpz {

struct VerifyOptions {
  double tol_kp = 1e-4;     // Baik-Rains residual tolerance
  int m = 160;              // Fredholm quadrature size
  double L = 40.0;
  double Z = 150.0;
  bool corrupt_b = false;   // test hook: perturb b before the identity checks
};

// suites: kp-gue | kp-goe | kp-br | symbolic | identities
nlohmann::json run_verify_suite(const std::string& suite,
                                const PainleveSolution& ps,
                                const VerifyOptions& opt);

nlohmann::json run_crosscheck(const PainleveSolution& ps,
                              const std::vector<double>& s_grid,
                              const std::vector<double>& w_grid,
                              const VerifyOptions& opt, double tol_cross);

// golden-formula fixtures: printed Section-3 lines vs mechanical derivation;
// returns mismatch descriptions (empty = all reproduced)
std::vector<std::string> golden_formula_mismatches();

}  // namespace kpz
