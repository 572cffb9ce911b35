#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Exact-arithmetic differential ring over the generators
//   u, u1 (= u'), a, b, am (= a(x,-w)), bm (= b(x,-w)), x, w
// with the derivation rules of the Painleve II identity block and the
// canonicalizing rewrites u'' -> 2u^3 + xu (applied at derivation time, u''
// never materializes) and b*bm -> a*am.  Mechanizes the direct-verification
// computation: rebuilds the printed derivative formulas of y and reduces the
// full KP expression to the literal zero polynomial.

namespace kpz {

using Rational = boost::multiprecision::cpp_rational;

// generator indices in the exponent vector
enum Gen { GU = 0, GU1, GA, GB, GAM, GBM, GX, GW, NGEN };

struct Monomial {
  std::array<uint8_t, NGEN> e{};
  int degree() const {
    int d = 0;
    for (int i = 0; i < NGEN; i++) d += e[i];
    return d;
  }
  // graded lexicographic: higher total degree first, then lex on (u, u1, a,
  // b, am, bm, x, w)
  bool operator<(const Monomial& o) const {
    int d = degree(), od = o.degree();
    if (d != od) return d > od;
    return e > o.e;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

class DiffPoly {
 public:
  std::map<Monomial, Rational> terms;

  static DiffPoly zero() { return DiffPoly(); }
  static DiffPoly constant(const Rational& c);
  static DiffPoly gen(Gen g, int power = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(Monomial m, const Rational& c);  // canonicalizes b*bm -> a*am

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly operator*(const Rational& c) const;
  bool operator==(const DiffPoly& o) const { return terms == o.terms; }

  std::string str() const;  // deterministic graded-lex pretty print
};

DiffPoly d_dx(const DiffPoly& p);
DiffPoly d_dw(const DiffPoly& p);

DiffPoly build_y();

struct KpCancellation {
  bool zero;
  DiffPoly reduced;
};

// the seven block coefficients of the assembled Section-3 expression:
// {1/12, -1/6, 1/16, 1/3 (times w), -1/3 (times x), -1 (times u^2),
//  -2 (times u u')}
std::array<Rational, 7> kp_block_coefficients();
KpCancellation verify_kp_cancellation();
KpCancellation verify_kp_cancellation(const std::array<Rational, 7>& coeff);

// Coefficient table: groups a DiffPoly by its (a, b, am, bm) monomial; each
// group's coefficient is an exact polynomial in u, u1, x, w.  Bridges the
// exact forms to numeric evaluation.
struct CoeffTable {
  struct Term {
    Rational c;
    std::array<uint8_t, 4> e;  // exponents of u, u1, x, w
  };
  struct Entry {
    std::array<uint8_t, 4> ab;  // exponents of a, b, am, bm
    std::vector<Term> poly;
  };
  std::vector<Entry> entries;

  double eval(double u, double u1, double x, double w, double a, double b,
              double am, double bm) const;
};

CoeffTable export_coeff_table(const DiffPoly& p);

// all y-partials needed by the Baik-Rains KP residual, derived once
struct YPartialTables {
  CoeffTable y, y1, y2, y3, y4, y5;
  CoeffTable p2y, p2y1, p2y2, p22y, p22y1;
};
const YPartialTables& y_partial_tables();

}  // namespace kpz
