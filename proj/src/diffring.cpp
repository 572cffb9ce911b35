#include "kpz/diffring.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kpz {

DiffPoly DiffPoly::constant(const Rational& c) {
  DiffPoly p;
  if (c != 0) p.terms[Monomial{}] = c;
  return p;
}

DiffPoly DiffPoly::gen(Gen g, int power) {
  DiffPoly p;
  Monomial m;
  m.e[g] = (uint8_t)power;
  p.terms[m] = 1;
  return p;
}

void DiffPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  // one-way rewrite b*bm -> a*am, exhaustively
  uint8_t k = std::min(m.e[GB], m.e[GBM]);
  if (k) {
    m.e[GB] -= k;
    m.e[GBM] -= k;
    m.e[GA] += k;
    m.e[GAM] += k;
  }
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  DiffPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
  DiffPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  DiffPoly r;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) {
      Monomial m;
      for (int i = 0; i < NGEN; i++) {
        int s = m1.e[i] + m2.e[i];
        if (s > 255) throw std::overflow_error("DiffPoly: exponent overflow");
        m.e[i] = (uint8_t)s;
      }
      r.add_term(m, c1 * c2);
    }
  return r;
}

DiffPoly DiffPoly::operator*(const Rational& c) const {
  DiffPoly r;
  if (c == 0) return r;
  for (const auto& [m, cc] : terms) r.terms[m] = cc * c;
  return r;
}

namespace {

const char* kGenName[NGEN] = {"u", "u1", "a", "b", "am", "bm", "x", "w"};

// derivation rules, as polynomials in the generators
struct Rules {
  DiffPoly dx[NGEN], dw[NGEN];
  Rules() {
    DiffPoly u = DiffPoly::gen(GU), u1 = DiffPoly::gen(GU1),
             a = DiffPoly::gen(GA), b = DiffPoly::gen(GB),
             am = DiffPoly::gen(GAM), bm = DiffPoly::gen(GBM),
             x = DiffPoly::gen(GX), w = DiffPoly::gen(GW);
    DiffPoly two = DiffPoly::constant(2), four = DiffPoly::constant(4),
             eight = DiffPoly::constant(8);
    // d/dx:  u'' -> 2u^3 + xu folded into the u1 rule
    dx[GU] = u1;
    dx[GU1] = two * u * u * u + x * u;
    dx[GA] = u * b;
    dx[GB] = u * a - two * w * b;
    dx[GAM] = u * bm;
    dx[GBM] = u * am + two * w * bm;
    dx[GX] = DiffPoly::constant(1);
    // d/dw (the reflected-generator rules carry the chain-rule sign flip)
    dw[GA] = two * u * u * a - (four * w * u + two * u1) * b;
    dw[GB] = (DiffPoly::constant(-4) * w * u + two * u1) * a +
             (eight * w * w - two * x - two * u * u) * b;
    dw[GAM] = DiffPoly::constant(-2) * u * u * am -
              (four * w * u - two * u1) * bm;
    dw[GBM] = (DiffPoly::constant(-4) * w * u - two * u1) * am -
              (eight * w * w - two * x - two * u * u) * bm;
    dw[GW] = DiffPoly::constant(1);
  }
};

const Rules& rules() {
  static const Rules r;
  return r;
}

DiffPoly derive(const DiffPoly& p, const DiffPoly* rule) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms) {
    for (int g = 0; g < NGEN; g++) {
      if (!m.e[g] || rule[g].is_zero()) continue;
      Monomial base = m;
      base.e[g]--;
      DiffPoly factor;
      factor.add_term(base, c * m.e[g]);
      out = out + factor * rule[g];
    }
  }
  return out;
}

}  // namespace

DiffPoly d_dx(const DiffPoly& p) { return derive(p, rules().dx); }
DiffPoly d_dw(const DiffPoly& p) { return derive(p, rules().dw); }

DiffPoly build_y() {
  DiffPoly u = DiffPoly::gen(GU), u1 = DiffPoly::gen(GU1),
           a = DiffPoly::gen(GA), b = DiffPoly::gen(GB),
           am = DiffPoly::gen(GAM), bm = DiffPoly::gen(GBM),
           x = DiffPoly::gen(GX), w = DiffPoly::gen(GW);
  DiffPoly two = DiffPoly::constant(2), four = DiffPoly::constant(4);
  return (two * u * u + x - four * w * w) * a * am -
         (u1 + two * w * u) * b * am - (u1 - two * w * u) * a * bm;
}

std::array<Rational, 7> kp_block_coefficients() {
  return {Rational(1, 12), Rational(-1, 6), Rational(1, 16),
          Rational(1, 3),  Rational(-1, 3), Rational(-1),
          Rational(-2)};
}

KpCancellation verify_kp_cancellation(const std::array<Rational, 7>& c) {
  DiffPoly y = build_y();
  DiffPoly y1 = d_dx(y), y2 = d_dx(y1), y3 = d_dx(y2), y4 = d_dx(y3),
           y5 = d_dx(y4);
  DiffPoly p2y = d_dw(y), p2y1 = d_dx(p2y), p2y2 = d_dx(p2y1),
           p22y = d_dw(p2y), p22y1 = d_dx(p22y);
  DiffPoly u = DiffPoly::gen(GU), u1 = DiffPoly::gen(GU1),
           x = DiffPoly::gen(GX), w = DiffPoly::gen(GW);

  DiffPoly t1 = y5 * y * y - y1 * y4 * y * Rational(5) +
                y2 * y3 * y * Rational(2) - y1 * y2 * y2 * Rational(6) +
                y1 * y1 * y3 * Rational(8);
  DiffPoly t2 = y2 * y * y - y1 * y1 * y;
  DiffPoly t3 = p22y1 * y * y - p2y1 * p2y * y * Rational(2) - y1 * p22y * y +
                y1 * p2y * p2y * Rational(2);
  DiffPoly t4 = p2y2 * y * y - y2 * p2y * y - y1 * p2y1 * y * Rational(2) +
                y1 * y1 * p2y * Rational(2);
  DiffPoly t5 = y3 * y * y - y1 * y2 * y * Rational(3) +
                y1 * y1 * y1 * Rational(2);

  DiffPoly expr = t1 * c[0] + t2 * c[1] + t3 * c[2] + (w * t4) * c[3] +
                  (x * t5) * c[4] + (u * u * t5) * c[5] + (u * u1 * t2) * c[6];

  KpCancellation out;
  out.reduced = expr;
  out.zero = expr.is_zero();
  return out;
}

KpCancellation verify_kp_cancellation() {
  return verify_kp_cancellation(kp_block_coefficients());
}

std::string DiffPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {  // map order = graded lex
    Rational cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool unit = (cc == 1), any = false;
    if (!unit || m.degree() == 0) {
      os << cc;
      any = true;
    }
    for (int g = 0; g < NGEN; g++) {
      if (!m.e[g]) continue;
      if (any) os << "*";
      os << kGenName[g];
      if (m.e[g] > 1) os << "^" << (int)m.e[g];
      any = true;
    }
  }
  return os.str();
}

CoeffTable export_coeff_table(const DiffPoly& p) {
  std::map<std::array<uint8_t, 4>, std::vector<CoeffTable::Term>> groups;
  for (const auto& [m, c] : p.terms) {
    int abdeg = m.e[GA] + m.e[GB] + m.e[GAM] + m.e[GBM];
    if (abdeg > 3)
      throw std::invalid_argument(
          "export_coeff_table: degree in a,b,am,bm exceeds 3");
    std::array<uint8_t, 4> ab = {m.e[GA], m.e[GB], m.e[GAM], m.e[GBM]};
    groups[ab].push_back({c, {m.e[GU], m.e[GU1], m.e[GX], m.e[GW]}});
  }
  CoeffTable t;
  for (auto& [ab, poly] : groups) t.entries.push_back({ab, std::move(poly)});
  return t;
}

double CoeffTable::eval(double u, double u1, double x, double w, double a,
                        double b, double am, double bm) const {
  auto ipow = [](double v, int n) {
    double r = 1;
    for (int i = 0; i < n; i++) r *= v;
    return r;
  };
  double total = 0;
  for (const Entry& en : entries) {
    double coeff = 0;
    for (const Term& t : en.poly)
      coeff += (double)t.c * ipow(u, t.e[0]) * ipow(u1, t.e[1]) *
               ipow(x, t.e[2]) * ipow(w, t.e[3]);
    total += coeff * ipow(a, en.ab[0]) * ipow(b, en.ab[1]) *
             ipow(am, en.ab[2]) * ipow(bm, en.ab[3]);
  }
  return total;
}

const YPartialTables& y_partial_tables() {
  static YPartialTables t;
  static std::once_flag flag;
  std::call_once(flag, [] {
    DiffPoly y = build_y();
    DiffPoly y1 = d_dx(y), y2 = d_dx(y1), y3 = d_dx(y2), y4 = d_dx(y3),
             y5 = d_dx(y4);
    DiffPoly p2y = d_dw(y), p2y1 = d_dx(p2y), p2y2 = d_dx(p2y1),
             p22y = d_dw(p2y), p22y1 = d_dx(p22y);
    t.y = export_coeff_table(y);
    t.y1 = export_coeff_table(y1);
    t.y2 = export_coeff_table(y2);
    t.y3 = export_coeff_table(y3);
    t.y4 = export_coeff_table(y4);
    t.y5 = export_coeff_table(y5);
    t.p2y = export_coeff_table(p2y);
    t.p2y1 = export_coeff_table(p2y1);
    t.p2y2 = export_coeff_table(p2y2);
    t.p22y = export_coeff_table(p22y);
    t.p22y1 = export_coeff_table(p22y1);
  });
  return t;
}

}  // namespace kpz
