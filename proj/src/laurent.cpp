#include "homrep/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <vector>

#include "homrep/errors.hpp"
#include "zgcd.hpp"

namespace homrep {

namespace {

using homrep::detail::TZPoly;
using homrep::detail::ZPoly;
using homrep::detail::z_gcd;

// Laurent polynomial with min exponents shifted to (0,0), scaled to integer
// coefficients with overall content 1.
TZPoly to_integer_form(const homrep::LaurentPoly& p) {
  int qmin = p.min_q_exp();
  int tmin = p.min_t_exp();
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  TZPoly zf;
  zf.c.assign(static_cast<size_t>(p.max_t_exp() - tmin) + 1, ZPoly{});
  for (const auto& [m, c] : p.terms()) {
    auto& row = zf.c[static_cast<size_t>(m.b - tmin)];
    size_t idx = static_cast<size_t>(m.a - qmin);
    if (row.c.size() <= idx) row.c.resize(idx + 1, mpz_class(0));
    mpq_class scaled = c * mpq_class(den_lcm);
    row.c[idx] = scaled.get_num();
  }
  mpz_class g = 0;
  for (const auto& row : zf.c)
    for (const auto& x : row.c) {
      g = z_gcd(g, x);
      if (g == 1) break;
    }
  if (g != 0 && g != 1)
    for (auto& row : zf.c)
      for (auto& x : row.c) x /= g;
  zf.trim();
  return zf;
}

homrep::LaurentPoly from_integer_form(const TZPoly& p) {
  homrep::LaurentPoly r;
  for (size_t b = 0; b < p.c.size(); ++b)
    for (size_t a = 0; a < p.c[b].c.size(); ++a)
      if (p.c[b].c[a] != 0)
        r.add_term(homrep::Mono{static_cast<int>(a), static_cast<int>(b)},
                   mpq_class(p.c[b].c[a]));
  return r;
}

}  // namespace

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0};
}

mpq_class LaurentPoly::constant_value() const {
  auto it = terms_.find(Mono{0, 0});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int LaurentPoly::min_q_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.a < m) m = mono.a;
    first = false;
  }
  return m;
}

int LaurentPoly::max_q_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.a > m) m = mono.a;
    first = false;
  }
  return m;
}

int LaurentPoly::min_t_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.b < m) m = mono.b;
    first = false;
  }
  return m;
}

int LaurentPoly::max_t_exp() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.b > m) m = mono.b;
    first = false;
  }
  return m;
}

Mono LaurentPoly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

mpq_class LaurentPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

void LaurentPoly::add_term(Mono m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term(Mono{m1.a + m2.a, m1.b + m2.b}, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const mpq_class& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int da, int db) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_[Mono{m.a + da, m.b + db}] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_[Mono{-m.a, -m.b}] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_t(const mpq_class& coef, int qexp) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    mpq_class cc = c;
    if (m.b >= 0) {
      for (int i = 0; i < m.b; ++i) cc *= coef;
    } else {
      if (coef == 0) throw DivisionByZero("t substituted by zero with negative exponent");
      for (int i = 0; i < -m.b; ++i) cc /= coef;
    }
    r.add_term(Mono{m.a + qexp * m.b, 0}, cc);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    Mono dm = d.leading_mono();
    mpq_class dc = d.leading_coeff();
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.add_term(Mono{m.a - dm.a, m.b - dm.b}, c / dc);
    return r;
  }
  // Long division by the leading monomial in the canonical order.  The
  // division is performed on genuine polynomials; the monomial offset is
  // restored afterwards.
  LaurentPoly num = shifted(-min_q_exp(), -min_t_exp());
  LaurentPoly den = d.shifted(-d.min_q_exp(), -d.min_t_exp());
  int da = min_q_exp() - d.min_q_exp();
  int db = min_t_exp() - d.min_t_exp();
  LaurentPoly quo;
  Mono dl = den.leading_mono();
  mpq_class dlc = den.leading_coeff();
  while (!num.is_zero()) {
    Mono nl = num.leading_mono();
    Mono qm{nl.a - dl.a, nl.b - dl.b};
    if (qm.a < 0 || qm.b < 0) return std::nullopt;
    mpq_class qc = num.leading_coeff() / dlc;
    LaurentPoly piece(qc, qm.a, qm.b);
    quo = quo + piece;
    num = num - piece * den;
  }
  return quo.shifted(da, db);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& x, const LaurentPoly& y) {
  auto finish = [](LaurentPoly g) {
    if (!g.is_zero() && g.leading_coeff() != 1)
      g = g * (mpq_class(1) / g.leading_coeff());
    return g;
  };
  auto stripped = [](const LaurentPoly& p) {
    return p.shifted(-p.min_q_exp(), -p.min_t_exp());
  };
  if (x.is_zero()) return finish(y.is_zero() ? y : stripped(y));
  if (y.is_zero()) return finish(stripped(x));
  if (x.is_monomial() || y.is_monomial()) return LaurentPoly::one();

  TZPoly g = detail::tzpoly_gcd(to_integer_form(x), to_integer_form(y));
  return finish(from_integer_form(g));
}

std::complex<double> LaurentPoly::eval_complex(std::complex<double> qv,
                                               std::complex<double> tv) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    std::complex<double> term(c.get_d(), 0.0);
    term *= std::pow(qv, m.a);
    term *= std::pow(tv, m.b);
    acc += term;
  }
  return acc;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string monos;
    if (m.a != 0) {
      monos += "q";
      if (m.a != 1) monos += "^" + std::to_string(m.a);
    }
    if (m.b != 0) {
      if (!monos.empty()) monos += "*";
      monos += "t";
      if (m.b != 1) monos += "^" + std::to_string(m.b);
    }
    if (monos.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << monos;
    } else {
      os << mag.get_str() << "*" << monos;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.text();
}

}  // namespace homrep
