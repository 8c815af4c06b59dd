#ifndef HOMREP_LAURENT_HPP
#define HOMREP_LAURENT_HPP

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace homrep {

/// Exponent pair of a monomial q^a * t^b.
struct Mono {
  int a = 0;
  int b = 0;
  friend bool operator==(Mono x, Mono y) { return x.a == y.a && x.b == y.b; }
};

/// Canonical term order: descending lexicographic by (a, b).  This is the
/// order used for all text output and for leading-term selection.
struct MonoOrder {
  bool operator()(Mono x, Mono y) const {
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

/// Laurent polynomial in q and t with exact rational coefficients.
/// Invariant: no zero coefficient is ever stored, so the term map is a
/// canonical form and equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<Mono, mpq_class, MonoOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_[Mono{0, 0}] = c;
  }
  LaurentPoly(const mpq_class& c, int qexp, int texp) {
    if (c != 0) terms_[Mono{qexp, texp}] = c;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(mpq_class(1)); }
  static LaurentPoly q(int e = 1) { return LaurentPoly(mpq_class(1), e, 0); }
  static LaurentPoly t(int e = 1) { return LaurentPoly(mpq_class(1), 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the only possible term is the constant one.
  bool is_constant() const;
  /// Constant term value (zero if absent).
  mpq_class constant_value() const;
  /// True when no term involves t.
  bool t_free() const { return min_t_exp() == 0 && max_t_exp() == 0; }
  /// True when the polynomial is a single term.
  bool is_monomial() const { return terms_.size() == 1; }

  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int min_q_exp() const;
  int max_q_exp() const;
  int min_t_exp() const;
  int max_t_exp() const;

  /// Leading term in the canonical order.
  Mono leading_mono() const;
  mpq_class leading_coeff() const;

  void add_term(Mono m, const mpq_class& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const mpq_class& c) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply by the monomial q^da * t^db (exponent shift).
  LaurentPoly shifted(int da, int db) const;

  LaurentPoly pow(unsigned e) const;

  /// The bar involution q -> q^-1, t -> t^-1.
  LaurentPoly bar() const;

  /// Substitute t := coef * q^qexp.  Used for t = q^-1 and t = -1.
  LaurentPoly substitute_t(const mpq_class& coef, int qexp) const;

  /// Exact division; nullopt when the division has a remainder.
  std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& d) const;

  /// GCD of the underlying polynomials, monomial factors dropped.  The
  /// result is a genuine polynomial with min exponents (0,0) and leading
  /// coefficient 1.
  static LaurentPoly gcd(const LaurentPoly& x, const LaurentPoly& y);

  /// Numeric evaluation at complex values of q and t.
  std::complex<double> eval_complex(std::complex<double> qv,
                                    std::complex<double> tv) const;

  /// Canonical text form, e.g. "-1 + q^-1*t".
  std::string text() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace homrep

#endif
