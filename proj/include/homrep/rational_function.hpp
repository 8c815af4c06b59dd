#ifndef HOMREP_RATIONAL_FUNCTION_HPP
#define HOMREP_RATIONAL_FUNCTION_HPP

#include <complex>
#include <string>

#include "homrep/laurent.hpp"

namespace homrep {

/// Quotient of Laurent polynomials in normalized form: the gcd of numerator
/// and denominator is removed, the denominator is a genuine polynomial with
/// minimum exponents (0,0) and leading coefficient 1.  With that convention
/// the representation is unique, so equality is component comparison.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::one()) {}
  explicit RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);
  explicit RationalFunction(const mpq_class& c)
      : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(LaurentPoly::one()); }
  static RationalFunction q(int e = 1) { return RationalFunction(LaurentPoly::q(e)); }
  static RationalFunction t(int e = 1) { return RationalFunction(LaurentPoly::t(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool t_free() const { return num_.t_free() && den_.t_free(); }
  bool is_rational_constant() const { return num_.is_constant() && den_.is_one(); }
  mpq_class rational_value() const { return num_.constant_value(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inv() const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction bar() const;

  /// Substitute t := coef * q^qexp.
  RationalFunction substitute_t(const mpq_class& coef, int qexp) const;

  std::complex<double> eval_complex(std::complex<double> qv,
                                    std::complex<double> tv) const;

  /// Canonical text: numerator, or "(num)/(den)" when the denominator is
  /// not 1.
  std::string text() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace homrep

#endif
