#include "homrep/rational_function.hpp"

#include <ostream>

#include "homrep/errors.hpp"

namespace homrep {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Move the denominator's monomial factor into the numerator, so the
  // denominator is a genuine polynomial with min exponents (0,0).
  int da = den_.min_q_exp();
  int db = den_.min_t_exp();
  if (da != 0 || db != 0) {
    den_ = den_.shifted(-da, -db);
    num_ = num_.shifted(-da, -db);
  }
  if (!den_.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
      auto qn = num_.divided_exactly_by(g);
      auto qd = den_.divided_exactly_by(g);
      // gcd strips monomial content, so both divisions are exact.
      num_ = std::move(*qn);
      den_ = std::move(*qd);
    }
  }
  mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    mpq_class inv_lc = mpq_class(1) / lc;
    num_ = num_ * inv_lc;
    den_ = den_ * inv_lc;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::bar() const {
  return RationalFunction(num_.bar(), den_.bar());
}

RationalFunction RationalFunction::substitute_t(const mpq_class& coef, int qexp) const {
  LaurentPoly d = den_.substitute_t(coef, qexp);
  if (d.is_zero())
    throw DenominatorVanishes("denominator vanishes under t substitution");
  return RationalFunction(num_.substitute_t(coef, qexp), d);
}

std::complex<double> RationalFunction::eval_complex(std::complex<double> qv,
                                                    std::complex<double> tv) const {
  return num_.eval_complex(qv, tv) / den_.eval_complex(qv, tv);
}

std::string RationalFunction::text() const {
  if (den_.is_one()) return num_.text();
  return "(" + num_.text() + ")/(" + den_.text() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.text();
}

}  // namespace homrep
