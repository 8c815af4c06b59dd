#ifndef HOMREP_SCALAR_HPP
#define HOMREP_SCALAR_HPP

#include <optional>
#include <string>
#include <variant>

#include "homrep/cyclotomic.hpp"
#include "homrep/rational_function.hpp"

namespace homrep {

enum class DomainKind { GenericQT, GenericQ, Cyclotomic };

/// Coefficient domain tag.  Generic domains are fraction fields of Laurent
/// polynomials (with or without t); cyclotomic domains are Q(zeta_k) with q
/// specialized to zeta_k.  Each domain carries the bar involution
/// q -> q^-1, t -> t^-1 (zeta -> zeta^-1 in the cyclotomic case).
struct ScalarDomain {
  DomainKind kind = DomainKind::GenericQ;
  int order = 0;  // cyclotomic order k

  static ScalarDomain qt() { return {DomainKind::GenericQT, 0}; }
  static ScalarDomain q_only() { return {DomainKind::GenericQ, 0}; }
  static ScalarDomain cyclotomic(int k) { return {DomainKind::Cyclotomic, k}; }

  bool operator==(const ScalarDomain&) const = default;
  bool is_generic() const { return kind != DomainKind::Cyclotomic; }
  std::string text() const;
};

/// Exact field element tagged with its domain.  Values are immutable in
/// spirit: every operation returns a fresh canonical-form scalar.
class Scalar {
 public:
  Scalar() = default;  // zero of Q(q)
  Scalar(ScalarDomain dom, RationalFunction v);
  Scalar(ScalarDomain dom, Cyclotomic v);

  static Scalar zero(ScalarDomain dom);
  static Scalar one(ScalarDomain dom);
  static Scalar from_int(ScalarDomain dom, long v);
  static Scalar from_rational(ScalarDomain dom, const mpq_class& v);
  /// q in generic domains, zeta_k in cyclotomic ones.
  static Scalar q(ScalarDomain dom, int e = 1);
  /// t; only defined in the q,t domain.
  static Scalar t(ScalarDomain dom, int e = 1);

  const ScalarDomain& domain() const { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  const RationalFunction& rational_function() const;
  const Cyclotomic& cyclotomic() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// The bar involution of the domain.
  Scalar bar() const;

  /// Numeric value at q = exp(i*q_angle), t = exp(i*t_angle) for generic
  /// domains, or at zeta_k = exp(2*pi*i/k) for cyclotomic ones.
  std::complex<double> eval_complex(double q_angle, double t_angle) const;

  std::string text() const;

 private:
  void check_domain(const Scalar& o) const;

  ScalarDomain dom_ = ScalarDomain::q_only();
  std::variant<RationalFunction, Cyclotomic> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Target of a t-substitution.
struct TTarget {
  enum Kind { Keep, QInverse, MinusOne, Rational } kind = Keep;
  mpq_class value;

  static TTarget keep() { return {Keep, 0}; }
  static TTarget q_inverse() { return {QInverse, 0}; }
  static TTarget minus_one() { return {MinusOne, 0}; }
  static TTarget rational(const mpq_class& v) { return {Rational, v}; }
};

/// Ring-homomorphic specialization: substitute t first (if requested), then
/// send q to zeta_k (if an order is given).  Throws DenominatorVanishes when
/// a denominator maps to zero; the caller is expected to clear denominators
/// first in that case.
Scalar specialize(const Scalar& x, std::optional<int> q_root_order, TTarget t_target);

/// Evaluation of a cyclotomic scalar at the chosen primitive root.
std::complex<double> complex_embed(const Scalar& x, int root_choice);

}  // namespace homrep

#endif
