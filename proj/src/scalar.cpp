#include "homrep/scalar.hpp"

#include <cmath>
#include <ostream>

#include "homrep/errors.hpp"

namespace homrep {

std::string ScalarDomain::text() const {
  switch (kind) {
    case DomainKind::GenericQT:
      return "Q(q,t)";
    case DomainKind::GenericQ:
      return "Q(q)";
    case DomainKind::Cyclotomic:
      return "Q(zeta_" + std::to_string(order) + ")";
  }
  return "?";
}

Scalar::Scalar(ScalarDomain dom, RationalFunction v) : dom_(dom), v_(std::move(v)) {
  if (dom_.kind == DomainKind::Cyclotomic)
    throw MixedDomain("rational function payload in cyclotomic domain");
  if (dom_.kind == DomainKind::GenericQ && !std::get<RationalFunction>(v_).t_free())
    throw MixedDomain("t appears in a Q(q) scalar");
}

Scalar::Scalar(ScalarDomain dom, Cyclotomic v) : dom_(dom), v_(std::move(v)) {
  if (dom_.kind != DomainKind::Cyclotomic)
    throw MixedDomain("cyclotomic payload in generic domain");
  if (std::get<Cyclotomic>(v_).order() != dom_.order)
    throw MixedDomain("cyclotomic order differs from domain order");
}

Scalar Scalar::zero(ScalarDomain dom) {
  if (dom.kind == DomainKind::Cyclotomic) return Scalar(dom, Cyclotomic(dom.order));
  return Scalar(dom, RationalFunction::zero());
}

Scalar Scalar::one(ScalarDomain dom) {
  if (dom.kind == DomainKind::Cyclotomic)
    return Scalar(dom, Cyclotomic(dom.order, mpq_class(1)));
  return Scalar(dom, RationalFunction::one());
}

Scalar Scalar::from_int(ScalarDomain dom, long v) {
  return from_rational(dom, mpq_class(v));
}

Scalar Scalar::from_rational(ScalarDomain dom, const mpq_class& v) {
  if (dom.kind == DomainKind::Cyclotomic) return Scalar(dom, Cyclotomic(dom.order, v));
  return Scalar(dom, RationalFunction(v));
}

Scalar Scalar::q(ScalarDomain dom, int e) {
  if (dom.kind == DomainKind::Cyclotomic)
    return Scalar(dom, Cyclotomic::zeta_power(dom.order, e));
  return Scalar(dom, RationalFunction::q(e));
}

Scalar Scalar::t(ScalarDomain dom, int e) {
  if (dom.kind != DomainKind::GenericQT)
    throw MixedDomain("t requested outside Q(q,t)");
  return Scalar(dom, RationalFunction::t(e));
}

bool Scalar::is_zero() const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return rf->is_zero();
  return std::get<Cyclotomic>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return rf->is_one();
  return std::get<Cyclotomic>(v_).is_one();
}

const RationalFunction& Scalar::rational_function() const {
  return std::get<RationalFunction>(v_);
}

const Cyclotomic& Scalar::cyclotomic() const { return std::get<Cyclotomic>(v_); }

void Scalar::check_domain(const Scalar& o) const {
  if (!(dom_ == o.dom_))
    throw MixedDomain("operands in different domains: " + dom_.text() + " vs " +
                      o.dom_.text());
}

Scalar Scalar::operator-() const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return Scalar(dom_, -*rf);
  return Scalar(dom_, -std::get<Cyclotomic>(v_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_domain(o);
  if (auto* rf = std::get_if<RationalFunction>(&v_))
    return Scalar(dom_, *rf + o.rational_function());
  return Scalar(dom_, std::get<Cyclotomic>(v_) + o.cyclotomic());
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_domain(o);
  if (auto* rf = std::get_if<RationalFunction>(&v_))
    return Scalar(dom_, *rf - o.rational_function());
  return Scalar(dom_, std::get<Cyclotomic>(v_) - o.cyclotomic());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_domain(o);
  if (auto* rf = std::get_if<RationalFunction>(&v_))
    return Scalar(dom_, *rf * o.rational_function());
  return Scalar(dom_, std::get<Cyclotomic>(v_) * o.cyclotomic());
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_domain(o);
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  if (auto* rf = std::get_if<RationalFunction>(&v_))
    return Scalar(dom_, *rf / o.rational_function());
  return Scalar(dom_, std::get<Cyclotomic>(v_) / o.cyclotomic());
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return Scalar(dom_, rf->inv());
  return Scalar(dom_, std::get<Cyclotomic>(v_).inv());
}

bool Scalar::operator==(const Scalar& o) const {
  check_domain(o);
  if (auto* rf = std::get_if<RationalFunction>(&v_))
    return *rf == o.rational_function();
  return std::get<Cyclotomic>(v_) == o.cyclotomic();
}

Scalar Scalar::bar() const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return Scalar(dom_, rf->bar());
  return Scalar(dom_, std::get<Cyclotomic>(v_).bar());
}

std::complex<double> Scalar::eval_complex(double q_angle, double t_angle) const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) {
    std::complex<double> qv(std::cos(q_angle), std::sin(q_angle));
    std::complex<double> tv(std::cos(t_angle), std::sin(t_angle));
    return rf->eval_complex(qv, tv);
  }
  return std::get<Cyclotomic>(v_).embed(1);
}

std::string Scalar::text() const {
  if (auto* rf = std::get_if<RationalFunction>(&v_)) return rf->text();
  return std::get<Cyclotomic>(v_).text();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.text(); }

namespace {

Cyclotomic eval_at_zeta(const LaurentPoly& p, int k) {
  Cyclotomic acc(k);
  for (const auto& [m, c] : p.terms()) {
    if (m.b != 0) throw MixedDomain("t still present when specializing q");
    Cyclotomic term = Cyclotomic::zeta_power(k, m.a);
    acc = acc + Cyclotomic(k, c) * term;
  }
  return acc;
}

}  // namespace

Scalar specialize(const Scalar& x, std::optional<int> q_root_order, TTarget t_target) {
  if (x.domain().kind == DomainKind::Cyclotomic) {
    if (q_root_order || t_target.kind != TTarget::Keep)
      throw MixedDomain("cannot specialize an already cyclotomic scalar");
    return x;
  }

  RationalFunction rf = x.rational_function();
  ScalarDomain dom = x.domain();
  switch (t_target.kind) {
    case TTarget::Keep:
      break;
    case TTarget::QInverse:
      rf = rf.substitute_t(1, -1);
      dom = ScalarDomain::q_only();
      break;
    case TTarget::MinusOne:
      rf = rf.substitute_t(-1, 0);
      dom = ScalarDomain::q_only();
      break;
    case TTarget::Rational:
      rf = rf.substitute_t(t_target.value, 0);
      dom = ScalarDomain::q_only();
      break;
  }

  if (!q_root_order) {
    if (dom.kind == DomainKind::GenericQT && rf.t_free() &&
        t_target.kind != TTarget::Keep)
      dom = ScalarDomain::q_only();
    return Scalar(dom, rf);
  }

  int k = *q_root_order;
  Cyclotomic den = eval_at_zeta(rf.den(), k);
  if (den.is_zero())
    throw DenominatorVanishes("denominator vanishes at zeta_" + std::to_string(k));
  Cyclotomic num = eval_at_zeta(rf.num(), k);
  return Scalar(ScalarDomain::cyclotomic(k), num / den);
}

std::complex<double> complex_embed(const Scalar& x, int root_choice) {
  return x.cyclotomic().embed(root_choice);
}

}  // namespace homrep
