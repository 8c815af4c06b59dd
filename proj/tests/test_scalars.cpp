#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homrep/errors.hpp"
#include "homrep/scalar.hpp"

using namespace homrep;

namespace {

const ScalarDomain QT = ScalarDomain::qt();
const ScalarDomain QQ = ScalarDomain::q_only();

Scalar rnd_scalar(std::mt19937& rng, ScalarDomain dom, bool allow_den = true) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> exp_dist(-2, 2);
  std::uniform_int_distribution<int> coef_dist(-4, 4);
  auto rnd_poly = [&](bool nonzero) {
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      int b = dom.kind == DomainKind::GenericQT ? exp_dist(rng) : 0;
      p.add_term(Mono{exp_dist(rng), b}, mpq_class(coef_dist(rng)));
    }
    if (nonzero && p.is_zero()) p.add_term(Mono{0, 0}, 1);
    return p;
  };
  if (dom.kind == DomainKind::Cyclotomic) {
    Cyclotomic c(dom.order);
    Scalar acc = Scalar::zero(dom);
    int deg = c.degree();
    for (int i = 0; i < deg; ++i) {
      acc = acc + Scalar(dom, Cyclotomic::zeta_power(dom.order, i)) *
                      Scalar::from_int(dom, coef_dist(rng));
    }
    return acc;
  }
  LaurentPoly num = rnd_poly(false);
  LaurentPoly den = allow_den ? rnd_poly(true) : LaurentPoly::one();
  return Scalar(dom, RationalFunction(num, den));
}

}  // namespace

TEST_CASE("ring identities in Q(q)") {
  Scalar q = Scalar::q(QQ);
  Scalar one = Scalar::one(QQ);
  CHECK((q - one) * (q + one) == Scalar::q(QQ, 2) - one);
  CHECK((Scalar::q(QQ, 2) - one) / (q - one) == q + one);
}

TEST_CASE("cyclotomic reduction: zeta^2 + zeta = -1 in Q(zeta_3)") {
  ScalarDomain d3 = ScalarDomain::cyclotomic(3);
  Scalar z = Scalar::q(d3);
  CHECK(z * z + z == Scalar::from_int(d3, -1));
}

TEST_CASE("bar involution basics") {
  CHECK(Scalar::q(QQ).bar() == Scalar::q(QQ, -1));
  CHECK(Scalar::from_int(QQ, 3).bar() == Scalar::from_int(QQ, 3));
  Scalar x = Scalar::q(QT) + Scalar::t(QT, -1);
  CHECK(x.bar() == Scalar::q(QT, -1) + Scalar::t(QT));
}

TEST_CASE("bar is a self-inverse field homomorphism") {
  std::mt19937 rng(12345);
  for (ScalarDomain dom : {QT, QQ, ScalarDomain::cyclotomic(5), ScalarDomain::cyclotomic(8)}) {
    for (int i = 0; i < 250; ++i) {
      Scalar x = rnd_scalar(rng, dom);
      Scalar y = rnd_scalar(rng, dom);
      CHECK(x.bar().bar() == x);
      CHECK((x * y).bar() == x.bar() * y.bar());
      CHECK((x + y).bar() == x.bar() + y.bar());
    }
  }
}

TEST_CASE("q qbar = 1") {
  CHECK(Scalar::q(QT) * Scalar::q(QT).bar() == Scalar::one(QT));
  ScalarDomain d7 = ScalarDomain::cyclotomic(7);
  CHECK(Scalar::q(d7) * Scalar::q(d7).bar() == Scalar::one(d7));
}

TEST_CASE("canonical form: same value from different expression routes") {
  std::mt19937 rng(777);
  for (int i = 0; i < 300; ++i) {
    Scalar a = rnd_scalar(rng, QT);
    Scalar b = rnd_scalar(rng, QT);
    Scalar c = rnd_scalar(rng, QT);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - b) * (a + b) == a * a - b * b);
    if (!c.is_zero()) CHECK(a * c / c == a);
  }
}

TEST_CASE("specialization at roots of unity") {
  Scalar q = Scalar::q(QQ);
  SUBCASE("q + q^-1 at zeta_4 = 0") {
    Scalar v = specialize(q + q.inv(), 4, TTarget::keep());
    CHECK(v.is_zero());
  }
  SUBCASE("1 + q + q^2 at zeta_3 = 0") {
    Scalar v = specialize(Scalar::one(QQ) + q + q * q, 3, TTarget::keep());
    CHECK(v.is_zero());
  }
  SUBCASE("1/(q-1): finite at zeta_3, pole at q = 1") {
    Scalar x = (q - Scalar::one(QQ)).inv();
    Scalar at3 = specialize(x, 3, TTarget::keep());
    CHECK(!at3.is_zero());
    CHECK_THROWS_AS(specialize(x, 1, TTarget::keep()), DenominatorVanishes);
  }
}

TEST_CASE("specialize is a ring homomorphism where defined") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    Scalar x = rnd_scalar(rng, QQ, false);  // polynomial entries: always finite
    Scalar y = rnd_scalar(rng, QQ, false);
    for (int k : {2, 3, 5}) {
      Scalar px = specialize(x, k, TTarget::keep());
      Scalar py = specialize(y, k, TTarget::keep());
      CHECK(specialize(x * y, k, TTarget::keep()) == px * py);
      CHECK(specialize(x + y, k, TTarget::keep()) == px + py);
    }
  }
}

TEST_CASE("t substitutions") {
  Scalar x = Scalar::q(QT) * Scalar::t(QT) + Scalar::t(QT, -2);
  Scalar at_qinv = specialize(x, std::nullopt, TTarget::q_inverse());
  CHECK(at_qinv.domain() == QQ);
  CHECK(at_qinv == Scalar::one(QQ) + Scalar::q(QQ, 2));
  Scalar at_m1 = specialize(x, std::nullopt, TTarget::minus_one());
  CHECK(at_m1 == Scalar::one(QQ) - Scalar::q(QQ));
}

TEST_CASE("zeta_k^k = 1 and Phi_k(zeta_k) = 0 for k <= 12") {
  for (int k = 1; k <= 12; ++k) {
    Cyclotomic z = Cyclotomic::zeta(k);
    CHECK(z.pow(k).is_one());
    const auto& phi = cyclotomic_polynomial(k);
    Cyclotomic acc(k);
    for (size_t i = 0; i < phi.size(); ++i)
      acc = acc + Cyclotomic(k, mpq_class(phi[i])) * z.pow(static_cast<long>(i));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("complex embedding") {
  auto close = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) < 1e-12;
  };
  CHECK(close(Cyclotomic::zeta(4).embed(1), {0.0, 1.0}));
  CHECK(close(Cyclotomic::zeta(2).embed(1), {-1.0, 0.0}));
  Cyclotomic s = Cyclotomic::zeta(3) + Cyclotomic::zeta(3).pow(2);
  CHECK(close(s.embed(1), {-1.0, 0.0}));
  CHECK_THROWS(Cyclotomic::zeta(4).embed(2));
}

TEST_CASE("canonical text form") {
  Scalar x = Scalar::from_int(QT, -1) + Scalar::q(QT, -1) * Scalar::t(QT);
  CHECK(x.text() == "-1 + q^-1*t");
  CHECK((Scalar::q(QQ, 2) - Scalar::one(QQ)).text() == "q^2 - 1");
  CHECK(Scalar::zero(QQ).text() == "0");
  Scalar half = Scalar::from_rational(QQ, mpq_class(1, 2));
  CHECK((half * Scalar::q(QQ)).text() == "1/2*q");
  Scalar y = (Scalar::q(QQ, 2) - Scalar::one(QQ)) / (Scalar::q(QQ) + Scalar::from_int(QQ, 2));
  CHECK(y.text() == "(q^2 - 1)/(q + 2)");
}

TEST_CASE("mixed-domain operations are rejected") {
  CHECK_THROWS_AS(Scalar::q(QQ) + Scalar::q(QT), MixedDomain);
  CHECK_THROWS_AS(Scalar::t(QQ), MixedDomain);
  CHECK_THROWS_AS(Scalar::q(QQ) / Scalar::zero(QQ), DivisionByZero);
}
