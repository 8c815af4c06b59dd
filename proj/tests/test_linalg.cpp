#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homrep/errors.hpp"
#include "homrep/linalg.hpp"

using namespace homrep;

namespace {

const ScalarDomain QQ = ScalarDomain::q_only();
const ScalarDomain QT = ScalarDomain::qt();

Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows, ScalarDomain dom) {
  std::vector<Vec> rs;
  size_t cols = rows.begin()->size();
  for (const auto& r : rows) rs.emplace_back(r);
  return Matrix::from_rows(rs, cols, dom);
}

Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, ScalarDomain dom) {
  std::uniform_int_distribution<int> exp_dist(-1, 2);
  std::uniform_int_distribution<int> coef_dist(-3, 3);
  std::uniform_int_distribution<int> fill(0, 3);
  Matrix m(r, c, dom);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      if (fill(rng) == 0) continue;  // keep it sparse
      if (dom.kind == DomainKind::Cyclotomic) {
        m.at(i, j) = Scalar::from_int(dom, coef_dist(rng)) +
                     Scalar::q(dom, 1) * Scalar::from_int(dom, coef_dist(rng));
      } else {
        LaurentPoly p;
        p.add_term(Mono{exp_dist(rng), 0}, coef_dist(rng));
        p.add_term(Mono{exp_dist(rng), 0}, coef_dist(rng));
        m.at(i, j) = Scalar(dom, RationalFunction(p));
      }
    }
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  SUBCASE("identity is its own rref") {
    Matrix i3 = Matrix::identity(3, QQ);
    auto rr = rref(i3);
    CHECK(rr.rank == 3);
    CHECK(rr.reduced == i3);
  }
  SUBCASE("zero matrix") {
    Matrix z(2, 3, QQ);
    auto rr = rref(z);
    CHECK(rr.rank == 0);
    CHECK(rr.reduced == z);
  }
  SUBCASE("proportional rows have rank 1") {
    Matrix m = mat({{q, q * q}, {one, q}}, QQ);
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.reduced.at(0, 0) == one);
    CHECK(rr.reduced.at(0, 1) == q);
  }
}

TEST_CASE("nullspace basics") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  CHECK(nullspace(Matrix::identity(4, QQ)).dim() == 0);
  CHECK(nullspace(Matrix(2, 2, QQ)).dim() == 2);
  Matrix m = mat({{one, q}}, QQ);
  Subspace ns = nullspace(m);
  CHECK(ns.dim() == 1);
  Subspace expected = Subspace::from_vectors({Vec{-q, one}}, 2, QQ);
  CHECK(ns == expected);
}

TEST_CASE("rank-nullity over all domains") {
  std::mt19937 rng(2024);
  for (ScalarDomain dom : {QQ, QT, ScalarDomain::cyclotomic(5)}) {
    for (int iter = 0; iter < 20; ++iter) {
      Matrix m = random_matrix(rng, 4, 5, dom);
      auto rr = rref(m);
      Subspace ns = nullspace(m);
      CHECK(rr.rank + ns.dim() == m.cols());
      // Every nullspace basis vector is annihilated exactly.
      for (size_t i = 0; i < ns.dim(); ++i) {
        Vec v = ns.basis().row(i);
        Vec mv = m * v;
        for (const auto& x : mv) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("rref is canonical: same row space, same rref") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 10; ++iter) {
    Matrix m = random_matrix(rng, 3, 4, QQ);
    // Shuffle rows and add a multiple of one row to another.
    std::vector<Vec> rows{m.row(1), m.row(2), m.row(0)};
    for (size_t j = 0; j < 4; ++j)
      rows[0][j] = rows[0][j] + Scalar::q(QQ) * rows[1][j];
    Matrix m2 = Matrix::from_rows(rows, 4, QQ);
    CHECK(rref(m).reduced == rref(m2).reduced);
  }
}

TEST_CASE("spin") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  SUBCASE("full space stays full") {
    Subspace s = spin(Subspace::full(3, QQ), {Matrix::identity(3, QQ)});
    CHECK(s == Subspace::full(3, QQ));
  }
  SUBCASE("common eigenvector spans a line") {
    Matrix d = mat({{q, Scalar::zero(QQ)}, {Scalar::zero(QQ), -one}}, QQ);
    Subspace seed = Subspace::from_vectors({Vec{one, Scalar::zero(QQ)}}, 2, QQ);
    Subspace s = spin(seed, {d});
    CHECK(s.dim() == 1);
    CHECK(s == seed);
  }
  SUBCASE("spin output is closed under the generators") {
    std::mt19937 rng(99);
    Matrix g1 = random_matrix(rng, 4, 4, QQ);
    Matrix g2 = random_matrix(rng, 4, 4, QQ);
    Subspace seed = Subspace::from_vectors(
        {Vec{Scalar::one(QQ), Scalar::q(QQ), Scalar::zero(QQ), Scalar::zero(QQ)}}, 4, QQ);
    Subspace s = spin(seed, {g1, g2});
    for (size_t i = 0; i < s.dim(); ++i) {
      CHECK(s.contains(g1 * s.basis().row(i)));
      CHECK(s.contains(g2 * s.basis().row(i)));
    }
    CHECK(s.contains(seed));
  }
}

TEST_CASE("intertwiner space") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  Scalar zero = Scalar::zero(QQ);
  SUBCASE("diagonal with distinct eigenvalues: diagonal intertwiners") {
    Matrix d = mat({{q, zero}, {zero, -one}}, QQ);
    auto basis = intertwiner_space({d}, {d});
    CHECK(basis.size() == 2);
    for (const auto& x : basis) CHECK((x * d == d * x));
  }
  SUBCASE("no intertwiner between distinct characters") {
    Matrix a = mat({{q}}, QQ);
    Matrix b = mat({{-one}}, QQ);
    CHECK(intertwiner_space({a}, {b}).empty());
  }
  SUBCASE("intertwiner equations re-checked by substitution") {
    std::mt19937 rng(7);
    Matrix g = random_matrix(rng, 3, 3, QQ);
    auto basis = intertwiner_space({g}, {g});
    CHECK(basis.size() >= 1);
    for (const auto& x : basis) CHECK((x * g == g * x));
  }
}

TEST_CASE("restrict and quotient") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  Scalar zero = Scalar::zero(QQ);
  Matrix g = mat({{q, one, zero}, {zero, -one, one}, {zero, zero, q}}, QQ);

  SUBCASE("full and zero subspaces") {
    auto full = restrict_quotient_matrices({g}, Subspace::full(3, QQ));
    CHECK(full.sub[0] == g);
    CHECK(full.quotient[0].rows() == 0);
    auto zero_case = restrict_quotient_matrices({g}, Subspace::zero(3, QQ));
    CHECK(zero_case.sub[0].rows() == 0);
    CHECK(zero_case.quotient[0] == g);
  }
  SUBCASE("invariant line") {
    Subspace u = Subspace::from_vectors({Vec{one, zero, zero}}, 3, QQ);
    auto sq = restrict_quotient_matrices({g}, u);
    CHECK(sq.sub[0].rows() == 1);
    CHECK(sq.sub[0].at(0, 0) == q);
    CHECK(sq.quotient[0].rows() == 2);
    // Block-triangular consistency: g * C = C * [[S, *], [0, Q]].
    Matrix c = sq.basis_change;
    auto cinv = c.inverse();
    REQUIRE(cinv.has_value());
    Matrix t = (*cinv) * g * c;
    CHECK(t.at(1, 0).is_zero());
    CHECK(t.at(2, 0).is_zero());
  }
  SUBCASE("non-invariant subspace is rejected") {
    Subspace u = Subspace::from_vectors({Vec{zero, zero, one}}, 3, QQ);
    CHECK_THROWS_AS(restrict_quotient_matrices({g}, u), NotInvariant);
  }
}

TEST_CASE("minimal polynomial") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  Scalar zero = Scalar::zero(QQ);
  SUBCASE("identity") {
    auto mp = minimal_polynomial(Matrix::identity(3, QQ));
    CHECK(mp.size() == 2);
    CHECK(mp[0] == -one);
    CHECK(mp[1] == one);
  }
  SUBCASE("nilpotent Jordan block") {
    Matrix n = mat({{zero, one}, {zero, zero}}, QQ);
    auto mp = minimal_polynomial(n);
    CHECK(mp.size() == 3);
    CHECK(mp[0].is_zero());
    CHECK(mp[1].is_zero());
    CHECK(mp[2] == one);
  }
  SUBCASE("diagonal with eigenvalues q and -1") {
    Matrix d = mat({{q, zero}, {zero, -one}}, QQ);
    auto mp = minimal_polynomial(d);
    // (x - q)(x + 1) = x^2 + (1-q)x - q
    CHECK(mp.size() == 3);
    CHECK(mp[0] == -q);
    CHECK(mp[1] == one - q);
    CHECK(mp[2] == one);
  }
}

TEST_CASE("inverse and determinant") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  Matrix m = mat({{one, q}, {q, one}}, QQ);
  CHECK(m.det() == one - q * q);
  auto mi = m.inverse();
  REQUIRE(mi.has_value());
  CHECK(((*mi) * m).is_identity());
  Matrix sing = mat({{one, q}, {q, q * q}}, QQ);
  CHECK(sing.det().is_zero());
  CHECK(!sing.inverse().has_value());

  std::mt19937 rng(31);
  for (int i = 0; i < 10; ++i) {
    Matrix r = random_matrix(rng, 4, 4, QQ);
    Scalar d = r.det();
    auto inv = r.inverse();
    CHECK(d.is_zero() == !inv.has_value());
    if (inv) CHECK(((*inv) * r).is_identity());
  }
}

TEST_CASE("subspace equality via unique rref") {
  Scalar one = Scalar::one(QQ), q = Scalar::q(QQ);
  Subspace a = Subspace::from_vectors({Vec{one, q}, Vec{q, q * q}}, 2, QQ);
  Subspace b = Subspace::from_vectors({Vec{q + q, q * q + q * q}}, 2, QQ);
  CHECK(a.dim() == 1);
  CHECK(a == b);
  CHECK(a.contains(Vec{-q, -q * q}));
  CHECK(!a.contains(Vec{one, one}));
}
