#include "homrep/rep.hpp"

#include <cstdlib>
#include <stdexcept>

#include "homrep/errors.hpp"

namespace homrep {

MatrixRep MatrixRep::make(int n, std::vector<Matrix> gens, ScalarDomain dom,
                          std::string kind, std::string basis_note, bool validate) {
  MatrixRep rep;
  rep.n = n;
  rep.dom = dom;
  rep.gens = std::move(gens);
  rep.kind = std::move(kind);
  rep.basis_note = std::move(basis_note);
  if (static_cast<int>(rep.gens.size()) != n - 1)
    throw std::invalid_argument("need n-1 generator matrices");
  rep.gen_invs.reserve(rep.gens.size());
  for (const auto& g : rep.gens) {
    auto inv = g.inverse();
    if (!inv) throw SingularMatrix("generator matrix not invertible");
    rep.gen_invs.push_back(std::move(*inv));
  }
  if (validate) {
    VerificationReport r = braid_relations_check(rep);
    if (!r.all_passed())
      throw NotInvariant("braid relations fail for representation " + rep.kind);
  }
  return rep;
}

Matrix evaluate_braid_word(const MatrixRep& rep, const BraidWord& word) {
  if (word.n() != rep.n) throw std::invalid_argument("braid word strand count mismatch");
  Matrix acc = Matrix::identity(rep.dim(), rep.dom);
  for (int letter : word.letters()) {
    int i = std::abs(letter);
    acc = acc * (letter > 0 ? rep.gen(i) : rep.gen_inv(i));
  }
  return acc;
}

VerificationReport braid_relations_check(const MatrixRep& rep) {
  VerificationReport report;
  report.command = "braid_relations_check";
  report.param("kind", rep.kind);
  report.param("n", std::to_string(rep.n));
  int m = rep.n - 1;
  for (int i = 1; i <= m; ++i) {
    bool inv_ok = (rep.gen(i) * rep.gen_inv(i)).is_identity();
    report.add("generator " + std::to_string(i) + " invertible", inv_ok, "invertible",
               inv_ok ? "invertible" : "singular", "plumbing");
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j) {
      bool ok = rep.gen(i) * rep.gen(j) == rep.gen(j) * rep.gen(i);
      report.add("far commutation s" + std::to_string(i) + ",s" + std::to_string(j), ok,
                 "equal", ok ? "equal" : "differ",
                 "sigma_i sigma_j = sigma_j sigma_i for |i-j| > 1");
    }
  for (int i = 1; i + 1 <= m; ++i) {
    bool ok = rep.gen(i) * rep.gen(i + 1) * rep.gen(i) ==
              rep.gen(i + 1) * rep.gen(i) * rep.gen(i + 1);
    report.add("braid relation s" + std::to_string(i) + ",s" + std::to_string(i + 1), ok,
               "equal", ok ? "equal" : "differ",
               "sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j for |i-j| = 1");
  }
  return report;
}

VerificationReport quadratic_check(const MatrixRep& rep, const Scalar& root_a,
                                   const Scalar& root_b) {
  VerificationReport report;
  report.command = "quadratic_check";
  report.param("kind", rep.kind);
  report.param("n", std::to_string(rep.n));
  report.param("root_a", root_a.text());
  report.param("root_b", root_b.text());
  size_t d = rep.dim();
  Matrix id = Matrix::identity(d, rep.dom);
  for (int i = 1; i <= rep.n - 1; ++i) {
    Matrix lhs = (rep.gen(i) - id.scaled(root_a)) * (rep.gen(i) - id.scaled(root_b));
    bool ok = lhs.is_zero();
    report.add("generator " + std::to_string(i) + " quadratic", ok, "0",
               ok ? "0" : "nonzero",
               "(sigma_i - a)(sigma_i - b) = 0 with roots {" + root_a.text() + ", " +
                   root_b.text() + "}");
  }
  return report;
}

MatrixRep braid_to_hecke(const MatrixRep& rep) {
  Scalar one = Scalar::one(rep.dom);
  Scalar q = Scalar::q(rep.dom);
  VerificationReport quad = quadratic_check(rep, one, -q);
  if (!quad.all_passed())
    throw QuadraticRelationFails("representation does not satisfy (s-1)(s+q) = 0");
  std::vector<Matrix> tgens;
  tgens.reserve(rep.gens.size());
  for (const auto& inv : rep.gen_invs) tgens.push_back(inv.scaled(q));
  return MatrixRep::make(rep.n, std::move(tgens), rep.dom, "hecke(" + rep.kind + ")",
                         rep.basis_note);
}

MatrixRep hecke_to_braid_input(const MatrixRep& hecke_rep) {
  std::vector<Matrix> taus;
  taus.reserve(hecke_rep.gens.size());
  Scalar minus_one = -Scalar::one(hecke_rep.dom);
  for (const auto& inv : hecke_rep.gen_invs) taus.push_back(inv.scaled(minus_one));
  return MatrixRep::make(hecke_rep.n, std::move(taus), hecke_rep.dom,
                         "braid(" + hecke_rep.kind + ")", hecke_rep.basis_note);
}

MatrixRep braid_from_hecke(const MatrixRep& hecke_rep) {
  std::vector<Matrix> sigmas;
  sigmas.reserve(hecke_rep.gens.size());
  Scalar q = Scalar::q(hecke_rep.dom);
  for (const auto& inv : hecke_rep.gen_invs) sigmas.push_back(inv.scaled(q));
  return MatrixRep::make(hecke_rep.n, std::move(sigmas), hecke_rep.dom,
                         "sigma(" + hecke_rep.kind + ")", hecke_rep.basis_note);
}

}  // namespace homrep
