#ifndef HOMREP_REP_HPP
#define HOMREP_REP_HPP

#include <string>
#include <vector>

#include "homrep/braid.hpp"
#include "homrep/linalg.hpp"
#include "homrep/report.hpp"

namespace homrep {

/// Matrix representation of B_n (or of H_n after conversion): one invertible
/// matrix per generator, with the inverses cached at construction.
struct MatrixRep {
  int n = 1;
  ScalarDomain dom = ScalarDomain::q_only();
  std::vector<Matrix> gens;      // generator i-1 acts for sigma_i (or T_i)
  std::vector<Matrix> gen_invs;
  std::string kind = "derived";  // trivial | burau-unreduced | burau-reduced | lk | specht | derived
  std::string basis_note;        // records the basis convention in force

  size_t dim() const { return gens.empty() ? (n == 1 ? 1 : 0) : gens[0].rows(); }
  /// 1-based generator access.
  const Matrix& gen(int i) const { return gens[i - 1]; }
  const Matrix& gen_inv(int i) const { return gen_invs[i - 1]; }

  /// Builds the representation, caching inverses.  When validate is set the
  /// braid relations are checked and a failure throws NotInvariant.
  static MatrixRep make(int n, std::vector<Matrix> gens, ScalarDomain dom,
                        std::string kind, std::string basis_note = "",
                        bool validate = true);
};

/// Ordered product of generator matrices; negative letters use the cached
/// inverses.
Matrix evaluate_braid_word(const MatrixRep& rep, const BraidWord& word);

/// Exact check of far commutation, the braid relation, and generator
/// invertibility; failures are named in the report, never thrown.
VerificationReport braid_relations_check(const MatrixRep& rep);

/// Checks (M_i - a)(M_i - b) = 0 for every generator matrix.
VerificationReport quadratic_check(const MatrixRep& rep, const Scalar& root_a,
                                   const Scalar& root_b);

/// T_i := q * sigma_i^{-1}.  Requires the (1, -q) quadratic; the returned
/// matrices satisfy (T_i + 1)(T_i - q) = 0 and the braid relations.
MatrixRep braid_to_hecke(const MatrixRep& rep);

/// tau_i := -T_i^{-1}, turning a Hecke representation into a braid
/// representation satisfying (tau_i - 1)(q tau_i + 1) = 0.
MatrixRep hecke_to_braid_input(const MatrixRep& hecke_rep);

/// sigma_i := q * T_i^{-1}, the inverse of braid_to_hecke.  Used to compare
/// Hecke modules with braid-side representations.
MatrixRep braid_from_hecke(const MatrixRep& hecke_rep);

}  // namespace homrep

#endif
