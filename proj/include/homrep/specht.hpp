#ifndef HOMREP_SPECHT_HPP
#define HOMREP_SPECHT_HPP

#include <optional>

#include "homrep/hecke.hpp"
#include "homrep/rep.hpp"

namespace homrep {

/// Standard Young tableau: rows and columns strictly increasing, entries
/// 1..n filling the shape.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> entries;

  /// The permutation carrying the row-reading superstandard tableau to this
  /// one: i-1 maps to (entry in the box where the superstandard tableau
  /// holds i) - 1.
  Perm to_perm() const;
  std::string text() const;
};

std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Dimension by the hook length formula.
long hook_dim(const Partition& shape);

/// Specht module S^lambda realized as a right ideal of H_n: the generator
/// z_lambda = x_lambda T_{w_lambda} y_{lambda'} is spun under right
/// multiplication, with the standard basis z_lambda T_{d(t)} for t running
/// over the standard tableaux.
///
/// h in H_n acts through the inversion antiautomorphism (the module is a
/// right ideal viewed as a left module), so the recorded T_i matrices form
/// an honest representation satisfying the Hecke relations.
///
/// Convention calibration (dual/conjugate choices exist in the literature):
/// with x = sum T_w over the row stabilizer and
/// y = sum (-q)^{-length(w)} T_w over the column stabilizer,
///   S^(n)     is T_i -> q,
///   S^(1^n)   is T_i -> -1,
///   S^(n-1,1) matches the Hecke form of reduced Burau (tested by
///             intertwiners at n = 3, 4).
struct SpechtModule {
  Partition lambda;
  int n = 0;
  ScalarDomain dom = ScalarDomain::q_only();
  std::vector<StandardTableau> tableaux;
  std::vector<HeckeElement> basis;  // z_lambda T_{d(t)}, in tableau order
  MatrixRep rep;                    // T_i action matrices

  size_t dim() const { return basis.size(); }
};

/// Builds S^lambda over the given domain (generic q or a cyclotomic
/// specialization).  Throws DimensionMismatch if the standard basis fails
/// to be independent, the span fails to close, or the dimension disagrees
/// with the hook formula; that signals a convention transcription error and
/// is never patched silently.
SpechtModule specht_rep(const Partition& lambda, int n, ScalarDomain dom);

/// Gram matrix of the contravariant bilinear form on the standard basis:
/// the trace pairing tau(a b*) divided by the q-factorial product of the
/// row stabilizer (the exactness of that division is asserted).  Satisfies
/// <x T_i, y> = <x, y T_i>.
Matrix dj_form(const SpechtModule& s);

struct DLambda {
  Partition lambda;
  std::optional<int> q_root_order;
  MatrixRep module;                          // S^lambda at the target
  Matrix gram;                               // specialized Gram matrix
  Subspace radical{0, ScalarDomain::q_only()};  // nullspace of the Gram matrix
  MatrixRep quotient;                        // S^lambda / radical (possibly 0-dim)
  long dim() const { return static_cast<long>(quotient.dim()); }
};

/// D_lambda at generic q (order not set) or at q = zeta_k.
DLambda d_lambda(const Partition& lambda, std::optional<int> q_root_order);

/// e-regularity: no part value repeated e or more times; always true at
/// e = infinity (empty optional).  Calibrated against brute-force
/// nonzeroness of D_lambda in the tests.
bool nonzero_classification(const Partition& lambda, std::optional<int> e);

/// lambda = (n - |mu|, mu_1, mu_2, ...); throws NotAPartition when
/// n - |mu| < mu_1.
Partition lambda_from_mu(const Partition& mu, int n);

}  // namespace homrep

#endif
