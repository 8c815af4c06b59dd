#ifndef HOMREP_HOMREPS_HPP
#define HOMREP_HOMREPS_HPP

#include <optional>

#include "homrep/rep.hpp"

namespace homrep {

/// sigma_i -> [1] on a one-dimensional space.
MatrixRep trivial_rep(int n);

/// n-dimensional representation where sigma_i acts as the identity outside
/// the 2x2 block [[1-q, q], [1, 0]] on coordinates (i, i+1).  Generators
/// satisfy (M - 1)(M + q) = 0 and fix the all-ones column.
MatrixRep burau_unreduced(int n);

/// Restriction of the unreduced representation to the invariant subspace
/// {x : sum q^{i-1} x_i = 0}, of dimension n-1.  The basis in force is
/// b_i = q e_i - e_{i+1} and is recorded in the representation's metadata;
/// everything asserted downstream is basis-independent.
MatrixRep burau_reduced(int n);

/// Lawrence-Krammer representation on the C(n,2)-dimensional space with
/// basis v_{j,k}, 1 <= j < k <= n in lexicographic order, over Q(q,t).
MatrixRep lk_rep(int n);

/// Index of the pair (j,k), 1 <= j < k <= n, in the lexicographic basis
/// order used by lk_rep.
size_t lk_pair_index(int n, int j, int k);

/// The C(n,2) x C(n,2) integer matrix whose column (i,j) expresses v_{i,j}
/// in the u_{k,l} basis (1 <= k <= l <= n-1, lexicographic):
/// v_{i,j} = sum over i <= k <= l < j of u_{k,l}.
Matrix basis_change_u_to_v(int n);

/// Entry-wise specialization of the generators; the braid relations are
/// re-verified on the result.  Throws DenominatorVanishes when some entry
/// has a pole at the target.
MatrixRep specialize_rep(const MatrixRep& rep, std::optional<int> q_root_order,
                         TTarget t_target);

/// Rank of the middle Borel-Moore homology as a multiple of dim V: the
/// composition count C(n+m-2, m) times dimV.
long hmbm_dimension(int n, int m, long dim_v);

}  // namespace homrep

#endif
