#include "homrep/homreps.hpp"

#include <cassert>
#include <stdexcept>

#include "homrep/errors.hpp"

namespace homrep {

MatrixRep trivial_rep(int n) {
  if (n < 1) throw std::invalid_argument("trivial_rep needs n >= 1");
  ScalarDomain dom = ScalarDomain::q_only();
  std::vector<Matrix> gens(n - 1, Matrix::identity(1, dom));
  return MatrixRep::make(n, std::move(gens), dom, "trivial");
}

MatrixRep burau_unreduced(int n) {
  if (n < 2) throw std::invalid_argument("burau_unreduced needs n >= 2");
  ScalarDomain dom = ScalarDomain::q_only();
  Scalar one = Scalar::one(dom);
  Scalar q = Scalar::q(dom);
  std::vector<Matrix> gens;
  gens.reserve(n - 1);
  for (int g = 0; g < n - 1; ++g) {
    Matrix m = Matrix::identity(n, dom);
    m.at(g, g) = one - q;
    m.at(g, g + 1) = q;
    m.at(g + 1, g) = one;
    m.at(g + 1, g + 1) = Scalar::zero(dom);
    gens.push_back(std::move(m));
  }
  return MatrixRep::make(n, std::move(gens), dom, "burau-unreduced");
}

MatrixRep burau_reduced(int n) {
  if (n < 2) throw std::invalid_argument("burau_reduced needs n >= 2");
  MatrixRep big = burau_unreduced(n);
  ScalarDomain dom = big.dom;
  Scalar q = Scalar::q(dom);
  // Basis of ker(1, q, ..., q^{n-1}): b_i = q e_i - e_{i+1}.
  std::vector<Vec> basis;
  for (int i = 0; i < n - 1; ++i) {
    Vec b(n, Scalar::zero(dom));
    b[i] = q;
    b[i + 1] = -Scalar::one(dom);
    basis.push_back(std::move(b));
  }
  RowSpan span(n, dom);
  for (const auto& b : basis) span.add(b);
  std::vector<Matrix> gens;
  for (const auto& m : big.gens) {
    Matrix s(n - 1, n - 1, dom);
    for (int col = 0; col < n - 1; ++col) {
      auto coeffs = span.express(m * basis[col]);
      if (!coeffs) throw NotInvariant("reduced Burau subspace not invariant");
      for (int row = 0; row < n - 1; ++row) s.at(row, col) = (*coeffs)[row];
    }
    gens.push_back(std::move(s));
  }
  return MatrixRep::make(n, std::move(gens), dom, "burau-reduced",
                         "b_i = q*e_i - e_{i+1} in ker(1, q, ..., q^{n-1})");
}

size_t lk_pair_index(int n, int j, int k) {
  assert(1 <= j && j < k && k <= n);
  // Pairs (1,2), (1,3), ..., (1,n), (2,3), ... in lexicographic order.
  size_t idx = 0;
  for (int a = 1; a < j; ++a) idx += static_cast<size_t>(n - a);
  return idx + static_cast<size_t>(k - j) - 1;
}

MatrixRep lk_rep(int n) {
  if (n < 2) throw std::invalid_argument("lk_rep needs n >= 2");
  ScalarDomain dom = ScalarDomain::qt();
  Scalar one = Scalar::one(dom);
  Scalar q = Scalar::q(dom);
  Scalar t = Scalar::t(dom);
  size_t d = static_cast<size_t>(binomial(n, 2));
  std::vector<Matrix> gens;
  gens.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    Matrix m(d, d, dom);
    for (int j = 1; j < n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        size_t col = lk_pair_index(n, j, k);
        auto put = [&](int a, int b, const Scalar& c) {
          m.at(lk_pair_index(n, a, b), col) = m.at(lk_pair_index(n, a, b), col) + c;
        };
        if (i == j - 1) {
          // sigma_i v_{j,k} = q v_{i,k} + (q^2-q) v_{i,j} + (1-q) v_{j,k}
          put(i, k, q);
          put(i, j, q * q - q);
          put(j, k, one - q);
        } else if (i == j && j == k - 1) {
          // sigma_i v_{i,i+1} = -t q^2 v_{i,i+1}
          put(j, k, -t * q * q);
        } else if (i == j) {
          // sigma_i v_{j,k} = v_{j+1,k}
          put(j + 1, k, one);
        } else if (i == k - 1) {
          // sigma_i v_{j,k} = q v_{j,k-1} + (1-q) v_{j,k} - (q^2-q) t v_{k-1,k}
          put(j, k - 1, q);
          put(j, k, one - q);
          put(k - 1, k, -(q * q - q) * t);
        } else if (i == k) {
          // sigma_i v_{j,k} = v_{j,k+1}
          put(j, k + 1, one);
        } else {
          put(j, k, one);
        }
      }
    gens.push_back(std::move(m));
  }
  return MatrixRep::make(n, std::move(gens), dom, "lk",
                         "v_{j,k}, 1 <= j < k <= n, lexicographic");
}

Matrix basis_change_u_to_v(int n) {
  if (n < 2) throw std::invalid_argument("basis_change_u_to_v needs n >= 2");
  ScalarDomain dom = ScalarDomain::q_only();
  size_t d = static_cast<size_t>(binomial(n, 2));
  // Row index for u_{k,l}, 1 <= k <= l <= n-1, lexicographic.
  auto u_index = [&](int k, int l) {
    size_t idx = 0;
    for (int a = 1; a < k; ++a) idx += static_cast<size_t>(n - a);
    return idx + static_cast<size_t>(l - k);
  };
  Matrix c(d, d, dom);
  Scalar one = Scalar::one(dom);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      size_t col = lk_pair_index(n, i, j);
      for (int k = i; k < j; ++k)
        for (int l = k; l < j; ++l) c.at(u_index(k, l), col) = one;
    }
  return c;
}

MatrixRep specialize_rep(const MatrixRep& rep, std::optional<int> q_root_order,
                         TTarget t_target) {
  std::vector<Matrix> gens;
  gens.reserve(rep.gens.size());
  ScalarDomain new_dom = specialize(Scalar::one(rep.dom), q_root_order, t_target).domain();
  for (const auto& g : rep.gens) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < g.rows(); ++i) {
      Vec row;
      row.reserve(g.cols());
      for (size_t j = 0; j < g.cols(); ++j)
        row.push_back(specialize(g.at(i, j), q_root_order, t_target));
      rows.push_back(std::move(row));
    }
    gens.push_back(Matrix::from_rows(rows, g.cols(), new_dom));
  }
  std::string suffix;
  if (t_target.kind == TTarget::QInverse) suffix += "@t=q^-1";
  if (t_target.kind == TTarget::MinusOne) suffix += "@t=-1";
  if (t_target.kind == TTarget::Rational) suffix += "@t=" + t_target.value.get_str();
  if (q_root_order) suffix += "@q=zeta_" + std::to_string(*q_root_order);
  return MatrixRep::make(rep.n, std::move(gens), new_dom, rep.kind + suffix,
                         rep.basis_note);
}

long hmbm_dimension(int n, int m, long dim_v) {
  if (n < 1 || m < 0) throw std::invalid_argument("hmbm_dimension needs n >= 1, m >= 0");
  return binomial(n + m - 2, m) * dim_v;
}

}  // namespace homrep
