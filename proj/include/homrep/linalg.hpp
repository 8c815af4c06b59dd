#ifndef HOMREP_LINALG_HPP
#define HOMREP_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "homrep/scalar.hpp"

namespace homrep {

using Vec = std::vector<Scalar>;

/// Dense rectangular matrix over a single scalar domain, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), dom_(ScalarDomain::q_only()) {}
  Matrix(size_t rows, size_t cols, ScalarDomain dom);
  static Matrix identity(size_t n, ScalarDomain dom);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols, ScalarDomain dom);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const ScalarDomain& domain() const { return dom_; }

  const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  /// Entry-wise bar involution.
  Matrix bar_entries() const;
  /// bar-transpose: conjugate transpose with respect to the involution.
  Matrix bar_transpose() const { return bar_entries().transpose(); }

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  std::optional<Matrix> inverse() const;
  Scalar det() const;

  /// Canonical text forms, row by row.
  std::vector<std::vector<std::string>> text_rows() const;

 private:
  size_t rows_, cols_;
  ScalarDomain dom_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

/// Reduced row-echelon form with exact arithmetic.  Over the generic
/// (polynomial) domains the forward pass uses fraction-free Bareiss
/// elimination with a sparsest-pivot heuristic; over cyclotomic fields it
/// uses plain exact division.
RrefResult rref(const Matrix& m);

/// Subspace of a coordinate space, stored as the rows of an RREF matrix so
/// equality of subspaces is entry-wise comparison.
class Subspace {
 public:
  Subspace(size_t ambient, ScalarDomain dom);
  static Subspace zero(size_t ambient, ScalarDomain dom) { return Subspace(ambient, dom); }
  static Subspace full(size_t ambient, ScalarDomain dom);
  static Subspace from_vectors(const std::vector<Vec>& vecs, size_t ambient,
                               ScalarDomain dom);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const ScalarDomain& domain() const { return dom_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  size_t ambient_;
  ScalarDomain dom_;
  Matrix basis_;
};

/// Basis of {x : Mx = 0}.
Subspace nullspace(const Matrix& m);

/// Smallest subspace containing the seeds and closed under every generator.
Subspace spin(const Subspace& seeds, const std::vector<Matrix>& generators);

/// Basis of {X : X A_i = B_i X for all i}; empty when only X = 0 works.
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& gens_a,
                                      const std::vector<Matrix>& gens_b);

struct SubQuotient {
  std::vector<Matrix> sub;
  std::vector<Matrix> quotient;
  Matrix basis_change;  // columns: subspace basis then complement
};

/// Induced actions on an invariant subspace and its quotient.  Throws
/// NotInvariant when some generator does not preserve the subspace.
SubQuotient restrict_quotient_matrices(const std::vector<Matrix>& gens,
                                       const Subspace& u);

/// Monic minimal polynomial of a square matrix, coefficients by ascending
/// degree.
std::vector<Scalar> minimal_polynomial(const Matrix& m);

/// Incremental row-space tracker.  Vectors added to the span are kept in
/// reduced form together with their expression over the original inserts,
/// which is what module-spinning and change-of-basis solves need.
class RowSpan {
 public:
  RowSpan(size_t ambient, ScalarDomain dom);

  /// Returns true when v enlarged the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  /// Coefficients over the previously added vectors (in insertion order of
  /// the ones that were kept), or nullopt when v is outside the span.
  std::optional<Vec> express(const Vec& v) const;
  size_t rank() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }

  std::vector<Vec> reduced_rows() const;

 private:
  struct Row {
    Vec v;       // reduced vector, leading entry 1
    size_t lead;  // leading column
    Vec combo;   // expression of v over inserted originals
  };
  std::optional<Vec> reduce(Vec v, Vec combo, bool track) const;

  size_t ambient_;
  ScalarDomain dom_;
  std::vector<Row> rows_;
  size_t inserted_ = 0;
};

}  // namespace homrep

#endif
