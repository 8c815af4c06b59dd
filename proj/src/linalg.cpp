#include "homrep/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "homrep/errors.hpp"

namespace homrep {

namespace {

// Sparsity weight used by the pivot heuristic: total stored terms.
size_t term_weight(const Scalar& s) {
  if (s.domain().kind == DomainKind::Cyclotomic) {
    size_t n = 0;
    for (const auto& c : s.cyclotomic().coeffs())
      if (c != 0) ++n;
    return n;
  }
  const RationalFunction& rf = s.rational_function();
  return rf.num().term_count() + rf.den().term_count();
}

bool is_polynomial(const Scalar& s) {
  return s.domain().kind == DomainKind::Cyclotomic ||
         s.rational_function().is_polynomial();
}

// Exact division of polynomial scalars (both with denominator 1).
Scalar poly_div_exact(const Scalar& a, const Scalar& b) {
  if (a.domain().kind == DomainKind::Cyclotomic) return a / b;
  auto quo = a.rational_function().num().divided_exactly_by(b.rational_function().num());
  assert(quo.has_value());
  return Scalar(a.domain(), RationalFunction(std::move(*quo)));
}

// Scale a row so every entry is a genuine polynomial.
void clear_denominators(std::vector<Scalar>& row, ScalarDomain dom) {
  if (dom.kind == DomainKind::Cyclotomic) return;
  LaurentPoly common = LaurentPoly::one();
  for (const auto& s : row) {
    const LaurentPoly& d = s.rational_function().den();
    if (d.is_one()) continue;
    LaurentPoly g = LaurentPoly::gcd(common, d);
    auto q = d.divided_exactly_by(g);
    assert(q.has_value());
    common = common * (*q);
  }
  if (common.is_one()) return;
  Scalar factor(dom, RationalFunction(common));
  for (auto& s : row) s = s * factor;
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols, ScalarDomain dom)
    : rows_(rows), cols_(cols), dom_(dom), e_(rows * cols, Scalar::zero(dom)) {}

Matrix Matrix::identity(size_t n, ScalarDomain dom) {
  Matrix m(n, n, dom);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(dom);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols, ScalarDomain dom) {
  Matrix m(rows.size(), cols, dom);
  for (size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec r;
  r.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

Vec Matrix::col(size_t j) const {
  Vec c;
  c.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, dom_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(rows_, Scalar::zero(dom_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] = r[i] + at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x = x * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, dom_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::bar_entries() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = x.bar();
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  size_t n = rows_;
  Matrix work = *this;
  Matrix inv = Matrix::identity(n, dom_);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    size_t best_weight = 0;
    for (size_t r = col; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      size_t w = term_weight(work.at(r, col));
      if (piv == n || w < best_weight) {
        piv = r;
        best_weight = w;
      }
    }
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar d = work.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      work.at(col, j) = work.at(col, j) / d;
      inv.at(col, j) = inv.at(col, j) / d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Scalar f = work.at(r, col);
      for (size_t j = 0; j < n; ++j) {
        work.at(r, j) = work.at(r, j) - f * work.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = rows_;
  if (n == 0) return Scalar::one(dom_);
  // Fraction-free elimination; the last pivot is the determinant of the
  // denominator-cleared matrix, corrected by the row scalings.
  std::vector<Vec> rows;
  Scalar scale_correction = Scalar::one(dom_);
  for (size_t i = 0; i < n; ++i) {
    Vec r = row(i);
    Vec cleared = r;
    clear_denominators(cleared, dom_);
    // Determine the factor that was applied.
    for (size_t j = 0; j < n; ++j) {
      if (!r[j].is_zero()) {
        scale_correction = scale_correction * (cleared[j] / r[j]);
        break;
      }
    }
    rows.push_back(std::move(cleared));
  }
  bool negate = false;
  Scalar prev = Scalar::one(dom_);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    size_t best_weight = 0;
    for (size_t r = col; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      size_t w = term_weight(rows[r][col]);
      if (piv == n || w < best_weight) {
        piv = r;
        best_weight = w;
      }
    }
    if (piv == n) return Scalar::zero(dom_);
    if (piv != col) {
      std::swap(rows[piv], rows[col]);
      negate = !negate;
    }
    const Scalar p = rows[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      for (size_t j = col + 1; j < n; ++j) {
        Scalar v = p * rows[r][j] - rows[r][col] * rows[col][j];
        rows[r][j] = poly_div_exact(v, prev);
      }
      rows[r][col] = Scalar::zero(dom_);
    }
    prev = p;
  }
  Scalar d = rows[n - 1][n - 1] / scale_correction;
  return negate ? -d : d;
}

std::vector<std::vector<std::string>> Matrix::text_rows() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    out[i].reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).text());
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  size_t nr = m.rows(), nc = m.cols();
  ScalarDomain dom = m.domain();
  std::vector<Vec> rows;
  rows.reserve(nr);
  for (size_t i = 0; i < nr; ++i) {
    Vec r = m.row(i);
    clear_denominators(r, dom);
    rows.push_back(std::move(r));
  }

  std::vector<size_t> pivot_cols;
  bool fraction_free = dom.kind != DomainKind::Cyclotomic;
  Scalar prev = Scalar::one(dom);
  size_t r0 = 0;
  for (size_t col = 0; col < nc && r0 < nr; ++col) {
    size_t piv = nr;
    size_t best_weight = 0;
    for (size_t r = r0; r < nr; ++r) {
      if (rows[r][col].is_zero()) continue;
      size_t w = term_weight(rows[r][col]);
      if (piv == nr || w < best_weight) {
        piv = r;
        best_weight = w;
      }
    }
    if (piv == nr) continue;
    std::swap(rows[piv], rows[r0]);
    const Scalar p = rows[r0][col];
    for (size_t r = r0 + 1; r < nr; ++r) {
      if (fraction_free) {
        // Bareiss update: all entries stay polynomial, the division by the
        // previous pivot is exact.
        if (rows[r][col].is_zero()) {
          for (size_t j = col + 1; j < nc; ++j) {
            if (rows[r][j].is_zero()) continue;
            rows[r][j] = poly_div_exact(p * rows[r][j], prev);
          }
        } else {
          for (size_t j = col + 1; j < nc; ++j) {
            Scalar v = p * rows[r][j] - rows[r][col] * rows[r0][j];
            rows[r][j] = poly_div_exact(v, prev);
          }
          rows[r][col] = Scalar::zero(dom);
        }
      } else {
        if (rows[r][col].is_zero()) continue;
        Scalar f = rows[r][col] / p;
        for (size_t j = col; j < nc; ++j)
          rows[r][j] = rows[r][j] - f * rows[r0][j];
      }
    }
    if (fraction_free) prev = p;
    pivot_cols.push_back(col);
    ++r0;
  }

  // Back substitution with field arithmetic: normalize pivots to 1 and clear
  // the entries above them.
  size_t rank = pivot_cols.size();
  for (size_t k = rank; k-- > 0;) {
    size_t col = pivot_cols[k];
    Scalar p = rows[k][col];
    for (size_t j = col; j < nc; ++j) rows[k][j] = rows[k][j] / p;
    for (size_t r = 0; r < k; ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (size_t j = col; j < nc; ++j)
        rows[r][j] = rows[r][j] - f * rows[k][j];
    }
  }

  Matrix red = Matrix::from_rows(rows, nc, dom);
  return RrefResult{std::move(red), std::move(pivot_cols), rank};
}

Subspace::Subspace(size_t ambient, ScalarDomain dom)
    : ambient_(ambient), dom_(dom), basis_(0, ambient, dom) {}

Subspace Subspace::full(size_t ambient, ScalarDomain dom) {
  Subspace s(ambient, dom);
  s.basis_ = Matrix::identity(ambient, dom);
  return s;
}

Subspace Subspace::from_vectors(const std::vector<Vec>& vecs, size_t ambient,
                                ScalarDomain dom) {
  RrefResult rr = rref(Matrix::from_rows(vecs, ambient, dom));
  Subspace s(ambient, dom);
  std::vector<Vec> rows;
  for (size_t i = 0; i < rr.rank; ++i) rows.push_back(rr.reduced.row(i));
  s.basis_ = Matrix::from_rows(rows, ambient, dom);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  assert(v.size() == ambient_);
  Vec w = v;
  for (size_t r = 0; r < basis_.rows(); ++r) {
    // Leading column of row r.
    size_t lead = ambient_;
    for (size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(r, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead == ambient_ || w[lead].is_zero()) continue;
    Scalar f = w[lead];
    for (size_t j = lead; j < ambient_; ++j) w[j] = w[j] - f * basis_.at(r, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  size_t nc = m.cols();
  ScalarDomain dom = m.domain();
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vec v(nc, Scalar::zero(dom));
    v[f] = Scalar::one(dom);
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
      v[rr.pivot_cols[k]] = -rr.reduced.at(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(basis, nc, dom);
}

RowSpan::RowSpan(size_t ambient, ScalarDomain dom) : ambient_(ambient), dom_(dom) {}

std::optional<Vec> RowSpan::reduce(Vec v, Vec combo, bool track) const {
  for (const auto& row : rows_) {
    if (v[row.lead].is_zero()) continue;
    Scalar f = v[row.lead];
    for (size_t j = row.lead; j < ambient_; ++j)
      if (!row.v[j].is_zero()) v[j] = v[j] - f * row.v[j];
    if (track) {
      if (combo.size() < row.combo.size()) combo.resize(row.combo.size(), Scalar::zero(dom_));
      for (size_t j = 0; j < row.combo.size(); ++j)
        combo[j] = combo[j] - f * row.combo[j];
    }
  }
  for (const auto& x : v)
    if (!x.is_zero()) return std::nullopt;
  return combo;
}

bool RowSpan::add(const Vec& v) {
  assert(v.size() == ambient_);
  Vec w = v;
  Vec combo(inserted_ + 1, Scalar::zero(dom_));
  combo[inserted_] = Scalar::one(dom_);
  // Reduce against existing rows, tracking the expression.
  for (const auto& row : rows_) {
    if (w[row.lead].is_zero()) continue;
    Scalar f = w[row.lead];
    for (size_t j = row.lead; j < ambient_; ++j)
      if (!row.v[j].is_zero()) w[j] = w[j] - f * row.v[j];
    if (combo.size() < row.combo.size()) combo.resize(row.combo.size(), Scalar::zero(dom_));
    for (size_t j = 0; j < row.combo.size(); ++j)
      combo[j] = combo[j] - f * row.combo[j];
  }
  size_t lead = ambient_;
  for (size_t j = 0; j < ambient_; ++j)
    if (!w[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;  // dependent; not kept
  Scalar p = w[lead];
  for (size_t j = lead; j < ambient_; ++j) w[j] = w[j] / p;
  for (auto& c : combo) c = c / p;
  // Keep earlier rows reduced against the new one.
  for (auto& row : rows_) {
    if (row.v[lead].is_zero()) continue;
    Scalar f = row.v[lead];
    for (size_t j = lead; j < ambient_; ++j)
      if (!w[j].is_zero()) row.v[j] = row.v[j] - f * w[j];
    if (row.combo.size() < combo.size()) row.combo.resize(combo.size(), Scalar::zero(dom_));
    for (size_t j = 0; j < combo.size(); ++j)
      row.combo[j] = row.combo[j] - f * combo[j];
  }
  rows_.push_back(Row{std::move(w), lead, std::move(combo)});
  ++inserted_;
  return true;
}

bool RowSpan::contains(const Vec& v) const {
  return reduce(v, Vec{}, false).has_value();
}

std::optional<Vec> RowSpan::express(const Vec& v) const {
  auto combo = reduce(v, Vec(inserted_, Scalar::zero(dom_)), true);
  if (!combo) return std::nullopt;
  Vec out(inserted_, Scalar::zero(dom_));
  for (size_t j = 0; j < combo->size() && j < inserted_; ++j) out[j] = -(*combo)[j];
  return out;
}

std::vector<Vec> RowSpan::reduced_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.v);
  return out;
}

Subspace spin(const Subspace& seeds, const std::vector<Matrix>& generators) {
  size_t n = seeds.ambient();
  ScalarDomain dom = seeds.domain();
  RowSpan span(n, dom);
  std::deque<Vec> queue;
  for (size_t i = 0; i < seeds.dim(); ++i) {
    Vec v = seeds.basis().row(i);
    if (span.add(v)) queue.push_back(std::move(v));
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Vec w = g * v;
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::from_vectors(span.reduced_rows(), n, dom);
}

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& gens_a,
                                      const std::vector<Matrix>& gens_b) {
  assert(!gens_a.empty() && !gens_b.empty());
  size_t da = gens_a[0].rows();
  size_t db = gens_b[0].rows();
  ScalarDomain dom = gens_a[0].domain();
  // Unknown X is db x da; vec index (r, c) -> c * db + r.
  size_t nu = da * db;
  std::vector<Vec> eqs;
  for (size_t g = 0; g < gens_a.size(); ++g) {
    const Matrix& a = gens_a[g];
    const Matrix& b = gens_b[g];
    for (size_t r = 0; r < db; ++r)
      for (size_t s = 0; s < da; ++s) {
        Vec eq(nu, Scalar::zero(dom));
        // (X A)_{r,s} = sum_c X[r][c] A[c][s]
        for (size_t c = 0; c < da; ++c) {
          if (a.at(c, s).is_zero()) continue;
          eq[c * db + r] = eq[c * db + r] + a.at(c, s);
        }
        // -(B X)_{r,s} = -sum_c B[r][c] X[c][s]
        for (size_t c = 0; c < db; ++c) {
          if (b.at(r, c).is_zero()) continue;
          eq[s * db + c] = eq[s * db + c] - b.at(r, c);
        }
        bool zero = true;
        for (const auto& x : eq)
          if (!x.is_zero()) {
            zero = false;
            break;
          }
        if (!zero) eqs.push_back(std::move(eq));
      }
  }
  Subspace sol = eqs.empty() ? Subspace::full(nu, dom)
                             : nullspace(Matrix::from_rows(eqs, nu, dom));
  std::vector<Matrix> basis;
  for (size_t i = 0; i < sol.dim(); ++i) {
    Matrix x(db, da, dom);
    for (size_t c = 0; c < da; ++c)
      for (size_t r = 0; r < db; ++r) x.at(r, c) = sol.basis().at(i, c * db + r);
    basis.push_back(std::move(x));
  }
  return basis;
}

SubQuotient restrict_quotient_matrices(const std::vector<Matrix>& gens,
                                       const Subspace& u) {
  size_t n = u.ambient();
  size_t k = u.dim();
  ScalarDomain dom = u.domain();
  // Change of basis: subspace basis vectors first, then unit vectors on the
  // non-pivot coordinates.
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j)
      if (!u.basis().at(i, j).is_zero()) {
        used[j] = true;
        break;
      }
  }
  Matrix c(n, n, dom);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) c.at(j, i) = u.basis().at(i, j);
  size_t col = k;
  for (size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    c.at(j, col) = Scalar::one(dom);
    ++col;
  }
  assert(col == n);
  auto cinv = c.inverse();
  if (!cinv) throw std::logic_error("change of basis not invertible");

  SubQuotient out;
  out.basis_change = c;
  for (const auto& g : gens) {
    Matrix t = (*cinv) * g * c;
    for (size_t i = k; i < n; ++i)
      for (size_t j = 0; j < k; ++j)
        if (!t.at(i, j).is_zero())
          throw NotInvariant("subspace not invariant under a generator");
    Matrix sub(k, k, dom);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub.at(i, j) = t.at(i, j);
    Matrix quo(n - k, n - k, dom);
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j) quo.at(i - k, j - k) = t.at(i, j);
    out.sub.push_back(std::move(sub));
    out.quotient.push_back(std::move(quo));
  }
  return out;
}

std::vector<Scalar> minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  size_t n = m.rows();
  ScalarDomain dom = m.domain();
  if (n == 0) return {Scalar::one(dom)};
  RowSpan span(n * n, dom);
  auto vec_of = [&](const Matrix& x) {
    Vec v;
    v.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v.push_back(x.at(i, j));
    return v;
  };
  Matrix power = Matrix::identity(n, dom);
  while (true) {
    Vec v = vec_of(power);
    auto expr = span.express(v);
    if (expr) {
      // power = sum expr[i] * M^i, so the minimal polynomial is
      // x^k - sum expr[i] x^i.
      std::vector<Scalar> coeffs(span.rank() + 1, Scalar::zero(dom));
      for (size_t i = 0; i < expr->size(); ++i) coeffs[i] = -(*expr)[i];
      coeffs[span.rank()] = Scalar::one(dom);
      return coeffs;
    }
    span.add(v);
    power = power * m;
  }
}

}  // namespace homrep
