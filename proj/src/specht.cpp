#include "homrep/specht.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "homrep/errors.hpp"
#include "homrep/linalg.hpp"

namespace homrep {

namespace {

// Row-reading superstandard tableau: 1..lambda_1 in the first row and so on.
std::vector<std::vector<int>> superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : shape.parts()) {
    std::vector<int> row(p);
    for (int j = 0; j < p; ++j) row[j] = next++;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Column-reading filling of the same shape: 1,2,... down the first column.
std::vector<std::vector<int>> column_filling(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  int next = 1;
  int ncols = shape.parts().empty() ? 0 : shape.parts()[0];
  for (int col = 0; col < ncols; ++col)
    for (size_t r = 0; r < rows.size(); ++r)
      if (col < shape.parts()[r]) rows[r][col] = next++;
  return rows;
}

Perm tableau_perm(const Partition& shape, const std::vector<std::vector<int>>& entries) {
  int n = shape.sum();
  auto super = superstandard(shape);
  std::vector<uint8_t> img(static_cast<size_t>(n));
  for (size_t r = 0; r < super.size(); ++r)
    for (size_t c = 0; c < super[r].size(); ++c)
      img[static_cast<size_t>(super[r][c] - 1)] =
          static_cast<uint8_t>(entries[r][c] - 1);
  return Perm::from_one_line(std::move(img));
}

void enumerate_syt(const Partition& shape, std::vector<std::vector<int>>& rows,
                   std::vector<int>& fill, int next, int n,
                   std::vector<StandardTableau>& out) {
  if (next > n) {
    out.push_back(StandardTableau{shape, rows});
    return;
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    int c = fill[r];
    if (c >= shape.parts()[r]) continue;
    if (r > 0 && fill[r - 1] <= c) continue;  // the box above must be filled
    rows[r][c] = next;
    fill[r]++;
    enumerate_syt(shape, rows, fill, next + 1, n, out);
    fill[r]--;
    rows[r][c] = 0;
  }
}

}  // namespace

Perm StandardTableau::to_perm() const { return tableau_perm(shape, entries); }

std::string StandardTableau::text() const {
  std::ostringstream os;
  for (size_t r = 0; r < entries.size(); ++r) {
    if (r) os << "/";
    for (size_t c = 0; c < entries[r].size(); ++c) {
      if (c) os << ",";
      os << entries[r][c];
    }
  }
  return os.str();
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  if (shape.sum() == 0) {
    out.push_back(StandardTableau{shape, {}});
    return out;
  }
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  std::vector<int> fill(shape.rows(), 0);
  enumerate_syt(shape, rows, fill, 1, shape.sum(), out);
  return out;
}

long hook_dim(const Partition& shape) {
  int n = shape.sum();
  if (n == 0) return 1;
  Partition conj = shape.conjugate();
  long numer = 1;
  for (int i = 2; i <= n; ++i) numer *= i;
  long denom = 1;
  for (size_t i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.parts()[i]; ++j) {
      int hook = shape.parts()[i] - (j + 1) + conj.parts()[j] - static_cast<int>(i + 1) + 1;
      denom *= hook;
    }
  return numer / denom;
}

namespace {

// x_lambda = sum of T_w over the row stabilizer of the superstandard
// tableau; y_lambda' = sum of (-q)^{-length} T_w over the column stabilizer.
HeckeElement symmetrizer(int n, ScalarDomain dom,
                         const std::vector<std::vector<size_t>>& blocks, bool signed_q) {
  HeckeElement acc(n, dom);
  Scalar mq = -Scalar::q(dom);
  for (const Perm& w : young_subgroup(static_cast<size_t>(n), blocks)) {
    if (signed_q) {
      long l = static_cast<long>(w.length());
      Scalar c = Scalar::one(dom);
      for (long i = 0; i < l; ++i) c = c / mq;
      acc.add_term(w, c);
    } else {
      acc.add_term(w, Scalar::one(dom));
    }
  }
  return acc;
}

// Consecutive blocks of the given part sizes: {1..p1}, {p1+1..p1+p2}, ...
std::vector<std::vector<size_t>> parabolic_blocks(const Partition& shape) {
  std::vector<std::vector<size_t>> blocks;
  size_t next = 0;
  for (int p : shape.parts()) {
    std::vector<size_t> b;
    for (int j = 0; j < p; ++j) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

// Cell-model generator for a shape mu: y_{mu'} T_{w_mu} x_mu.  With this
// repository's product labeling this order (and the inverted tableau
// translates below) is the orientation for which the standard translates
// are independent and span a T_i-closed module of the hook dimension; the
// calibration tests pin it down.
HeckeElement z_element(const Partition& mu, int n, ScalarDomain dom) {
  HeckeElement x = symmetrizer(n, dom, parabolic_blocks(mu), false);
  HeckeElement y = symmetrizer(n, dom, parabolic_blocks(mu.conjugate()), true);
  Perm w_mu = tableau_perm(mu, column_filling(mu));
  // Associate as y (T_w x) to keep intermediate supports small.
  HeckeElement wx = x;
  auto word = w_mu.reduced_word();
  for (size_t k = word.size(); k-- > 0;) wx = wx.left_mul_gen(word[k]);
  return y * wx;
}

StandardTableau transpose_tableau(const StandardTableau& t) {
  Partition conj = t.shape.conjugate();
  std::vector<std::vector<int>> entries(conj.rows());
  for (size_t r = 0; r < conj.rows(); ++r) entries[r].resize(conj.parts()[r]);
  for (size_t r = 0; r < t.entries.size(); ++r)
    for (size_t c = 0; c < t.entries[r].size(); ++c)
      entries[c][r] = t.entries[r][c];
  return StandardTableau{conj, entries};
}

Vec hecke_to_vec(const HeckeElement& h, const std::map<Perm, size_t>& index,
                 size_t total, ScalarDomain dom) {
  Vec v(total, Scalar::zero(dom));
  for (const auto& [w, c] : h.terms()) v[index.at(w)] = c;
  return v;
}

}  // namespace

SpechtModule specht_rep(const Partition& lambda, int n, ScalarDomain dom) {
  if (lambda.sum() != n) throw NotAPartition("partition size differs from n");
  if (n < 1 || n > 7) throw std::invalid_argument("specht_rep supports 1 <= n <= 7");

  SpechtModule s;
  s.lambda = lambda;
  s.n = n;
  s.dom = dom;
  long hook = hook_dim(lambda);

  // Cell model for the conjugate shape; the action below is twisted by
  // T_i -> -q T_i^{-1}, which exchanges the two one-dimensional modules and
  // realizes the labeling in which S^(n) is T_i -> q with a unit form.
  Partition mu = lambda.conjugate();
  HeckeElement z = z_element(mu, n, dom);
  if (z.is_zero()) throw DimensionMismatch("cell generator vanished");

  std::vector<Perm> perms = all_permutations(static_cast<size_t>(n));
  std::map<Perm, size_t> index;
  for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  size_t total = perms.size();

  std::vector<StandardTableau> mu_tabs = standard_tableaux(mu);
  if (static_cast<long>(mu_tabs.size()) != hook)
    throw DimensionMismatch("tableau count disagrees with the hook formula");
  RowSpan span(total, dom);
  for (const auto& t : mu_tabs) {
    HeckeElement v = z.right_mul_basis(t.to_perm().inverse());
    if (!span.add(hecke_to_vec(v, index, total, dom)))
      throw DimensionMismatch("standard basis vectors are dependent");
    s.basis.push_back(std::move(v));
    s.tableaux.push_back(transpose_tableau(t));
  }

  size_t d = s.basis.size();
  std::vector<Matrix> cell_gens;
  for (int i = 0; i < n - 1; ++i) {
    Matrix m(d, d, dom);
    for (size_t col = 0; col < d; ++col) {
      HeckeElement image = s.basis[col].right_mul_gen(static_cast<size_t>(i));
      auto coeffs = span.express(hecke_to_vec(image, index, total, dom));
      if (!coeffs)
        throw DimensionMismatch("standard basis span is not closed under T_i");
      for (size_t row = 0; row < d; ++row) m.at(row, col) = (*coeffs)[row];
    }
    cell_gens.push_back(std::move(m));
  }
  // Twist: T_i acts as -q times the inverse of the cell action.
  Scalar q = Scalar::q(dom);
  std::vector<Matrix> gens;
  for (const auto& a : cell_gens) {
    auto inv = a.inverse();
    if (!inv) throw DimensionMismatch("cell generator matrix not invertible");
    gens.push_back(inv->scaled(-q));
  }
  s.rep = MatrixRep::make(n, std::move(gens), dom, "specht(" + lambda.text() + ")",
                          "conjugate cell basis, action twisted by T -> -q T^{-1}");
  // The Hecke quadratic is part of the module contract.
  Scalar one = Scalar::one(dom);
  if (!quadratic_check(s.rep, q, -one).all_passed())
    throw DimensionMismatch("Hecke quadratic fails on Specht generators");
  return s;
}

Matrix dj_form(const SpechtModule& s) {
  if (s.dom.kind == DomainKind::Cyclotomic) {
    // Compute generically on the same canonical basis, then specialize.
    SpechtModule generic = specht_rep(s.lambda, s.n, ScalarDomain::q_only());
    Matrix g = dj_form(generic);
    Matrix out(g.rows(), g.cols(), s.dom);
    for (size_t i = 0; i < g.rows(); ++i)
      for (size_t j = 0; j < g.cols(); ++j)
        out.at(i, j) = specialize(g.at(i, j), s.dom.order, TTarget::keep());
    return out;
  }

  size_t d = s.dim();
  Matrix gram(d, d, s.dom);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Scalar v = hecke_trace_pairing(s.basis[i], s.basis[j]);
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  // The trace pairing restricted to the signed permutation module carrying
  // the cell model factors through the diagonal tabloid form times the
  // Poincare polynomial (in q^-1) of the sign-side stabilizer, which is the
  // parabolic of lambda itself.  Divide that factor out so the Gram is an
  // integral lattice form that specializes correctly at roots of unity.
  Scalar p = Scalar::one(s.dom);
  for (int part : s.lambda.parts()) {
    for (int j = 2; j <= part; ++j) {
      Scalar bracket = Scalar::zero(s.dom);  // 1 + q^-1 + ... + q^-(j-1)
      for (int a = 0; a < j; ++a) bracket = bracket + Scalar::q(s.dom, -a);
      p = p * bracket;
    }
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Scalar v = gram.at(i, j) / p;
      if (!v.rational_function().is_polynomial())
        throw DimensionMismatch("Gram entry not divisible by the stabilizer factor");
      gram.at(i, j) = v;
    }
  return gram;
}

DLambda d_lambda(const Partition& lambda, std::optional<int> q_root_order) {
  int n = lambda.sum();

  DLambda out;
  out.lambda = lambda;
  out.q_root_order = q_root_order;
  if (!q_root_order) {
    SpechtModule generic = specht_rep(lambda, n, ScalarDomain::q_only());
    out.module = generic.rep;
    out.gram = dj_form(generic);
    out.radical = nullspace(out.gram);
  } else {
    // Build the module directly over the target field; the standard basis
    // is canonical, so the generically computed Gram lines up with it.
    int k = *q_root_order;
    SpechtModule at_root = specht_rep(lambda, n, ScalarDomain::cyclotomic(k));
    out.module = at_root.rep;
    out.gram = dj_form(at_root);
    out.radical = nullspace(out.gram);
  }
  if (out.radical.dim() == 0) {
    out.quotient = out.module;
    out.quotient.kind = "d_lambda(" + lambda.text() + ")";
  } else {
    auto sq = restrict_quotient_matrices(out.module.gens, out.radical);
    out.quotient = MatrixRep::make(n, sq.quotient, out.module.dom,
                                   "d_lambda(" + lambda.text() + ")");
  }
  return out;
}

bool nonzero_classification(const Partition& lambda, std::optional<int> e) {
  if (!e) return true;
  int run = 1;
  const auto& parts = lambda.parts();
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == parts[i - 1]) {
      if (++run >= *e) return false;
    } else {
      run = 1;
    }
  }
  return run < *e;
}

Partition lambda_from_mu(const Partition& mu, int n) {
  int first = n - mu.sum();
  if (first < (mu.parts().empty() ? 1 : mu.parts()[0]))
    throw NotAPartition("n - |mu| is smaller than mu_1");
  std::vector<int> parts{first};
  for (int p : mu.parts()) parts.push_back(p);
  return Partition(std::move(parts));
}

}  // namespace homrep
