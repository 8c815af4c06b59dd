#ifndef HOMREP_HECKE_HPP
#define HOMREP_HECKE_HPP

#include <map>

#include "homrep/perm.hpp"
#include "homrep/scalar.hpp"

namespace homrep {

/// Element of the Iwahori-Hecke algebra H_n in the T_w basis: a finite map
/// from permutations to scalars, zero coefficients never stored.
///
/// Products are driven by the one-generator rules
///   T_w * T_i = T_{w s_i}                    when the length goes up,
///   T_w * T_i = q T_{w s_i} + (q-1) T_w      when it goes down,
/// which are forced by the braid relations together with
/// (T_i + 1)(T_i - q) = 0; associativity and the defining relations are
/// certified by the test suite rather than assumed.
class HeckeElement {
 public:
  HeckeElement(size_t n, ScalarDomain dom) : n_(n), dom_(dom) {}
  static HeckeElement basis(size_t n, ScalarDomain dom, const Perm& w);
  static HeckeElement unit(size_t n, ScalarDomain dom) {
    return basis(n, dom, Perm(n));
  }
  /// T_i for the adjacent transposition s_i (0-based i).
  static HeckeElement generator(size_t n, ScalarDomain dom, size_t i) {
    return basis(n, dom, Perm::transposition(n, i));
  }

  size_t n() const { return n_; }
  const ScalarDomain& domain() const { return dom_; }
  const std::map<Perm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Perm& w) const;

  void add_term(const Perm& w, const Scalar& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const Scalar& c) const;
  bool operator==(const HeckeElement& o) const;
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  /// Right multiplication by the generator T_i.
  HeckeElement right_mul_gen(size_t i) const;
  /// Left multiplication by the generator T_i.
  HeckeElement left_mul_gen(size_t i) const;
  /// Right multiplication by the basis element T_w.
  HeckeElement right_mul_basis(const Perm& w) const;
  /// Full product.
  HeckeElement operator*(const HeckeElement& o) const;

  /// The antiautomorphism T_w -> T_{w^{-1}}.
  HeckeElement star() const;

 private:
  size_t n_;
  ScalarDomain dom_;
  std::map<Perm, Scalar> terms_;
};

/// hecke_multiply as a named operation (same-n, same-domain checked).
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// The symmetrizing trace pairing tau(a b*) = sum_w a_w b_w q^{length(w)}.
/// It is bilinear and contravariant for the star antiautomorphism.
Scalar hecke_trace_pairing(const HeckeElement& a, const HeckeElement& b);

}  // namespace homrep

#endif
