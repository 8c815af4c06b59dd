#include "homrep/hecke.hpp"

#include "homrep/errors.hpp"

namespace homrep {

HeckeElement HeckeElement::basis(size_t n, ScalarDomain dom, const Perm& w) {
  HeckeElement e(n, dom);
  e.terms_.emplace(w, Scalar::one(dom));
  return e;
}

Scalar HeckeElement::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(dom_) : it->second;
}

void HeckeElement::add_term(const Perm& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (n_ != o.n_) throw MixedDomain("hecke elements with different n");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  if (n_ != o.n_) throw MixedDomain("hecke elements with different n");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

HeckeElement HeckeElement::scaled(const Scalar& c) const {
  HeckeElement r(n_, dom_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

HeckeElement HeckeElement::right_mul_gen(size_t i) const {
  HeckeElement r(n_, dom_);
  Scalar q = Scalar::q(dom_);
  Scalar qm1 = q - Scalar::one(dom_);
  for (const auto& [w, c] : terms_) {
    Perm ws = w.right_mul_s(i);
    if (w.right_descent(i)) {
      r.add_term(ws, q * c);
      r.add_term(w, qm1 * c);
    } else {
      r.add_term(ws, c);
    }
  }
  return r;
}

HeckeElement HeckeElement::left_mul_gen(size_t i) const {
  HeckeElement r(n_, dom_);
  Scalar q = Scalar::q(dom_);
  Scalar qm1 = q - Scalar::one(dom_);
  for (const auto& [w, c] : terms_) {
    Perm sw = w.left_mul_s(i);
    if (w.left_descent(i)) {
      r.add_term(sw, q * c);
      r.add_term(w, qm1 * c);
    } else {
      r.add_term(sw, c);
    }
  }
  return r;
}

HeckeElement HeckeElement::right_mul_basis(const Perm& w) const {
  HeckeElement r = *this;
  for (size_t i : w.reduced_word()) r = r.right_mul_gen(i);
  return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  if (n_ != o.n_) throw MixedDomain("hecke elements with different n");
  if (!(dom_ == o.dom_)) throw MixedDomain("hecke elements in different domains");
  HeckeElement r(n_, dom_);
  for (const auto& [w, c] : o.terms_) {
    HeckeElement part = right_mul_basis(w).scaled(c);
    for (const auto& [u, x] : part.terms()) r.add_term(u, x);
  }
  return r;
}

HeckeElement HeckeElement::star() const {
  HeckeElement r(n_, dom_);
  for (const auto& [w, c] : terms_) r.add_term(w.inverse(), c);
  return r;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  return a * b;
}

Scalar hecke_trace_pairing(const HeckeElement& a, const HeckeElement& b) {
  if (a.n() != b.n() || !(a.domain() == b.domain()))
    throw MixedDomain("trace pairing operands mismatch");
  Scalar acc = Scalar::zero(a.domain());
  const auto& bt = b.terms();
  for (const auto& [w, c] : a.terms()) {
    auto it = bt.find(w);
    if (it == bt.end()) continue;
    acc = acc + c * it->second * Scalar::q(a.domain(), static_cast<int>(w.length()));
  }
  return acc;
}

}  // namespace homrep
