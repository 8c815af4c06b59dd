#ifndef HOMREP_SRC_ZGCD_HPP
#define HOMREP_SRC_ZGCD_HPP

// Internal integer-polynomial gcd kernel.  Rational Laurent polynomials are
// scaled to primitive integer form by the caller; the gcds here run Brown's
// modular algorithm (evaluation + interpolation mod word-size primes, CRT
// lift, division check) with a primitive-PRS fallback.

#include <gmpxx.h>

#include <vector>

namespace homrep::detail {

mpz_class z_gcd(const mpz_class& a, const mpz_class& b);

// Dense univariate polynomial over Z, coefficients by ascending degree.
struct ZPoly {
  std::vector<mpz_class> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lc() const { return c.back(); }

  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly scaled(const mpz_class& s) const;
  mpz_class content() const;
  ZPoly primitive() const;
  ZPoly prem(const ZPoly& d) const;
  // Exact quotient; returns false (and leaves quo unspecified) when the
  // division has a remainder.
  bool div_exact(const ZPoly& d, ZPoly& quo) const;
};

// Polynomial in t with Z[q] coefficients, by ascending t-degree.
struct TZPoly {
  std::vector<ZPoly> c;

  void trim() {
    while (!c.empty() && c.back().zero()) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const ZPoly& lc() const { return c.back(); }

  int q_deg() const;
  ZPoly content() const;
  TZPoly primitive() const;
  TZPoly prem(const TZPoly& d) const;
  bool div_exact(const TZPoly& d, TZPoly& quo) const;
};

// gcd of univariate integer polynomials, primitive with positive leading
// coefficient.
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// gcd of bivariate integer polynomials, primitive (integer content 1,
// content-free in t) with positive leading coefficient.
TZPoly tzpoly_gcd(const TZPoly& a, const TZPoly& b);

}  // namespace homrep::detail

#endif
