#ifndef HOMREP_CYCLOTOMIC_HPP
#define HOMREP_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace homrep {

/// The k-th cyclotomic polynomial as a monic integer polynomial,
/// coefficients by ascending degree.  Computed by dividing x^k - 1 by the
/// cyclotomic polynomials of the proper divisors of k; results are cached.
const std::vector<mpz_class>& cyclotomic_polynomial(int k);

/// Element of Q(zeta_k), stored reduced modulo the k-th cyclotomic
/// polynomial: coefficients of 1, zeta, ..., zeta^(phi(k)-1).
class Cyclotomic {
 public:
  explicit Cyclotomic(int k);
  Cyclotomic(int k, const mpq_class& c);
  /// zeta_k itself.
  static Cyclotomic zeta(int k);
  /// zeta_k^e for any integer exponent.
  static Cyclotomic zeta_power(int k, long e);

  int order() const { return k_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic inv() const;
  Cyclotomic pow(long e) const;
  bool operator==(const Cyclotomic& o) const {
    return k_ == o.k_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// The involution zeta -> zeta^(k-1) = zeta^-1.
  Cyclotomic bar() const;

  /// Numeric value at zeta_k = exp(2*pi*i*root_choice/k); root_choice must
  /// be coprime to k.
  std::complex<double> embed(int root_choice = 1) const;

  /// Canonical text in the symbol z, e.g. "-1 - z" in Q(zeta_3).
  std::string text() const;

 private:
  void reduce(std::vector<mpq_class> raw);

  int k_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace homrep

#endif
