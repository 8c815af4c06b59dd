#include "homrep/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "homrep/errors.hpp"

namespace homrep {

namespace {

// Exact division of integer polynomials, ascending coefficients, monic or
// integer-leading divisor with exact quotient.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  std::vector<mpz_class> quo(num.size() - den.size() + 1, mpz_class(0));
  while (num.size() >= den.size()) {
    mpz_class f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quo[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) break;
  }
  assert(num.empty());
  return quo;
}

std::map<int, std::vector<mpz_class>>& phi_cache() {
  static std::map<int, std::vector<mpz_class>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache().find(k);
  if (it != phi_cache().end()) return it->second;

  // x^k - 1 divided by Phi_d for every proper divisor d of k.
  std::function<const std::vector<mpz_class>&(int)> get = [&](int m) -> const std::vector<mpz_class>& {
    auto found = phi_cache().find(m);
    if (found != phi_cache().end()) return found->second;
    std::vector<mpz_class> num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = poly_div_exact(std::move(num), get(d));
    return phi_cache().emplace(m, std::move(num)).first->second;
  };
  return get(k);
}

Cyclotomic::Cyclotomic(int k) : k_(k) {
  coeffs_.assign(cyclotomic_polynomial(k).size() - 1, mpq_class(0));
}

Cyclotomic::Cyclotomic(int k, const mpq_class& c) : Cyclotomic(k) {
  coeffs_[0] = c;
}

Cyclotomic Cyclotomic::zeta(int k) { return zeta_power(k, 1); }

Cyclotomic Cyclotomic::zeta_power(int k, long e) {
  Cyclotomic r(k);
  long em = ((e % k) + k) % k;
  std::vector<mpq_class> raw(static_cast<size_t>(em) + 1, mpq_class(0));
  raw[static_cast<size_t>(em)] = 1;
  r.reduce(std::move(raw));
  return r;
}

void Cyclotomic::reduce(std::vector<mpq_class> raw) {
  const auto& phi = cyclotomic_polynomial(k_);
  size_t deg = phi.size() - 1;  // Phi_k is monic
  while (raw.size() > deg) {
    mpq_class f = raw.back();
    size_t shift = raw.size() - phi.size();
    for (size_t i = 0; i < phi.size(); ++i) raw[shift + i] -= f * mpq_class(phi[i]);
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    if (raw.empty()) break;
  }
  raw.resize(deg, mpq_class(0));
  coeffs_ = std::move(raw);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  assert(is_rational());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (k_ != o.k_) throw MixedDomain("cyclotomic orders differ");
  Cyclotomic r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (k_ != o.k_) throw MixedDomain("cyclotomic orders differ");
  Cyclotomic r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (k_ != o.k_) throw MixedDomain("cyclotomic orders differ");
  std::vector<mpq_class> raw(2 * coeffs_.size(), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  Cyclotomic r(k_);
  r.reduce(std::move(raw));
  return r;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  // Extended Euclid in Q[x] against Phi_k, which is irreducible over Q.
  const auto& phi_z = cyclotomic_polynomial(k_);
  std::vector<mpq_class> r0(phi_z.begin(), phi_z.end());
  std::vector<mpq_class> r1 = coeffs_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{};            // coefficient of *this in r0
  std::vector<mpq_class> s1{mpq_class(1)};  // coefficient of *this in r1

  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto submul = [&](std::vector<mpq_class>& acc, const std::vector<mpq_class>& p,
                    const mpq_class& f, size_t shift) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, mpq_class(0));
    for (size_t i = 0; i < p.size(); ++i) acc[i + shift] -= f * p[i];
    trim(acc);
  };

  while (true) {
    // Divide r0 by r1, applying the same operations to s0, s1.
    while (r0.size() >= r1.size() && !r0.empty()) {
      mpq_class f = r0.back() / r1.back();
      size_t shift = r0.size() - r1.size();
      submul(r0, r1, f, shift);
      submul(s0, s1, f, shift);
      if (r0.empty()) break;
    }
    if (r0.empty()) break;
    std::swap(r0, r1);
    std::swap(s0, s1);
    if (r1.empty()) break;
  }
  // Now r1 (or r0 after the swap dance) holds the gcd; since Phi_k is
  // irreducible and *this is nonzero, the gcd is a nonzero constant.
  std::vector<mpq_class>& g = r1.empty() ? r0 : r1;
  std::vector<mpq_class>& s = r1.empty() ? s0 : s1;
  assert(g.size() == 1 && g[0] != 0);
  Cyclotomic out(k_);
  std::vector<mpq_class> raw = s;
  for (auto& c : raw) c /= g[0];
  out.reduce(std::move(raw));
  return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  return *this * o.inv();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic r(k_, mpq_class(1));
  Cyclotomic base = *this;
  unsigned long ue = static_cast<unsigned long>(e);
  while (ue) {
    if (ue & 1) r = r * base;
    base = base * base;
    ue >>= 1;
  }
  return r;
}

Cyclotomic Cyclotomic::bar() const {
  Cyclotomic r(k_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Cyclotomic p = zeta_power(k_, -static_cast<long>(i));
    for (size_t j = 0; j < coeffs_.size(); ++j)
      r.coeffs_[j] += coeffs_[i] * p.coeffs_[j];
  }
  return r;
}

std::complex<double> Cyclotomic::embed(int root_choice) const {
  if (std::gcd(root_choice, k_) != 1)
    throw std::invalid_argument("root choice not coprime to order");
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double ang = two_pi * root_choice * static_cast<double>(i) / k_;
    acc += coeffs_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclotomic::text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string monos;
    if (i != 0) {
      monos = "z";
      if (i != 1) monos += "^" + std::to_string(i);
    }
    if (monos.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << monos;
    } else {
      os << mag.get_str() << "*" << monos;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.text();
}

}  // namespace homrep
