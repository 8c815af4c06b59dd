#include "zgcd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>

namespace homrep::detail {

mpz_class z_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (zero() || o.zero()) return {};
  ZPoly r;
  r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r = *this;
  if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), mpz_class(0));
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.trim();
  return r;
}

ZPoly ZPoly::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  ZPoly r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c) {
    g = z_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive() const {
  if (zero()) return {};
  mpz_class g = content();
  if (lc() < 0) g = -g;
  if (g == 1) return *this;
  ZPoly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

ZPoly ZPoly::prem(const ZPoly& d) const {
  ZPoly r = *this;
  while (!r.zero() && r.deg() >= d.deg()) {
    mpz_class rl = r.lc();
    size_t shift = static_cast<size_t>(r.deg() - d.deg());
    ZPoly rs = r.scaled(d.lc());
    for (size_t i = 0; i < d.c.size(); ++i) rs.c[i + shift] -= rl * d.c[i];
    rs.trim();
    r = std::move(rs);
  }
  return r;
}

bool ZPoly::div_exact(const ZPoly& d, ZPoly& quo) const {
  quo = ZPoly{};
  if (d.zero()) return false;
  ZPoly r = *this;
  if (r.zero()) return true;
  if (r.deg() < d.deg()) return false;
  quo.c.assign(static_cast<size_t>(r.deg() - d.deg()) + 1, mpz_class(0));
  while (!r.zero() && r.deg() >= d.deg()) {
    mpz_class f = r.lc() / d.lc();
    if (f * d.lc() != r.lc()) return false;
    size_t shift = static_cast<size_t>(r.deg() - d.deg());
    quo.c[shift] = f;
    for (size_t i = 0; i < d.c.size(); ++i) r.c[i + shift] -= f * d.c[i];
    r.trim();
  }
  return r.zero();
}

int TZPoly::q_deg() const {
  int m = -1;
  for (const auto& x : c) m = std::max(m, x.deg());
  return m;
}

ZPoly TZPoly::content() const {
  ZPoly g;
  for (const auto& x : c) {
    if (x.zero()) continue;
    g = zpoly_gcd(g, x);
    if (g.deg() == 0 && !g.zero() && g.c[0] == 1) break;
  }
  return g;
}

TZPoly TZPoly::primitive() const {
  if (zero()) return {};
  ZPoly g = content();
  TZPoly r;
  r.c.reserve(c.size());
  for (const auto& x : c) {
    ZPoly quo;
    bool ok = x.div_exact(g, quo);
    assert(ok);
    (void)ok;
    r.c.push_back(std::move(quo));
  }
  return r;
}

TZPoly TZPoly::prem(const TZPoly& d) const {
  TZPoly r = *this;
  while (!r.zero() && r.deg() >= d.deg()) {
    ZPoly rl = r.lc();
    size_t shift = static_cast<size_t>(r.deg() - d.deg());
    TZPoly rs;
    rs.c.reserve(r.c.size());
    for (const auto& x : r.c) rs.c.push_back(x * d.lc());
    for (size_t i = 0; i < d.c.size(); ++i)
      rs.c[i + shift] = rs.c[i + shift] - d.c[i] * rl;
    rs.trim();
    r = std::move(rs);
  }
  return r;
}

bool TZPoly::div_exact(const TZPoly& d, TZPoly& quo) const {
  quo = TZPoly{};
  if (d.zero()) return false;
  TZPoly r = *this;
  if (r.zero()) return true;
  if (r.deg() < d.deg()) return false;
  quo.c.assign(static_cast<size_t>(r.deg() - d.deg()) + 1, ZPoly{});
  while (!r.zero() && r.deg() >= d.deg()) {
    ZPoly f;
    if (!r.lc().div_exact(d.lc(), f)) return false;
    size_t shift = static_cast<size_t>(r.deg() - d.deg());
    quo.c[shift] = f;
    for (size_t i = 0; i < d.c.size(); ++i)
      r.c[i + shift] = r.c[i + shift] - d.c[i] * f;
    r.trim();
  }
  return r.zero();
}

namespace {

using u32 = uint32_t;
using u64 = uint64_t;

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  u32 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powm = [&](u64 b, u64 e) {
    u64 r = 1;
    b %= n;
    while (e) {
      if (e & 1) r = r * b % n;
      b = b * b % n;
      e >>= 1;
    }
    return r;
  };
  for (u32 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (a % n == 0) continue;
    u64 x = powm(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Stream of 31-bit primes, largest first.
u32 nth_prime(size_t i) {
  static std::vector<u32> primes;
  static u32 next = 2147483647u;
  while (primes.size() <= i) {
    while (!is_prime_u32(next)) next -= 2;
    primes.push_back(next);
    next -= 2;
  }
  return primes[i];
}

struct Fp {
  u32 p;
  u32 add(u32 a, u32 b) const {
    u64 s = static_cast<u64>(a) + b;
    return s >= p ? static_cast<u32>(s - p) : static_cast<u32>(s);
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<u64>(a) * b % p); }
  u32 pow(u32 b, u64 e) const {
    u32 r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  u32 inv(u32 a) const { return pow(a, p - 2); }
};

struct PolyP {
  std::vector<u32> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }

  u32 eval(u32 x, const Fp& F) const {
    u32 acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
    return acc;
  }

  PolyP scaled(u32 s, const Fp& F) const {
    PolyP r = *this;
    for (auto& x : r.c) x = F.mul(x, s);
    r.trim();
    return r;
  }

  static PolyP rem(PolyP r, const PolyP& d, const Fp& F) {
    u32 dinv = F.inv(d.c.back());
    while (!r.zero() && r.deg() >= d.deg()) {
      u32 f = F.mul(r.c.back(), dinv);
      size_t shift = static_cast<size_t>(r.deg() - d.deg());
      for (size_t i = 0; i < d.c.size(); ++i)
        r.c[i + shift] = F.sub(r.c[i + shift], F.mul(f, d.c[i]));
      r.trim();
    }
    return r;
  }

  static PolyP gcd_monic(PolyP a, PolyP b, const Fp& F) {
    while (!b.zero()) {
      PolyP r = rem(std::move(a), b, F);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.zero() && a.c.back() != 1) a = a.scaled(F.inv(a.c.back()), F);
    return a;
  }
};

u32 mpz_mod_u32(const mpz_class& z, u32 p) {
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p);
  return static_cast<u32>(r);
}

PolyP zpoly_mod(const ZPoly& a, const Fp& F) {
  PolyP r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(mpz_mod_u32(x, F.p));
  r.trim();
  return r;
}

mpz_class symmetric_lift(const mpz_class& r, const mpz_class& m) {
  return 2 * r > m ? mpz_class(r - m) : r;
}

// x == prev mod m_prev, x == r mod p, symmetric range.
mpz_class crt_step(const mpz_class& prev, const mpz_class& m_prev, u32 r, u32 p,
                   const mpz_class& m_new) {
  Fp F{p};
  u32 prev_mod = mpz_mod_u32(prev, p);
  u32 diff = F.sub(r, prev_mod);
  u32 minv = F.inv(mpz_mod_u32(m_prev, p));
  u32 k = F.mul(diff, minv);
  mpz_class x = prev + m_prev * mpz_class(k);
  mpz_class xm = x % m_new;
  if (xm < 0) xm += m_new;
  return symmetric_lift(xm, m_new);
}

ZPoly zpoly_gcd_prs(ZPoly a, ZPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.zero()) {
    ZPoly r = a.prem(b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

bool divides_both(const ZPoly& g, const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  return a.div_exact(g, q) && b.div_exact(g, q);
}

}  // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.zero()) return b.primitive();
  if (b.zero()) return a.primitive();
  if (a.deg() == 0 || b.deg() == 0) return ZPoly{{mpz_class(1)}};

  mpz_class gamma = z_gcd(a.lc(), b.lc());
  int best_deg = std::numeric_limits<int>::max();
  mpz_class modulus = 1;
  std::vector<mpz_class> cand;
  bool have_cand = false;

  for (size_t pi = 0; pi < 40; ++pi) {
    Fp F{nth_prime(pi)};
    if (mpz_mod_u32(a.lc(), F.p) == 0 || mpz_mod_u32(b.lc(), F.p) == 0) continue;
    PolyP gp = PolyP::gcd_monic(zpoly_mod(a, F), zpoly_mod(b, F), F);
    if (gp.deg() == 0) return ZPoly{{mpz_class(1)}};
    if (gp.deg() > best_deg) continue;  // unlucky prime
    gp = gp.scaled(mpz_mod_u32(gamma, F.p), F);
    if (gp.deg() < best_deg) {
      best_deg = gp.deg();
      modulus = F.p;
      cand.assign(gp.c.size(), 0);
      for (size_t i = 0; i < gp.c.size(); ++i)
        cand[i] = symmetric_lift(mpz_class(gp.c[i]), mpz_class(F.p));
      have_cand = true;
      continue;
    }
    mpz_class m_new = modulus * F.p;
    std::vector<mpz_class> next(cand.size());
    bool stable = true;
    for (size_t i = 0; i < cand.size(); ++i) {
      u32 r = i < gp.c.size() ? gp.c[i] : 0;
      next[i] = crt_step(cand[i], modulus, r, F.p, m_new);
      if (next[i] != cand[i]) stable = false;
    }
    cand = std::move(next);
    modulus = m_new;
    if (stable && have_cand) {
      ZPoly g;
      g.c = cand;
      g.trim();
      g = g.primitive();
      if (!g.zero() && divides_both(g, a, b)) return g;
    }
  }
  return zpoly_gcd_prs(a, b);  // all primes exhausted without verification
}

namespace {

// Bivariate gcd of t-primitive parts modulo one prime: evaluate t, take
// univariate gcds in q, interpolate.  Returns false on bad luck with this
// prime (caller moves to the next one).
bool tz_gcd_mod_p(const TZPoly& a, const TZPoly& b, const ZPoly& gamma_t,
                  const Fp& F, std::vector<PolyP>& out) {
  std::vector<PolyP> am, bm;
  am.reserve(a.c.size());
  bm.reserve(b.c.size());
  for (const auto& x : a.c) am.push_back(zpoly_mod(x, F));
  for (const auto& x : b.c) bm.push_back(zpoly_mod(x, F));

  // Leading q-coefficients as polynomials in t, to steer clear of
  // evaluation points that drop the q-degree.
  int aq = a.q_deg(), bq = b.q_deg();
  PolyP lead_a, lead_b;
  lead_a.c.resize(am.size(), 0);
  lead_b.c.resize(bm.size(), 0);
  for (size_t i = 0; i < am.size(); ++i)
    lead_a.c[i] = am[i].deg() == aq ? am[i].c.back() : 0;
  for (size_t i = 0; i < bm.size(); ++i)
    lead_b.c[i] = bm[i].deg() == bq ? bm[i].c.back() : 0;
  lead_a.trim();
  lead_b.trim();
  if (lead_a.zero() || lead_b.zero()) return false;

  PolyP gam = zpoly_mod(gamma_t, F);
  int dt_bound = std::min(a.deg(), b.deg()) + std::max(gam.deg(), 0);
  int npoints = dt_bound + 1;

  std::vector<u32> taus;
  std::vector<PolyP> gcds;
  int best_qdeg = std::numeric_limits<int>::max();
  for (u32 tau = 1; static_cast<int>(gcds.size()) < npoints; ++tau) {
    if (tau >= F.p) return false;  // ran out of points
    if (lead_a.eval(tau, F) == 0 || lead_b.eval(tau, F) == 0) continue;
    if (gam.eval(tau, F) == 0) continue;
    // Evaluate a and b at t = tau.
    auto eval_t = [&](const std::vector<PolyP>& poly) {
      PolyP acc;
      u32 tpow = 1;
      for (const auto& coeff : poly) {
        if (!coeff.zero()) {
          if (acc.c.size() < coeff.c.size()) acc.c.resize(coeff.c.size(), 0);
          for (size_t i = 0; i < coeff.c.size(); ++i)
            acc.c[i] = F.add(acc.c[i], F.mul(coeff.c[i], tpow));
        }
        tpow = F.mul(tpow, tau);
      }
      acc.trim();
      return acc;
    };
    PolyP ga = eval_t(am);
    PolyP gb = eval_t(bm);
    if (ga.zero() || gb.zero()) continue;
    PolyP g = PolyP::gcd_monic(std::move(ga), std::move(gb), F);
    if (g.deg() == 0) {
      // Coprime at this evaluation: the bivariate pp-gcd is trivial.
      out.assign(1, PolyP{{1u}});
      return true;
    }
    if (g.deg() > best_qdeg) continue;  // unlucky tau
    if (g.deg() < best_qdeg) {
      best_qdeg = g.deg();
      taus.clear();
      gcds.clear();
    }
    taus.push_back(tau);
    gcds.push_back(g.scaled(gam.eval(tau, F), F));
  }

  // Lagrange interpolation in t of every q-coefficient.
  size_t n = taus.size();
  std::vector<std::vector<u32>> lag(n);  // lag[j] = coefficients of L_j(t)
  std::vector<u32> master{1u};           // prod (t - tau_m)
  for (u32 tau : taus) {
    std::vector<u32> next(master.size() + 1, 0);
    for (size_t i = 0; i < master.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], master[i]);
      next[i] = F.sub(next[i], F.mul(master[i], tau));
    }
    master = std::move(next);
  }
  for (size_t j = 0; j < n; ++j) {
    // Synthetic division of master by (t - tau_j).
    std::vector<u32> quo(master.size() - 1, 0);
    u32 carry = 0;
    for (size_t i = master.size(); i-- > 1;) {
      carry = F.add(master[i], F.mul(carry, taus[j]));
      quo[i - 1] = carry;
    }
    u32 denom = 1;
    for (size_t m = 0; m < n; ++m)
      if (m != j) denom = F.mul(denom, F.sub(taus[j], taus[m]));
    u32 scale = F.inv(denom);
    for (auto& x : quo) x = F.mul(x, scale);
    lag[j] = std::move(quo);
  }

  out.assign(n, PolyP{});
  size_t qn = static_cast<size_t>(best_qdeg) + 1;
  std::vector<PolyP> grid(n);  // by t-degree, each a PolyP in q
  for (size_t bdeg = 0; bdeg < n; ++bdeg) grid[bdeg].c.assign(qn, 0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t qi = 0; qi < qn; ++qi) {
      u32 y = qi < gcds[j].c.size() ? gcds[j].c[qi] : 0;
      if (y == 0) continue;
      for (size_t bdeg = 0; bdeg < lag[j].size(); ++bdeg)
        grid[bdeg].c[qi] = F.add(grid[bdeg].c[qi], F.mul(y, lag[j][bdeg]));
    }
  }
  for (auto& row : grid) row.trim();
  while (!grid.empty() && grid.back().zero()) grid.pop_back();
  out = std::move(grid);
  return !out.empty();
}

TZPoly tz_gcd_pp_prs(TZPoly pa, TZPoly pb) {
  if (pa.deg() < pb.deg()) std::swap(pa, pb);
  while (!pb.zero() && pb.deg() > 0) {
    TZPoly r = pa.prem(pb);
    if (!r.zero()) r = r.primitive();
    pa = std::move(pb);
    pb = std::move(r);
  }
  if (!pb.zero()) return TZPoly{{ZPoly{{mpz_class(1)}}}};
  return pa.primitive();
}

// Swap the roles of q and t: c[t][q] <-> c[q][t].
TZPoly transpose(const TZPoly& p) {
  TZPoly r;
  r.c.assign(static_cast<size_t>(p.q_deg()) + 1, ZPoly{});
  for (size_t b = 0; b < p.c.size(); ++b)
    for (size_t a = 0; a < p.c[b].c.size(); ++a) {
      if (p.c[b].c[a] == 0) continue;
      auto& row = r.c[a];
      if (row.c.size() <= b) row.c.resize(b + 1, mpz_class(0));
      row.c[b] = p.c[b].c[a];
    }
  for (auto& row : r.c) row.trim();
  r.trim();
  return r;
}

// Multiply by a polynomial in t with integer coefficients.
TZPoly mul_tpoly(const TZPoly& p, const ZPoly& g) {
  TZPoly r;
  if (p.zero() || g.zero()) return r;
  r.c.assign(p.c.size() + g.c.size() - 1, ZPoly{});
  for (size_t i = 0; i < g.c.size(); ++i) {
    if (g.c[i] == 0) continue;
    for (size_t b = 0; b < p.c.size(); ++b)
      r.c[b + i] = r.c[b + i] - p.c[b].scaled(-g.c[i]);
  }
  r.trim();
  return r;
}

}  // namespace

TZPoly tzpoly_gcd(const TZPoly& a, const TZPoly& b) {
  auto sign_fix = [](TZPoly g) {
    // Integer content out, highest coefficient positive.
    mpz_class ic = 0;
    for (const auto& x : g.c)
      for (const auto& v : x.c) ic = z_gcd(ic, v);
    if (ic == 0) return g;
    if (!g.zero() && g.lc().lc() < 0) ic = -ic;
    if (ic != 1)
      for (auto& x : g.c)
        for (auto& v : x.c) v /= ic;
    return g;
  };
  if (a.zero()) return sign_fix(b);
  if (b.zero()) return sign_fix(a);

  // Contents in both variable views.  The gcd factors as
  // gcd(t-contents) * gcd(q-contents) * gcd(doubly primitive parts), and the
  // evaluation-in-t main path is only complete on doubly primitive inputs.
  ZPoly ca_q = a.content();                 // common factor in Z[q]
  ZPoly cb_q = b.content();
  TZPoly pa = a.primitive();
  TZPoly pb = b.primitive();
  ZPoly ca_t = transpose(pa).content();     // common factor in Z[t]
  ZPoly cb_t = transpose(pb).content();
  pa = transpose(transpose(pa).primitive());
  pb = transpose(transpose(pb).primitive());
  ZPoly gc_q = zpoly_gcd(ca_q, cb_q);
  ZPoly gc_t = zpoly_gcd(ca_t, cb_t);

  TZPoly gpp;
  if (pa.deg() == 0 && pa.q_deg() == 0) {
    gpp = TZPoly{{ZPoly{{mpz_class(1)}}}};
  } else if (pb.deg() == 0 && pb.q_deg() == 0) {
    gpp = TZPoly{{ZPoly{{mpz_class(1)}}}};
  } else if (pa.deg() == 0 || pb.deg() == 0) {
    // One input now lives in Z[q] alone; the pp gcd is in Z[q].
    ZPoly u = pa.deg() == 0 ? pa.c[0] : pb.c[0];
    const TZPoly& other = pa.deg() == 0 ? pb : pa;
    ZPoly g = u;
    for (const auto& coeff : other.c) g = zpoly_gcd(g, coeff);
    gpp = TZPoly{{g}};
  } else if (pa.q_deg() == 0 || pb.q_deg() == 0) {
    // One input lives in Z[t] alone.
    TZPoly ta = transpose(pa);
    TZPoly tb = transpose(pb);
    ZPoly u = pa.q_deg() == 0 ? ta.c[0] : tb.c[0];
    const TZPoly& other = pa.q_deg() == 0 ? tb : ta;
    ZPoly g = u;
    for (const auto& coeff : other.c) g = zpoly_gcd(g, coeff);
    gpp = transpose(TZPoly{{g}});
  } else {
    // Leading q-coefficients as t-polynomials over Z.
    auto lead_t = [](const TZPoly& p) {
      int qd = p.q_deg();
      ZPoly r;
      r.c.assign(p.c.size(), mpz_class(0));
      for (size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i].deg() == qd) r.c[i] = p.c[i].lc();
      r.trim();
      return r;
    };
    ZPoly gamma_t = zpoly_gcd(lead_t(pa), lead_t(pb));

    mpz_class modulus = 1;
    std::vector<std::vector<mpz_class>> cand;  // [t][q]
    bool have_cand = false;
    std::pair<int, int> best{std::numeric_limits<int>::max(),
                             std::numeric_limits<int>::max()};
    bool solved = false;

    for (size_t pi = 0; pi < 30 && !solved; ++pi) {
      Fp F{nth_prime(pi)};
      std::vector<PolyP> gp;
      if (!tz_gcd_mod_p(pa, pb, gamma_t, F, gp)) continue;
      std::pair<int, int> deg_pair{gp.empty() ? -1 : gp[0].deg(),
                                   static_cast<int>(gp.size()) - 1};
      // deg in q actually needs the max over rows:
      int qd = -1;
      for (const auto& row : gp) qd = std::max(qd, row.deg());
      deg_pair.first = qd;
      if (qd == 0 && gp.size() == 1) {
        gpp = TZPoly{{ZPoly{{mpz_class(1)}}}};
        solved = true;
        break;
      }
      if (have_cand && deg_pair > best) continue;  // unlucky prime
      if (!have_cand || deg_pair < best) {
        best = deg_pair;
        modulus = F.p;
        cand.assign(gp.size(), {});
        for (size_t bdeg = 0; bdeg < gp.size(); ++bdeg) {
          cand[bdeg].resize(gp[bdeg].c.size());
          for (size_t qi = 0; qi < gp[bdeg].c.size(); ++qi)
            cand[bdeg][qi] =
                symmetric_lift(mpz_class(gp[bdeg].c[qi]), mpz_class(F.p));
        }
        have_cand = true;
        continue;
      }
      mpz_class m_new = modulus * F.p;
      bool stable = true;
      for (size_t bdeg = 0; bdeg < cand.size(); ++bdeg) {
        for (size_t qi = 0; qi < cand[bdeg].size(); ++qi) {
          u32 r = 0;
          if (bdeg < gp.size() && qi < gp[bdeg].c.size()) r = gp[bdeg].c[qi];
          mpz_class nx = crt_step(cand[bdeg][qi], modulus, r, F.p, m_new);
          if (nx != cand[bdeg][qi]) stable = false;
          cand[bdeg][qi] = nx;
        }
      }
      modulus = m_new;
      if (stable) {
        TZPoly g;
        g.c.resize(cand.size());
        for (size_t bdeg = 0; bdeg < cand.size(); ++bdeg) {
          g.c[bdeg].c = cand[bdeg];
          g.c[bdeg].trim();
        }
        g.trim();
        if (!g.zero()) {
          // The interpolated candidate is gamma-scaled: remove the q-view
          // content it introduces, then check honest divisibility.
          g = sign_fix(transpose(transpose(g).primitive()).primitive());
          TZPoly q1, q2;
          if (pa.div_exact(g, q1) && pb.div_exact(g, q2)) {
            gpp = std::move(g);
            solved = true;
          }
        }
      }
    }
    if (!solved) gpp = tz_gcd_pp_prs(pa, pb);
  }

  for (auto& coeff : gpp.c) coeff = coeff * gc_q;
  gpp = mul_tpoly(gpp, gc_t);
  return sign_fix(gpp);
}

}  // namespace homrep::detail
