// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/ff.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace plcaut {

namespace {

// Dense univariate polynomials over F_p, low degree first, trailing zeros
// stripped.  These file-local helpers bootstrap the irreducible-modulus
// search and element inversion before an ExtField exists.
using FpPoly = std::vector<uint32_t>;

FpPoly fp_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

uint32_t fp_powint(uint32_t base, uint64_t e, uint32_t p) {
  uint64_t r = 1, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t fp_inv_scalar(uint32_t x, uint32_t p) {
  if (x % p == 0) throw FieldError("division by zero in prime field");
  return fp_powint(x, p - 2, p);
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<uint32_t>((x + p - y) % p);
  }
  return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
  }
  FpPoly r(acc.begin(), acc.end());
  return fp_trim(std::move(r));
}

void fp_divmod(FpPoly a, const FpPoly& b, uint32_t p, FpPoly* quot,
               FpPoly* rem) {
  if (b.empty()) throw FieldError("division by zero polynomial");
  FpPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  uint32_t lead_inv = fp_inv_scalar(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    size_t shift = a.size() - b.size();
    uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) *
                                       lead_inv % p);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
    }
    a = fp_trim(std::move(a));
  }
  if (quot) *quot = fp_trim(std::move(q));
  if (rem) *rem = std::move(a);
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint32_t p) {
  FpPoly r;
  fp_divmod(std::move(a), b, p, nullptr, &r);
  return r;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod,
                 uint32_t p) {
  return fp_rem(fp_mul(a, b, p), mod, p);
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& mod, uint32_t p) {
  FpPoly r = {1};
  base = fp_rem(std::move(base), mod, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_monic(FpPoly f, uint32_t p) {
  if (f.empty() || f.back() == 1) return f;
  uint32_t c = fp_inv_scalar(f.back(), p);
  for (auto& x : f) x = static_cast<uint32_t>(static_cast<uint64_t>(x) * c % p);
  return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

// Inverse of a modulo mod in F_p[x], by the extended Euclidean algorithm.
FpPoly fp_invmod(const FpPoly& a, const FpPoly& mod, uint32_t p) {
  FpPoly r0 = mod, r1 = fp_rem(a, mod, p);
  FpPoly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    FpPoly q, r2;
    fp_divmod(r0, r1, p, &q, &r2);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (fp_deg(r0) != 0) throw FieldError("element is not invertible");
  uint32_t c = fp_inv_scalar(r0[0], p);
  FpPoly out = s0;
  for (auto& x : out) {
    x = static_cast<uint32_t>(static_cast<uint64_t>(x) * c % p);
  }
  return fp_rem(fp_trim(std::move(out)), mod, p);
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin irreducibility test: f of degree n is irreducible over F_p iff
// x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
bool fp_is_irreducible(const FpPoly& f, uint32_t p) {
  int n = fp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FpPoly x = {0, 1};
  FpPoly r = fp_rem(x, f, p);
  for (int i = 0; i < n; ++i) r = fp_powmod(std::move(r), p, f, p);
  if (!fp_sub(r, fp_rem(x, f, p), p).empty()) return false;
  for (uint64_t q : prime_divisors(static_cast<uint64_t>(n))) {
    FpPoly r2 = fp_rem(x, f, p);
    for (uint64_t i = 0; i < static_cast<uint64_t>(n) / q; ++i) {
      r2 = fp_powmod(std::move(r2), p, f, p);
    }
    FpPoly g = fp_gcd(fp_sub(r2, x, p), f, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) throw FieldError("lcm of zero");
  return a / std::gcd(a, b) * b;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

uint32_t select_prime(uint32_t d, const std::vector<uint32_t>& orders) {
  uint64_t l = 1;
  for (uint32_t m : orders) {
    if (m == 0) throw FieldError("order zero in select_prime");
    l = lcm_u64(l, m);
  }
  uint64_t bound = static_cast<uint64_t>(d - 1) * (d - 2) + 1;
  uint64_t start = bound + 1;
  // Advance to the first candidate of the residue class 1 mod l.
  uint64_t n = start;
  if (l > 1) {
    uint64_t rem = n % l;
    if (rem != 1) n += (rem < 1 ? 1 - rem : l + 1 - rem);
  }
  for (;; n += (l > 1 ? l : 1)) {
    if (n > UINT32_MAX) throw FieldError("no suitable prime below 2^32");
    if (is_prime(n)) return static_cast<uint32_t>(n);
  }
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw FieldError("characteristic must be prime");
  if (p == 2) {
    g_ = 1;
  } else {
    auto divisors = prime_divisors(p - 1);
    g_ = 0;
    for (uint32_t c = 2; c < p; ++c) {
      bool primitive = true;
      for (uint64_t q : divisors) {
        if (fp_powint(c, (p - 1) / q, p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g_ = c;
        break;
      }
    }
    if (g_ == 0) throw FieldError("no primitive root found");
  }
  log_.assign(p_, 0);
  uint32_t x = 1;
  for (uint32_t k = 0; k + 1 < p_; ++k) {
    log_[x] = k;
    x = static_cast<uint32_t>(static_cast<uint64_t>(x) * g_ % p_);
  }
}

uint32_t PrimeField::reduce(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

uint32_t PrimeField::add(uint32_t x, uint32_t y) const {
  uint32_t s = x + y;
  return s >= p_ ? s - p_ : s;
}

uint32_t PrimeField::sub(uint32_t x, uint32_t y) const {
  return x >= y ? x - y : x + p_ - y;
}

uint32_t PrimeField::neg(uint32_t x) const { return x == 0 ? 0 : p_ - x; }

uint32_t PrimeField::mul(uint32_t x, uint32_t y) const {
  return static_cast<uint32_t>(static_cast<uint64_t>(x) * y % p_);
}

uint32_t PrimeField::inv(uint32_t x) const {
  if (x % p_ == 0) throw FieldError("division by zero in prime field");
  return pow(x, p_ - 2);
}

uint32_t PrimeField::div(uint32_t x, uint32_t y) const {
  return mul(x, inv(y));
}

uint32_t PrimeField::pow(uint32_t base, uint64_t e) const {
  return fp_powint(base % p_, e, p_);
}

uint32_t PrimeField::discrete_log(uint32_t x) const {
  if (x % p_ == 0) throw FieldError("discrete log of zero");
  return log_[x % p_];
}

uint32_t PrimeField::order_of(uint32_t x) const {
  uint32_t k = discrete_log(x);
  return (p_ - 1) / std::gcd(p_ - 1, k);
}

uint32_t PrimeField::root_of_unity(uint32_t m) const {
  if (m == 0 || (p_ - 1) % m != 0) {
    throw FieldError("field has no primitive root of unity of that order");
  }
  return pow(g_, (p_ - 1) / m);
}

ExtField::ExtField(const PrimeField& base, unsigned e) : base_(base), e_(e) {
  if (e_ == 0) throw FieldError("extension degree must be positive");
  uint32_t p = base_.p();
  // Scan monic candidates x^e + c in index order and keep the first
  // irreducible one, so the modulus is reproducible across runs.
  for (uint64_t idx = 0;; ++idx) {
    FpPoly f(e_ + 1, 0);
    uint64_t v = idx;
    for (unsigned i = 0; i < e_; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    if (v != 0) throw FieldError("no irreducible modulus found");
    f[e_] = 1;
    if (fp_is_irreducible(f, p)) {
      mod_ = std::move(f);
      break;
    }
  }
}

ExtField::ExtField(const PrimeField& base, std::vector<uint32_t> modulus)
    : base_(base), e_(0), mod_(std::move(modulus)) {
  if (mod_.size() < 2 || mod_.back() != 1) {
    throw FieldError("modulus must be monic of positive degree");
  }
  for (uint32_t c : mod_) {
    if (c >= base_.p()) throw FieldError("modulus coefficient out of range");
  }
  if (!fp_is_irreducible(mod_, base_.p())) {
    throw FieldError("modulus is not irreducible");
  }
  e_ = static_cast<unsigned>(mod_.size() - 1);
}

uint64_t ExtField::q() const {
  uint64_t r = 1;
  for (unsigned i = 0; i < e_; ++i) {
    if (r > UINT64_MAX / base_.p()) return UINT64_MAX;
    r *= base_.p();
  }
  return r;
}

ExtField::Elem ExtField::zero() const { return Elem(e_, 0); }

ExtField::Elem ExtField::one() const {
  Elem x(e_, 0);
  x[0] = 1;
  return x;
}

ExtField::Elem ExtField::t() const {
  Elem x(e_, 0);
  if (e_ == 1) {
    // In a degree-1 extension the class of t is the constant -mod[0].
    x[0] = base_.neg(mod_[0]);
  } else {
    x[1] = 1;
  }
  return x;
}

ExtField::Elem ExtField::from_base(uint32_t c) const {
  Elem x(e_, 0);
  x[0] = c % base_.p();
  return x;
}

ExtField::Elem ExtField::from_index(uint64_t idx) const {
  Elem x(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    x[i] = static_cast<uint32_t>(idx % base_.p());
    idx /= base_.p();
  }
  return x;
}

uint64_t ExtField::to_index(const Elem& x) const {
  uint64_t idx = 0;
  for (size_t i = x.size(); i-- > 0;) {
    idx = idx * base_.p() + x[i];
  }
  return idx;
}

bool ExtField::in_base(const Elem& x) const {
  for (size_t i = 1; i < x.size(); ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

uint32_t ExtField::to_base(const Elem& x) const {
  if (!in_base(x)) throw FieldError("element lies outside the prime field");
  return x.empty() ? 0 : x[0];
}

bool ExtField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](uint32_t c) { return c == 0; });
}

bool ExtField::is_one(const Elem& x) const {
  if (x.empty() || x[0] != 1) return false;
  return std::all_of(x.begin() + 1, x.end(),
                     [](uint32_t c) { return c == 0; });
}

bool ExtField::eq(const Elem& x, const Elem& y) const {
  size_t n = std::max(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    uint32_t a = i < x.size() ? x[i] : 0;
    uint32_t b = i < y.size() ? y[i] : 0;
    if (a != b) return false;
  }
  return true;
}

ExtField::Elem ExtField::add(const Elem& x, const Elem& y) const {
  Elem r(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    uint32_t a = i < x.size() ? x[i] : 0;
    uint32_t b = i < y.size() ? y[i] : 0;
    r[i] = base_.add(a, b);
  }
  return r;
}

ExtField::Elem ExtField::sub(const Elem& x, const Elem& y) const {
  Elem r(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    uint32_t a = i < x.size() ? x[i] : 0;
    uint32_t b = i < y.size() ? y[i] : 0;
    r[i] = base_.sub(a, b);
  }
  return r;
}

ExtField::Elem ExtField::neg(const Elem& x) const {
  Elem r(e_, 0);
  for (unsigned i = 0; i < e_ && i < x.size(); ++i) r[i] = base_.neg(x[i]);
  return r;
}

ExtField::Elem ExtField::reduce_raw(std::vector<uint64_t> acc) const {
  uint32_t p = base_.p();
  std::vector<uint32_t> r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    r[i] = static_cast<uint32_t>(acc[i] % p);
  }
  for (size_t i = r.size(); i-- > e_;) {
    uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (unsigned j = 0; j < e_; ++j) {
      uint64_t sub = static_cast<uint64_t>(c) * mod_[j] % p;
      r[i - e_ + j] =
          static_cast<uint32_t>((r[i - e_ + j] + p - sub) % p);
    }
  }
  r.resize(e_, 0);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& x, const Elem& y) const {
  std::vector<uint64_t> acc(2 * e_ - 1, 0);
  uint32_t p = base_.p();
  for (size_t i = 0; i < x.size() && i < e_; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size() && j < e_; ++j) {
      acc[i + j] = (acc[i + j] + static_cast<uint64_t>(x[i]) * y[j]) % p;
    }
  }
  return reduce_raw(std::move(acc));
}

ExtField::Elem ExtField::inv(const Elem& x) const {
  FpPoly a(x.begin(), x.end());
  a = fp_trim(std::move(a));
  if (a.empty()) throw FieldError("division by zero in extension field");
  FpPoly u = fp_invmod(a, mod_, base_.p());
  Elem r(e_, 0);
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i];
  return r;
}

ExtField::Elem ExtField::div(const Elem& x, const Elem& y) const {
  return mul(x, inv(y));
}

ExtField::Elem ExtField::pow(const Elem& x, uint64_t e) const {
  Elem r = one();
  Elem b = x;
  b.resize(e_, 0);
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

ExtField::Elem ExtField::frob(const Elem& x) const {
  return pow(x, base_.p());
}

int ExtField::p_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

ExtField::Poly ExtField::p_trim(Poly f) const {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
  return f;
}

ExtField::Poly ExtField::p_add(const Poly& f, const Poly& g) const {
  Poly r(std::max(f.size(), g.size()), zero());
  for (size_t i = 0; i < r.size(); ++i) {
    Elem a = i < f.size() ? f[i] : zero();
    Elem b = i < g.size() ? g[i] : zero();
    r[i] = add(a, b);
  }
  return p_trim(std::move(r));
}

ExtField::Poly ExtField::p_sub(const Poly& f, const Poly& g) const {
  Poly r(std::max(f.size(), g.size()), zero());
  for (size_t i = 0; i < r.size(); ++i) {
    Elem a = i < f.size() ? f[i] : zero();
    Elem b = i < g.size() ? g[i] : zero();
    r[i] = sub(a, b);
  }
  return p_trim(std::move(r));
}

ExtField::Poly ExtField::p_scale(const Poly& f, const Elem& c) const {
  Poly r(f.size(), zero());
  for (size_t i = 0; i < f.size(); ++i) r[i] = mul(f[i], c);
  return p_trim(std::move(r));
}

ExtField::Poly ExtField::p_mul(const Poly& f, const Poly& g) const {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, zero());
  for (size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f[i])) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      r[i + j] = add(r[i + j], mul(f[i], g[j]));
    }
  }
  return p_trim(std::move(r));
}

ExtField::Poly ExtField::p_rem(const Poly& f, const Poly& g) const {
  Poly a = p_trim(f);
  Poly b = p_trim(g);
  if (b.empty()) throw FieldError("division by zero polynomial");
  Elem lead_inv = inv(b.back());
  while (p_deg(a) >= p_deg(b)) {
    size_t shift = a.size() - b.size();
    Elem c = mul(a.back(), lead_inv);
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = sub(a[shift + i], mul(c, b[i]));
    }
    a = p_trim(std::move(a));
  }
  return a;
}

ExtField::Poly ExtField::p_quot(const Poly& f, const Poly& g) const {
  Poly a = p_trim(f);
  Poly b = p_trim(g);
  if (b.empty()) throw FieldError("division by zero polynomial");
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, zero());
  Elem lead_inv = inv(b.back());
  while (p_deg(a) >= p_deg(b)) {
    size_t shift = a.size() - b.size();
    Elem c = mul(a.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = sub(a[shift + i], mul(c, b[i]));
    }
    a = p_trim(std::move(a));
  }
  return p_trim(std::move(q));
}

ExtField::Poly ExtField::p_monic(Poly f) const {
  f = p_trim(std::move(f));
  if (f.empty() || is_one(f.back())) return f;
  Elem c = inv(f.back());
  for (auto& x : f) x = mul(x, c);
  return f;
}

ExtField::Poly ExtField::p_gcd(Poly f, Poly g) const {
  f = p_trim(std::move(f));
  g = p_trim(std::move(g));
  while (!g.empty()) {
    Poly r = p_rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return p_monic(std::move(f));
}

ExtField::Poly ExtField::p_deriv(const Poly& f) const {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1, zero());
  for (size_t i = 1; i < f.size(); ++i) {
    uint32_t c = base_.reduce(static_cast<int64_t>(i));
    r[i - 1] = mul(f[i], from_base(c));
  }
  return p_trim(std::move(r));
}

ExtField::Elem ExtField::p_eval(const Poly& f, const Elem& x) const {
  Elem acc = zero();
  for (size_t i = f.size(); i-- > 0;) {
    acc = add(mul(acc, x), f[i]);
  }
  return acc;
}

ExtField::Poly ExtField::p_powmod(const Poly& base, uint64_t e,
                                  const Poly& mod) const {
  Poly r = {one()};
  Poly b = p_rem(base, mod);
  while (e) {
    if (e & 1) r = p_rem(p_mul(r, b), mod);
    b = p_rem(p_mul(b, b), mod);
    e >>= 1;
  }
  return r;
}

ExtField::Poly ExtField::p_frobmod(const Poly& base, unsigned k,
                                   const Poly& mod) const {
  Poly r = p_rem(base, mod);
  for (unsigned i = 0; i < k; ++i) {
    r = p_powmod(r, base_.p(), mod);
  }
  return r;
}

ExtField::Poly ExtField::p_radical(const Poly& f) const {
  Poly g = p_monic(f);
  if (g.empty()) throw FieldError("radical of the zero polynomial");
  if (p_deg(g) == 0) return {one()};
  Poly d = p_deriv(g);
  if (d.empty()) {
    // Every exponent is divisible by p, so g is a p-th power; extract the
    // p-th root coefficient-wise and recurse.  The coefficient root is
    // Frobenius applied e-1 times.
    uint32_t p = base_.p();
    Poly root((g.size() - 1) / p + 1, zero());
    for (size_t j = 0; j < root.size(); ++j) {
      Elem c = g[j * p];
      for (unsigned i = 0; i + 1 < e_; ++i) c = frob(c);
      root[j] = c;
    }
    return p_radical(root);
  }
  Poly common = p_gcd(g, d);
  Poly w = p_quot(g, common);
  if (p_deg(common) == 0) return w;
  Poly rest = p_radical(common);
  // Radical of g is the least common multiple of w and rest.
  Poly overlap = p_gcd(w, rest);
  return p_monic(p_quot(p_mul(w, rest), overlap));
}

namespace {

uint64_t edf_attempt_cap(uint64_t q) {
  return q > (UINT64_MAX - 100) / 4 ? UINT64_MAX : 4 * q + 100;
}

}  // namespace

// Splits a monic product of distinct degree-k irreducibles into its factors.
// Uses deterministic attempt elements first, then a fixed pseudorandom
// stream, so results are reproducible.
static void split_equal_degree(const ExtField& K, ExtField::Poly h, unsigned k,
                               std::vector<ExtField::Poly>* out) {
  using Poly = ExtField::Poly;
  int deg = ExtField::p_deg(h);
  if (deg <= 0) return;
  if (static_cast<unsigned>(deg) == k) {
    out->push_back(std::move(h));
    return;
  }
  uint32_t p = K.base().p();
  uint64_t cap = edf_attempt_cap(K.q());
  SplitMix64 rng(0x5EEDF00DULL + k);
  for (uint64_t attempt = 0;; ++attempt) {
    if (attempt > cap) {
      throw FieldError("equal-degree factorisation exhausted its attempts");
    }
    // Attempt polynomial: x + a for small indexes, then random coefficients
    // of degree below 2k.
    Poly u;
    if (attempt < K.q()) {
      u = {K.from_index(attempt), K.one()};
    } else {
      u.assign(2 * k, K.zero());
      for (auto& c : u) c = K.from_index(rng.below(K.q()));
      u = K.p_trim(std::move(u));
      if (ExtField::p_deg(u) < 1) continue;
    }
    Poly base = K.p_rem(u, h);
    if (base.empty()) continue;
    Poly split;
    if (p == 2) {
      // Trace map over F_2: sum of the 2^i-th powers.
      Poly s = base;
      Poly cur = base;
      uint64_t chain = static_cast<uint64_t>(K.e()) * k;
      for (uint64_t i = 1; i < chain; ++i) {
        cur = K.p_powmod(cur, 2, h);
        s = K.p_add(s, cur);
      }
      split = K.p_gcd(s, h);
    } else {
      // Norm chain: prod of the p^i-th powers equals u^((q^k-1)/(p-1)),
      // and raising to (p-1)/2 gives u^((q^k-1)/2) without any oversized
      // exponent arithmetic.
      Poly cur = base;
      Poly prod = base;
      uint64_t chain = static_cast<uint64_t>(K.e()) * k;
      for (uint64_t i = 1; i < chain; ++i) {
        cur = K.p_powmod(cur, p, h);
        prod = K.p_rem(K.p_mul(prod, cur), h);
      }
      Poly s = K.p_powmod(prod, (p - 1) / 2, h);
      split = K.p_gcd(K.p_sub(s, {K.one()}), h);
    }
    int dsplit = ExtField::p_deg(split);
    if (dsplit > 0 && dsplit < ExtField::p_deg(h)) {
      Poly other = K.p_quot(h, split);
      split_equal_degree(K, std::move(split), k, out);
      split_equal_degree(K, std::move(other), k, out);
      return;
    }
  }
}

std::vector<ExtField::Elem> ExtField::roots(const Poly& f) const {
  Poly g = p_trim(f);
  if (g.empty()) throw std::invalid_argument("roots of the zero polynomial");
  if (p_deg(g) == 0) return {};
  g = p_radical(g);
  Poly x = {zero(), one()};
  Poly xq = p_frobmod(x, e_, g);
  Poly lin = p_gcd(p_sub(xq, x), g);
  if (p_deg(lin) <= 0) return {};
  std::vector<Poly> factors;
  split_equal_degree(*this, lin, 1, &factors);
  std::vector<Elem> out;
  out.reserve(factors.size());
  for (const Poly& fac : factors) {
    out.push_back(neg(fac[0]));
  }
  std::sort(out.begin(), out.end(), [this](const Elem& a, const Elem& b) {
    return to_index(a) < to_index(b);
  });
  return out;
}

unsigned ExtField::min_factor_degree(const Poly& f) const {
  Poly g = p_monic(f);
  int n = p_deg(g);
  if (n <= 0) throw std::invalid_argument("constant polynomial");
  Poly x = {zero(), one()};
  Poly r = p_rem(x, g);
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(n); ++k) {
    r = p_frobmod(r, e_, g);
    Poly common = p_gcd(p_sub(r, x), g);
    if (p_deg(common) > 0) return k;
  }
  return static_cast<unsigned>(n);
}

std::vector<ExtField::Poly> ExtField::factor_squarefree(const Poly& f) const {
  Poly g = p_monic(f);
  if (g.empty()) throw std::invalid_argument("factor of the zero polynomial");
  std::vector<Poly> out;
  if (p_deg(g) == 0) return out;
  Poly x = {zero(), one()};
  Poly r = p_rem(x, g);
  unsigned k = 0;
  while (p_deg(g) >= 1) {
    ++k;
    if (2 * k > static_cast<unsigned>(p_deg(g))) {
      out.push_back(g);
      break;
    }
    r = p_frobmod(r, e_, g);
    Poly same = p_gcd(p_sub(r, x), g);
    if (p_deg(same) > 0) {
      split_equal_degree(*this, same, k, &out);
      g = p_quot(g, same);
      r = p_rem(r, g);
    }
  }
  std::sort(out.begin(), out.end(), [this](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t ia = to_index(a[i]), ib = to_index(b[i]);
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  return out;
}

ExtField::Poly ExtField::lift(const std::vector<uint32_t>& f) const {
  Poly r;
  r.reserve(f.size());
  for (uint32_t c : f) r.push_back(from_base(c % base_.p()));
  return p_trim(std::move(r));
}

std::vector<uint32_t> ExtField::lower(const Poly& f) const {
  std::vector<uint32_t> r;
  r.reserve(f.size());
  for (const Elem& c : f) r.push_back(to_base(c));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

uint64_t SplitMix64::next() {
  state += 0x9E3779B97f4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) {
  return n == 0 ? 0 : next() % n;
}

}  // namespace plcaut
