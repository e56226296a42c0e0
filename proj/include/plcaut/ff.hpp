// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plcaut {

// Raised when a field-level precondition fails (bad characteristic, missing
// roots of unity, exhausted search budgets inside factoring routines).
struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(uint64_t n);

// Smallest prime p with p > (d-1)(d-2)+1 and p = 1 mod lcm(orders).
// The lower bound keeps point counts on a smooth plane curve of degree d
// positive by the Weil estimate, and the congruence guarantees that every
// requested root of unity lives in the prime field.
uint32_t select_prime(uint32_t d, const std::vector<uint32_t>& orders);

// F_p for a prime p small enough that a full discrete-log table is cheap.
// Elements are canonical residues 0..p-1 stored as uint32_t.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }
  uint32_t generator() const { return g_; }

  uint32_t reduce(int64_t v) const;
  uint32_t add(uint32_t x, uint32_t y) const;
  uint32_t sub(uint32_t x, uint32_t y) const;
  uint32_t neg(uint32_t x) const;
  uint32_t mul(uint32_t x, uint32_t y) const;
  uint32_t inv(uint32_t x) const;
  uint32_t div(uint32_t x, uint32_t y) const;
  uint32_t pow(uint32_t base, uint64_t e) const;

  // Index of x in the cyclic group generated by generator(); throws on 0.
  uint32_t discrete_log(uint32_t x) const;
  // Multiplicative order of a nonzero element.
  uint32_t order_of(uint32_t x) const;
  // A primitive m-th root of unity; throws FieldError unless m divides p-1.
  uint32_t root_of_unity(uint32_t m) const;

 private:
  uint32_t p_;
  uint32_t g_;
  std::vector<uint32_t> log_;
};

// F_{p^e} presented as F_p[t]/(modulus) with modulus monic irreducible of
// degree e.  Elements are coefficient vectors of length <= e (low degree
// first); polynomials over the extension are vectors of elements, again low
// degree first and trimmed of leading zeros.
class ExtField {
 public:
  using Elem = std::vector<uint32_t>;
  using Poly = std::vector<Elem>;

  // Picks the lexicographically smallest monic irreducible of degree e.
  ExtField(const PrimeField& base, unsigned e);
  // Uses the given monic irreducible modulus (low degree first, length e+1).
  ExtField(const PrimeField& base, std::vector<uint32_t> modulus);

  const PrimeField& base() const { return base_; }
  unsigned e() const { return e_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }
  // p^e, saturating at UINT64_MAX for oversized extensions.
  uint64_t q() const;

  Elem zero() const;
  Elem one() const;
  Elem t() const;
  Elem from_base(uint32_t c) const;
  // Element whose coefficient vector is the base-p expansion of idx.
  Elem from_index(uint64_t idx) const;
  uint64_t to_index(const Elem& x) const;
  bool in_base(const Elem& x) const;
  uint32_t to_base(const Elem& x) const;
  bool is_zero(const Elem& x) const;
  bool is_one(const Elem& x) const;
  bool eq(const Elem& x, const Elem& y) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  Elem div(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, uint64_t e) const;
  // Frobenius x -> x^p.
  Elem frob(const Elem& x) const;

  // Polynomial layer over this field.
  static int p_deg(const Poly& f);
  Poly p_trim(Poly f) const;
  Poly p_add(const Poly& f, const Poly& g) const;
  Poly p_sub(const Poly& f, const Poly& g) const;
  Poly p_scale(const Poly& f, const Elem& c) const;
  Poly p_mul(const Poly& f, const Poly& g) const;
  Poly p_rem(const Poly& f, const Poly& g) const;
  Poly p_quot(const Poly& f, const Poly& g) const;
  // Monic gcd.
  Poly p_gcd(Poly f, Poly g) const;
  Poly p_deriv(const Poly& f) const;
  Elem p_eval(const Poly& f, const Elem& x) const;
  Poly p_monic(Poly f) const;
  Poly p_powmod(const Poly& base, uint64_t e, const Poly& mod) const;
  // x^(p^k) mod f via k successive p-th powers.
  Poly p_frobmod(const Poly& base, unsigned k, const Poly& mod) const;
  // Product of the distinct irreducible factors, monic.
  Poly p_radical(const Poly& f) const;

  // All roots of f lying in this field, sorted by to_index.
  std::vector<Elem> roots(const Poly& f) const;
  // Degree of the smallest irreducible factor of a nonconstant f.
  unsigned min_factor_degree(const Poly& f) const;
  // Irreducible factors of a squarefree f, sorted by (degree, coeff indexes).
  std::vector<Poly> factor_squarefree(const Poly& f) const;

  // Coefficient-wise embedding of a polynomial over the base prime field
  // into this extension, and the partial inverse.
  Poly lift(const std::vector<uint32_t>& f) const;
  std::vector<uint32_t> lower(const Poly& f) const;

 private:
  PrimeField base_;
  unsigned e_;
  std::vector<uint32_t> mod_;

  Elem reduce_raw(std::vector<uint64_t> acc) const;
};

// Deterministic 64-bit stream used for all sampling in the project.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n);
};

}  // namespace plcaut
