// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plcaut/ff.hpp"
#include "plcaut/projmatrix.hpp"

namespace plcaut {

// Monomial X^i Y^j Z^k.
struct Monomial {
  unsigned i = 0, j = 0, k = 0;

  unsigned degree() const { return i + j + k; }
  // Largest single exponent; the highest-exponent terms form the core of a
  // form and drive the descent classification.
  unsigned exponent() const;

  auto operator<=>(const Monomial&) const = default;
};

// Homogeneous form of fixed degree over F_p.  Coefficients are nonzero
// canonical residues; the map never stores zeros.
struct HomPoly {
  unsigned d = 0;
  std::map<Monomial, uint32_t> coeffs;

  bool zero() const { return coeffs.empty(); }
};

// Builds a form after validating that every term has total degree d; terms
// are reduced mod p, repeated monomials accumulate, zeros drop out.
HomPoly make_hompoly(
    unsigned d, const std::vector<std::pair<Monomial, int64_t>>& terms,
    const PrimeField& F);

HomPoly hp_add(const HomPoly& a, const HomPoly& b, const PrimeField& F);
HomPoly hp_scale(const HomPoly& a, uint32_t c, const PrimeField& F);
HomPoly hp_mul(const HomPoly& a, const HomPoly& b, const PrimeField& F);
bool hp_eq(const HomPoly& a, const HomPoly& b);

// The three partial derivatives, each homogeneous of degree d-1.
std::array<HomPoly, 3> partials(const HomPoly& f, const PrimeField& F);

uint32_t eval_point(const HomPoly& f, const PrimeField& F,
                    const std::array<uint32_t, 3>& v);
ExtField::Elem eval_point_ext(const HomPoly& f, const ExtField& K,
                              const std::array<ExtField::Elem, 3>& v);

// Substitution f(M v): row r of M is the linear form replacing variable r.
HomPoly apply_proj(const HomPoly& f, const ProjMatrix& M, const PrimeField& F);

// The scalar lambda with f(M v) = lambda f(v), if one exists.
std::optional<uint32_t> is_invariant(const HomPoly& f, const ProjMatrix& M,
                                     const PrimeField& F);

// Terms of maximal single exponent.
HomPoly core(const HomPoly& f);

// Resultant of f and g with respect to Z, dehomogenized at X = 1, Y = T.
// Index j of the output holds the coefficient of T^j.  Returns the empty
// vector when either input is the zero form.
std::vector<uint32_t> resultant_z(const HomPoly& f, const HomPoly& g,
                                  const PrimeField& F);

// A singular point together with the extension it lives in.  The modulus
// describes F_p[t]/(modulus); coordinates are elements of that field, not
// all zero.
struct SingularWitness {
  unsigned ext_degree = 1;
  std::vector<uint32_t> modulus;
  std::array<ExtField::Elem, 3> point;
};

struct SmoothResult {
  bool smooth = false;
  std::optional<SingularWitness> witness;
};

// Decides smoothness of the projective plane curve f = 0 over the algebraic
// closure of F_p.  Requires gcd(d, p) = 1 so that the Euler relation makes
// the three partials the full singularity test.  On a singular curve the
// witness is an explicit verified singular point in the smallest extension
// the search visits.
SmoothResult is_smooth(const HomPoly& f, const PrimeField& F);

// Brute-force scan of P^2(F_{p^e}) for singular points.  Intended as an
// independent cross-check of is_smooth on small fields.
std::vector<std::array<ExtField::Elem, 3>> singular_points_scan(
    const HomPoly& f, const PrimeField& F, unsigned e);

}  // namespace plcaut
