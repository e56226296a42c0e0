// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plcaut/poly.hpp"
#include "plcaut/types.hpp"

namespace plcaut {

// Role of a coefficient slot in a parametric equation family.
//
// Unit slots are pinned to 1: they are the terms of maximal exponent, whose
// coefficients a change of coordinates normalizes away.  NonzeroParam slots
// hold the classical alpha parameters: a slot is promoted to NonzeroParam
// when its monomial is the only one reaching degree d-1 in some variable,
// because a curve whose coefficient there vanishes acquires a singular point
// at the corresponding coordinate vertex.  Every other slot is a FreeParam
// (beta), allowed to be zero.
enum class CoefficientKind { Unit, NonzeroParam, FreeParam };

// A cyclic type together with its invariant monomials and the role of each
// coefficient.  Entries are sorted by monomial.
struct EquationFamily {
  CyclicType ctype;
  std::vector<std::pair<Monomial, CoefficientKind>> entries;
};

// A concrete member of a family over a prime field, with the assignment
// that produced it.
struct PlaneCurve {
  HomPoly form;
  EquationFamily family;
  std::map<Monomial, uint32_t> values;
};

// Thrown when sample_smooth finds no smooth member within its trial budget.
class SampleExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classifies coefficient slots for a family's support.
EquationFamily make_family(const TypeFamily& fam);

// True when a single variable divides every monomial of the support, so
// every specialization factors and no member is a smooth curve.
bool is_forced_reducible(const EquationFamily& fam);

// Instantiates the family over F_p.  Keys of `values` must be support
// monomials; Unit slots may only be set to 1, NonzeroParam slots default to
// 1 and reject 0, FreeParam slots default to 0.  The field must contain the
// m-th roots of unity so the construction can verify invariance under
// diag(1, xi^a, xi^b); a failed verification reports a library bug.
PlaneCurve specialize(const EquationFamily& fam,
                      const std::map<Monomial, int64_t>& values,
                      const PrimeField& F);

// Draws parameters pseudo-randomly (NonzeroParam uniform in F_p*, FreeParam
// uniform in F_p) until a specialization passes is_smooth, for at most
// `trials` draws.  Deterministic for a fixed seed.
PlaneCurve sample_smooth(const EquationFamily& fam, const PrimeField& F,
                         unsigned trials, uint64_t seed);

// Whether the core of the form is a Fermat curve X^d+Y^d+Z^d, a Klein curve
// X^(d-1)Y + Y^(d-1)Z + Z^(d-1)X, or neither, up to coordinate permutation
// and scaling.
enum class CoreKind { FermatCore, KleinCore, Other };

CoreKind descendant_core(const PlaneCurve& c);

}  // namespace plcaut
