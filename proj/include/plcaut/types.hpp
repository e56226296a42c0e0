// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "plcaut/poly.hpp"

namespace plcaut {

// Diagonal automorphism diag(1, xi^a, xi^b) of order m acting on plane
// curves of degree d, with xi a primitive m-th root of unity.  Exponents are
// normalized so that a = 0 forces gcd(b, m) = 1 and a, b > 0 forces
// gcd(a, b) = 1; a and b always differ.
struct CyclicType {
  unsigned d = 0;
  unsigned m = 1;
  unsigned a = 0;
  unsigned b = 0;

  auto operator<=>(const CyclicType&) const = default;
};

// Which congruence family produced a type.  Each tag corresponds to one
// divisor bound: 1 and 4c to d-1, 2 and 6 to d, 3 to d^2-3d+3, 4a to
// d(d-2), 4b to (d-1)^2, 5 to d(d-1).
enum class CaseTag { Case1, Case2, Case3, Case4a, Case4b, Case4c, Case5, Case6 };

std::string case_label(CaseTag tag);

// A weight class of monomials fixed by one diagonal action: the largest set
// of degree-d monomials on which diag(1, xi^a, xi^b) acts by the single
// scalar xi^wclass.
struct TypeFamily {
  CyclicType type;
  CaseTag tag = CaseTag::Case1;
  unsigned wclass = 0;
  std::vector<Monomial> support;
  // Some variable divides every monomial, so every member curve is
  // reducible.
  bool forced_reducible = false;
  // Some variable never reaches degree d-1, which already rules out smooth
  // members.
  bool fails_nonsingularity_necessary_condition = false;
};

// Weight of a monomial under diag(1, xi^a, xi^b): a j + b k mod m.
unsigned weight(const Monomial& mono, unsigned m, unsigned a, unsigned b);

// All degree-d monomials of the given weight class, sorted.
std::vector<Monomial> invariant_monomials(unsigned d, unsigned m, unsigned a,
                                          unsigned b, unsigned wclass);

// Distinct divisor bounds of degree d divisible by m, ascending.  The empty
// result certifies that no cyclic action of order m exists on smooth degree-d
// curves.
std::vector<unsigned> divisor_bound(unsigned d, unsigned m);

// Raw census of (order, exponents, weight class) solutions across all eight
// congruence cases; one entry per case solution before any equivalence is
// applied.
std::vector<TypeFamily> enumerate_types(unsigned d);

// Key identifying a family up to renaming the generator of the group and
// permuting coordinates.
struct FamilyKey {
  unsigned m = 1;
  unsigned a = 0;
  unsigned b = 0;
  unsigned wclass = 0;
  std::vector<Monomial> support;

  auto operator<=>(const FamilyKey&) const = default;
};

FamilyKey canonical_family_key(const TypeFamily& fam);

// The analogous canonical form of the exponent pair alone, independent of
// the ambient degree.  Families with equal keys generate conjugate diagonal
// subgroups.
std::pair<unsigned, unsigned> subgroup_class_key(unsigned m, unsigned a,
                                                 unsigned b);

// One representative per equivalence class of the raw census, labelled by
// the lexicographically least exponent pair that occurred, ordered by
// descending m.
std::vector<TypeFamily> dedup_families(const std::vector<TypeFamily>& raw);

// The table view: deduplicated families that can still contain smooth
// curves, with proper-divisor rows of the cyclic cases 3 and 6 suppressed
// because their actions extend to the full-order row.
std::vector<TypeFamily> table_families(unsigned d);

}  // namespace plcaut
