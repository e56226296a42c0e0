// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcaut/family.hpp"
#include "plcaut/ff.hpp"
#include "plcaut/poly.hpp"
#include "plcaut/projmatrix.hpp"

namespace plcaut {

// Raised when an incremental closure grows past its element bound, which
// usually means the generators do not lie in the intended finite group.
struct ClosureBoundExceeded : std::runtime_error {
  explicit ClosureBoundExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when the exhaustive automorphism search would examine more
// candidates than its budget allows.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// A finite subgroup of PGL_3(F_p), listed by canonical representatives.
struct GroupClosure {
  std::vector<ProjMatrix> elements;  // sorted, canonical, including identity
  std::size_t order = 0;             // == elements.size()
  // Projective element order -> multiplicity.  Every key divides order.
  std::map<unsigned, std::size_t> order_histogram;
};

// The subgroup generated by gens, built by breadth-first multiplication.
// Throws ClosureBoundExceeded once more than bound distinct elements
// appear.
GroupClosure closure(const std::vector<ProjMatrix>& gens, const PrimeField& F,
                     std::size_t bound = 100000);

// All projective maps (coordinate permutation) composed with diag(1, u, v)
// that fix the form up to a scalar.  For each of the six permutations the
// permuted support must equal the support; coefficient matching then turns
// into linear congruences mod p-1 for the discrete logs of u and v, whose
// solutions are enumerated, re-verified against the form, and closed.
GroupClosure monomial_stabilizer(const HomPoly& f, const PrimeField& F);
GroupClosure monomial_stabilizer(const PlaneCurve& c, const PrimeField& F);

// A word over a generator list: nonzero 1-based indexes, negative for the
// inverse of the generator.
using RelatorWord = std::vector<int>;

// True when every relator evaluates to the projective identity and the
// group generated by gens has exactly expected_order elements.
bool verify_presentation(const std::vector<ProjMatrix>& gens,
                         const std::vector<RelatorWord>& relations,
                         std::size_t expected_order, const PrimeField& F);

// Every F_p-rational projective automorphism of the curve f = 0.  The
// search fixes a projective frame of four rational curve points in general
// position and enumerates its candidate images, since an automorphism is
// determined by where it sends a frame.  Each candidate matrix is screened
// against one extra curve point before the full substitution check.  When
// the curve carries no rational frame the search degrades to a scan of all
// of PGL_3(F_p).  Either way at most budget candidates are examined;
// beyond that BudgetExceeded is raised.
GroupClosure exhaustive_aut(const HomPoly& f, const PrimeField& F,
                            uint64_t budget = 50000000);

}  // namespace plcaut
