// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcaut/family.hpp"
#include "plcaut/ff.hpp"
#include "plcaut/poly.hpp"
#include "plcaut/projmatrix.hpp"

namespace plcaut {

// Raised when branch data violates its own constraints or when the Hurwitz
// formula has no nonnegative integer solution for the quotient genus.
struct InconsistentBranchData : std::runtime_error {
  explicit InconsistentBranchData(const std::string& what)
      : std::runtime_error(what) {}
};

// Genus of a smooth plane curve of degree d.
uint64_t genus(unsigned d);

// A curve point with nontrivial stabilizer under the acting cyclic group.
// Coordinates live in F_p[t]/(modulus) with the first nonzero coordinate
// scaled to 1; ext_degree is the degree of the modulus, chosen minimal for
// the point.
struct BranchPoint {
  unsigned ext_degree = 1;
  std::vector<uint32_t> modulus;
  std::array<ExtField::Elem, 3> point;
  unsigned stabilizer_order = 1;
};

// One orbit of the ramification locus: size points sharing ramification
// index e, with size * e equal to the group order.
struct BranchOrbit {
  uint64_t size = 0;
  unsigned e = 0;

  auto operator<=>(const BranchOrbit&) const = default;
};

struct BranchData {
  uint64_t group_order = 1;
  std::vector<BranchOrbit> orbits;
};

// All points of f = 0 whose stabilizer inside the cyclic group generated by
// M is nontrivial, each with its exact stabilizer order.  The fixed locus
// of a semisimple M is a union of eigen-points and eigen-lines, so the
// search reduces to vertex checks and univariate root-finding along lines,
// descending into extension fields as needed.  M must be an automorphism of
// the curve and diagonalizable over F_p itself; a matrix with eigenvalues
// in a proper extension raises FieldError, a non-semisimple one raises
// std::invalid_argument.
std::vector<BranchPoint> fixed_points(const HomPoly& f, const ProjMatrix& M,
                                      const PrimeField& F);
std::vector<BranchPoint> fixed_points(const PlaneCurve& c, const ProjMatrix& M,
                                      const PrimeField& F);

// Brute-force cross-check: scans all of P^2(F_{p^e}) for curve points with
// nontrivial stabilizer.  Coordinates use the default modulus of
// ExtField(F, e) and ext_degree is reported as e even for subfield points.
std::vector<BranchPoint> fixed_points_scan(const HomPoly& f,
                                           const ProjMatrix& M,
                                           const PrimeField& F, unsigned e);

// Groups fixed points into orbits by stabilizer order: points with
// stabilizer s fall into orbits of size n/s.  Throws InconsistentBranchData
// when the counts do not split into whole orbits.
BranchData branch_data(const std::vector<BranchPoint>& points,
                       uint64_t group_order);

// Solves 2g - 2 = n(2g0 - 2) + sum size*(e - 1) for the quotient genus g0.
// Throws InconsistentBranchData on malformed orbits or when g0 fails to be
// a nonnegative integer.
uint64_t hurwitz_quotient_genus(uint64_t g, const BranchData& data);

// Bundle for one curve/automorphism pair: the branch locus, its orbit
// profile and the quotient genus.  Assumes f is smooth, so that its genus
// is determined by the degree.
struct QuotientReport {
  uint64_t group_order = 1;
  std::vector<BranchPoint> points;
  BranchData data;
  uint64_t quotient_genus = 0;
};

QuotientReport quotient_analysis(const HomPoly& f, const ProjMatrix& M,
                                 const PrimeField& F);

}  // namespace plcaut
