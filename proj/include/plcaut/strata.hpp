// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "plcaut/types.hpp"

namespace plcaut {

// One conjugacy class of embeddings of the cyclic group into the plane
// projective group that still carries candidate smooth curves.
struct StratumComponent {
  // Representative family of the class, least exponent pair first.
  TypeFamily family;
  // Number of deduped weight-class families realizing this embedding; the
  // same subgroup can act on a form through any scalar character.
  unsigned eigenspace_families = 1;
  // Set when a sampled generic smooth member has a monomial stabilizer
  // strictly larger than m.  Such a family lies inside the locus of curves
  // with a bigger group, so it can merge with another component there even
  // though the types differ.
  bool extra_automorphisms_generic = false;
};

// Candidate decomposition of the locus of degree-d smooth plane curves
// admitting a cyclic automorphism group of order exactly m.  The count is
// the number of embedding classes with a surviving equation family and is
// a lower bound for the number of irreducible components; a single class
// makes the stratum a candidate for irreducibility.
struct StratumReport {
  unsigned d = 0;
  unsigned m = 0;
  std::vector<StratumComponent> component_types;
  std::size_t count = 0;
  bool es_irreducible_candidate = false;
};

// Filters the raw census of degree d to order exactly m, drops families
// that are forced reducible or cannot contain smooth curves, dedups the
// rest and counts the distinct embedding classes.  Requires m >= 2.
StratumReport equation_components(unsigned d, unsigned m);

}  // namespace plcaut
