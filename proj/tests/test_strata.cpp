// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plcaut/strata.hpp"

#include <set>
#include <tuple>
#include <vector>

using namespace plcaut;

namespace {

std::set<std::tuple<unsigned, unsigned, unsigned>> type_set(
    const StratumReport& rep) {
  std::set<std::tuple<unsigned, unsigned, unsigned>> out;
  for (const auto& comp : rep.component_types)
    out.insert({comp.family.type.m, comp.family.type.a, comp.family.type.b});
  return out;
}

}  // namespace

TEST_CASE("split strata") {
  // Quintics with a cyclic group of order 4 split into two families.
  {
    auto rep = equation_components(5, 4);
    CHECK(rep.count == 2);
    CHECK(rep.count == rep.component_types.size());
    CHECK_FALSE(rep.es_irreducible_candidate);
    CHECK(type_set(rep) ==
          std::set<std::tuple<unsigned, unsigned, unsigned>>{{4, 0, 1},
                                                             {4, 1, 2}});
  }

  // Sextics with a cyclic group of order 3 split as well.  The non-trivial
  // embedding acts on sextic forms through two scalar characters, both of
  // which carry smooth curves, but they realize one embedding class.
  {
    auto rep = equation_components(6, 3);
    CHECK(rep.count == 2);
    CHECK(type_set(rep) ==
          std::set<std::tuple<unsigned, unsigned, unsigned>>{{3, 0, 1},
                                                             {3, 1, 2}});
    for (const auto& comp : rep.component_types) {
      unsigned expected = comp.family.type.a == 0 ? 1 : 2;
      CHECK(comp.eigenspace_families == expected);
    }
  }

  // For odd degree the order d-1 stratum always has at least two families.
  for (unsigned d : {5u, 7u, 9u}) {
    auto rep = equation_components(d, d - 1);
    CHECK(rep.count >= 2);
    CHECK_FALSE(rep.es_irreducible_candidate);
  }
}

TEST_CASE("order-5 quintic stratum carries its collapse annotation") {
  // Two families of quintics have an order-5 action, but the generic
  // member of type 5,(1,2) keeps an involution swapping X and Z on top of
  // the scaling, so the two components can meet inside the larger-group
  // locus.  The report annotates instead of merging.
  auto rep = equation_components(5, 5);
  CHECK(rep.count == 2);
  CHECK(type_set(rep) ==
        std::set<std::tuple<unsigned, unsigned, unsigned>>{{5, 0, 1},
                                                           {5, 1, 2}});
  for (const auto& comp : rep.component_types) {
    bool is_fermat_type = comp.family.type.a == 1 && comp.family.type.b == 2;
    CHECK(comp.extra_automorphisms_generic == is_fermat_type);
  }
}

TEST_CASE("irreducible candidates among quintic strata") {
  for (unsigned m : {2u, 3u, 8u, 10u, 13u, 15u, 16u, 20u}) {
    auto rep = equation_components(5, m);
    CHECK(rep.count == 1);
    CHECK(rep.es_irreducible_candidate);
  }

  // Rigid families have a fixed stabilizer, so their annotations do not
  // depend on sampling: the top orders realize exactly themselves, while
  // the order-13 curve always carries the extra 3-cycle.
  CHECK_FALSE(
      equation_components(5, 16).component_types[0].extra_automorphisms_generic);
  CHECK_FALSE(
      equation_components(5, 20).component_types[0].extra_automorphisms_generic);
  CHECK(
      equation_components(5, 13).component_types[0].extra_automorphisms_generic);

  // Orders with no action at all give empty reports.
  auto rep = equation_components(5, 6);
  CHECK(rep.count == 0);
  CHECK_FALSE(rep.es_irreducible_candidate);

  CHECK_THROWS_AS(equation_components(5, 1), std::invalid_argument);
}
