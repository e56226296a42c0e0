// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/strata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "plcaut/autgrp.hpp"
#include "plcaut/family.hpp"
#include "plcaut/ff.hpp"

namespace plcaut {

namespace {

// Samples one smooth member over a field with the m-th roots of unity and
// asks whether its monomial stabilizer exceeds the acting group.  A family
// whose sampling budget runs dry is reported without the annotation.
bool generic_member_has_extra(const TypeFamily& fam, unsigned m) {
  PrimeField F(select_prime(fam.type.d, {m}));
  try {
    PlaneCurve c = sample_smooth(make_family(fam), F, 64, 0x57a7a5eedULL);
    return monomial_stabilizer(c, F).order > m;
  } catch (const SampleExhausted&) {
    return false;
  }
}

}  // namespace

StratumReport equation_components(unsigned d, unsigned m) {
  if (m < 2) throw std::invalid_argument("group order must be at least 2");
  std::vector<TypeFamily> pool;
  for (const auto& fam : enumerate_types(d))
    if (fam.type.m == m && !fam.forced_reducible &&
        !fam.fails_nonsingularity_necessary_condition)
      pool.push_back(fam);

  // Weight-class families of one embedding class describe the same
  // subgroup acting through different scalar characters, so they belong to
  // a single component candidate.
  std::map<std::pair<unsigned, unsigned>, std::vector<TypeFamily>> classes;
  for (const auto& fam : dedup_families(pool))
    classes[subgroup_class_key(m, fam.type.a, fam.type.b)].push_back(fam);

  StratumReport rep;
  rep.d = d;
  rep.m = m;
  for (auto& [key, fams] : classes) {
    std::sort(fams.begin(), fams.end(),
              [](const TypeFamily& x, const TypeFamily& y) {
                return std::tuple{x.type.a, x.type.b, x.wclass} <
                       std::tuple{y.type.a, y.type.b, y.wclass};
              });
    StratumComponent comp;
    comp.family = fams.front();
    comp.eigenspace_families = static_cast<unsigned>(fams.size());
    comp.extra_automorphisms_generic = generic_member_has_extra(comp.family, m);
    rep.component_types.push_back(std::move(comp));
  }
  rep.count = rep.component_types.size();
  rep.es_irreducible_candidate = rep.count == 1;
  return rep;
}

}  // namespace plcaut
