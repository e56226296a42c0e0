// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/family.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace plcaut {

namespace {

unsigned var_degree(const Monomial& m, int v) {
  return v == 0 ? m.i : v == 1 ? m.j : m.k;
}

}  // namespace

EquationFamily make_family(const TypeFamily& fam) {
  const unsigned d = fam.type.d;
  unsigned max_exp = 0;
  for (const auto& m : fam.support) max_exp = std::max(max_exp, m.exponent());

  EquationFamily out;
  out.ctype = fam.type;
  for (const auto& m : fam.support) {
    CoefficientKind kind = CoefficientKind::FreeParam;
    if (m.exponent() == max_exp) {
      kind = CoefficientKind::Unit;
    } else {
      for (int v = 0; v < 3 && kind == CoefficientKind::FreeParam; ++v) {
        if (var_degree(m, v) < d - 1) continue;
        bool unique = true;
        for (const auto& other : fam.support)
          if (!(other == m) && var_degree(other, v) >= d - 1) unique = false;
        if (unique) kind = CoefficientKind::NonzeroParam;
      }
    }
    out.entries.emplace_back(m, kind);
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

bool is_forced_reducible(const EquationFamily& fam) {
  for (int v = 0; v < 3; ++v) {
    bool divides_all = true;
    for (const auto& [m, kind] : fam.entries)
      if (var_degree(m, v) == 0) divides_all = false;
    if (divides_all) return true;
  }
  return false;
}

PlaneCurve specialize(const EquationFamily& fam,
                      const std::map<Monomial, int64_t>& values,
                      const PrimeField& F) {
  const unsigned m = fam.ctype.m;
  if ((F.p() - 1) % m != 0)
    throw std::invalid_argument("field has no primitive m-th root of unity");
  for (const auto& [mono, val] : values) {
    bool known = false;
    for (const auto& [fm, kind] : fam.entries) known |= fm == mono;
    if (!known) throw std::invalid_argument("value assigned outside the support");
  }

  PlaneCurve out;
  out.family = fam;
  std::vector<std::pair<Monomial, int64_t>> terms;
  for (const auto& [mono, kind] : fam.entries) {
    auto it = values.find(mono);
    uint32_t c = 0;
    switch (kind) {
      case CoefficientKind::Unit:
        c = 1;
        if (it != values.end() && F.reduce(it->second) != 1)
          throw std::invalid_argument("unit coefficient must stay 1");
        break;
      case CoefficientKind::NonzeroParam:
        c = it == values.end() ? 1 : F.reduce(it->second);
        if (c == 0) throw std::invalid_argument("alpha parameter must be nonzero");
        break;
      case CoefficientKind::FreeParam:
        c = it == values.end() ? 0 : F.reduce(it->second);
        break;
    }
    out.values[mono] = c;
    if (c != 0) terms.emplace_back(mono, c);
  }
  out.form = make_hompoly(fam.ctype.d, terms, F);

  uint32_t xi = F.root_of_unity(m);
  ProjMatrix diag = pm_from_entries(
      {1, 0, 0, 0, F.pow(xi, fam.ctype.a), 0, 0, 0, F.pow(xi, fam.ctype.b)}, F);
  if (!is_invariant(out.form, diag, F))
    throw std::logic_error("specialization lost its diagonal symmetry");
  return out;
}

PlaneCurve sample_smooth(const EquationFamily& fam, const PrimeField& F,
                         unsigned trials, uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  SplitMix64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    std::map<Monomial, int64_t> values;
    for (const auto& [mono, kind] : fam.entries) {
      if (kind == CoefficientKind::NonzeroParam)
        values[mono] = 1 + static_cast<int64_t>(rng.below(F.p() - 1));
      else if (kind == CoefficientKind::FreeParam)
        values[mono] = static_cast<int64_t>(rng.below(F.p()));
    }
    PlaneCurve c = specialize(fam, values, F);
    if (is_smooth(c.form, F).smooth) return c;
  }
  throw SampleExhausted("no smooth member found within the trial budget");
}

CoreKind descendant_core(const PlaneCurve& c) {
  const unsigned d = c.form.d;
  HomPoly co = core(c.form);
  std::set<Monomial> supp;
  for (const auto& [m, coeff] : co.coeffs) supp.insert(m);

  const std::set<Monomial> fermat{{d, 0, 0}, {0, d, 0}, {0, 0, d}};
  // The Klein support and its mirror image; cyclic rotations map each onto
  // itself, so two sets cover all six permutations.
  const std::set<Monomial> klein{{d - 1, 1, 0}, {0, d - 1, 1}, {1, 0, d - 1}};
  const std::set<Monomial> klein_mirror{{d - 1, 0, 1}, {1, d - 1, 0}, {0, 1, d - 1}};

  if (supp == fermat) return CoreKind::FermatCore;
  if (supp == klein || supp == klein_mirror) return CoreKind::KleinCore;
  return CoreKind::Other;
}

}  // namespace plcaut
