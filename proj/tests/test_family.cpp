// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plcaut/family.hpp"

#include <map>

using namespace plcaut;

namespace {

// The table row of a given type, which must exist.
TypeFamily find_table_row(unsigned d, unsigned m, unsigned a, unsigned b) {
  for (const auto& f : table_families(d))
    if (f.type.m == m && f.type.a == a && f.type.b == b) return f;
  REQUIRE(false);
  return {};
}

TypeFamily find_dedup_row(unsigned d, unsigned m, unsigned a, unsigned b,
                          unsigned wclass) {
  for (const auto& f : dedup_families(enumerate_types(d)))
    if (f.type.m == m && f.type.a == a && f.type.b == b && f.wclass == wclass)
      return f;
  REQUIRE(false);
  return {};
}

CoefficientKind kind_of(const EquationFamily& fam, Monomial m) {
  for (const auto& [mono, kind] : fam.entries)
    if (mono == m) return kind;
  REQUIRE(false);
  return CoefficientKind::FreeParam;
}

}  // namespace

TEST_CASE("coefficient roles") {
  // Quintic with an order-8 symmetry: X^5 + Y^4Z + alpha XZ^4 + beta X^3Z^2.
  auto fam = make_family(find_table_row(5, 8, 1, 4));
  CHECK(fam.entries.size() == 4);
  CHECK(kind_of(fam, {5, 0, 0}) == CoefficientKind::Unit);
  CHECK(kind_of(fam, {0, 4, 1}) == CoefficientKind::NonzeroParam);
  CHECK(kind_of(fam, {1, 0, 4}) == CoefficientKind::NonzeroParam);
  CHECK(kind_of(fam, {3, 0, 2}) == CoefficientKind::FreeParam);

  // The Klein quintic family is rigid: all three terms share the maximal
  // exponent, so every slot is a unit.
  auto klein = make_family(find_table_row(5, 13, 1, 10));
  for (const auto& [mono, kind] : klein.entries)
    CHECK(kind == CoefficientKind::Unit);

  // The Fermat quartic plus two free terms.
  auto f4 = make_family(find_table_row(4, 4, 1, 2));
  CHECK(kind_of(f4, {4, 0, 0}) == CoefficientKind::Unit);
  CHECK(kind_of(f4, {0, 4, 0}) == CoefficientKind::Unit);
  CHECK(kind_of(f4, {0, 0, 4}) == CoefficientKind::Unit);
  CHECK(kind_of(f4, {2, 0, 2}) == CoefficientKind::FreeParam);
  CHECK(kind_of(f4, {1, 2, 1}) == CoefficientKind::FreeParam);

  CHECK(!is_forced_reducible(fam));
  CHECK(is_forced_reducible(
      make_family(find_dedup_row(5, 4, 1, 3, 0))));
}

TEST_CASE("specialization") {
  PrimeField F41(41);
  auto fam = make_family(find_table_row(5, 8, 1, 4));

  PlaneCurve c = specialize(fam, {{{3, 0, 2}, 3}}, F41);
  HomPoly want = make_hompoly(
      5, {{{5, 0, 0}, 1}, {{0, 4, 1}, 1}, {{1, 0, 4}, 1}, {{3, 0, 2}, 3}}, F41);
  CHECK(hp_eq(c.form, want));
  CHECK(c.values.at({0, 4, 1}) == 1);  // alpha defaulted

  // Alpha slots reject zero, unit slots reject anything but 1, and unknown
  // monomials are refused outright.
  CHECK_THROWS_AS(specialize(fam, {{{0, 4, 1}, 0}}, F41), std::invalid_argument);
  CHECK_THROWS_AS(specialize(fam, {{{5, 0, 0}, 2}}, F41), std::invalid_argument);
  CHECK_THROWS_AS(specialize(fam, {{{2, 2, 1}, 1}}, F41), std::invalid_argument);

  // The field must contain the 8th roots of unity.
  CHECK_THROWS_AS(specialize(fam, {}, PrimeField(11)), std::invalid_argument);

  // beta = 2 gives X(X^2 + Z^2)^2 + Y^4Z on the Y = 0 line: singular.
  CHECK(!is_smooth(specialize(fam, {{{3, 0, 2}, 2}}, F41).form, F41).smooth);
  CHECK(!is_smooth(specialize(fam, {{{3, 0, 2}, -2}}, F41).form, F41).smooth);
  CHECK(is_smooth(c.form, F41).smooth);

  // With every free parameter zero the order-6 sextic family collapses to
  // its units, the Fermat sextic.
  PrimeField F13(13);
  PlaneCurve fermat6 = specialize(make_family(find_table_row(6, 6, 0, 1)), {}, F13);
  CHECK(hp_eq(fermat6.form,
              make_hompoly(6, {{{6, 0, 0}, 1}, {{0, 6, 0}, 1}, {{0, 0, 6}, 1}}, F13)));

  // Fermat quintic with no overrides is smooth.
  PlaneCurve fermat5 = specialize(make_family(find_table_row(5, 5, 1, 2)), {}, F41);
  CHECK(is_smooth(fermat5.form, F41).smooth);
}

TEST_CASE("smooth sampling") {
  PrimeField F41(41);

  auto top = make_family(find_table_row(5, 20, 4, 5));
  PlaneCurve c = sample_smooth(top, F41, 5, 7);
  CHECK(c.form.coeffs.size() == 3);
  CHECK(is_smooth(c.form, F41).smooth);

  // Identical seeds replay the identical draw sequence.
  PlaneCurve c2 = sample_smooth(top, F41, 5, 7);
  CHECK(hp_eq(c.form, c2.form));

  // Every member of the reducible quintic family splits off the line X = 0,
  // so no draw can succeed.
  auto red = make_family(find_dedup_row(5, 4, 1, 3, 0));
  CHECK_THROWS_AS(sample_smooth(red, F41, 12, 3), SampleExhausted);

  // A generic member of the Fermat quintic family is smooth.
  auto fermat = make_family(find_table_row(5, 5, 1, 2));
  PlaneCurve f = sample_smooth(fermat, F41, 10, 123);
  CHECK(is_smooth(f.form, F41).smooth);
}

TEST_CASE("core recognition") {
  PrimeField F41(41);

  // Perturbed Fermat quintic keeps its Fermat core.
  auto fermat = make_family(find_table_row(5, 5, 1, 2));
  CHECK(descendant_core(specialize(fermat, {{{2, 1, 2}, 3}}, F41)) ==
        CoreKind::FermatCore);

  // The degree-6 Klein family, and a perturbation of the Klein sextic inside
  // a lower-order family, both have Klein cores.
  PrimeField F43(43);
  auto klein6 = make_family(find_table_row(6, 21, 1, 17));
  CHECK(descendant_core(specialize(klein6, {}, F43)) == CoreKind::KleinCore);

  PrimeField F13(13);
  auto low = make_family(find_dedup_row(6, 3, 1, 2, 1));
  CHECK(descendant_core(specialize(low, {{{2, 1, 3}, 5}}, F13)) ==
        CoreKind::KleinCore);

  // X^5 + Y^4Z + XZ^4 has core X^5: neither normal form.
  PrimeField F17(17);
  auto f16 = make_family(find_table_row(5, 16, 1, 12));
  CHECK(descendant_core(specialize(f16, {}, F17)) == CoreKind::Other);
}

TEST_CASE("quintic family census by order") {
  std::map<unsigned, unsigned> count;
  for (const auto& f : table_families(5)) ++count[f.type.m];
  std::map<unsigned, unsigned> want{{20, 1}, {16, 1}, {15, 1}, {13, 1}, {10, 1},
                                    {8, 1},  {5, 2},  {4, 2},  {3, 1},  {2, 1}};
  CHECK(count == want);
}
