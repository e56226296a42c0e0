// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plcaut/autgrp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "plcaut/family.hpp"
#include "plcaut/types.hpp"

using namespace plcaut;

namespace {

EquationFamily find_family(unsigned d, unsigned m, unsigned a, unsigned b) {
  for (const auto& f : dedup_families(enumerate_types(d)))
    if (f.type.m == m && f.type.a == a && f.type.b == b) return make_family(f);
  REQUIRE(false);
  return {};
}

// Row r of the result reads coordinate p_r.
ProjMatrix perm_matrix(int p0, int p1, int p2, const PrimeField& F) {
  std::array<uint32_t, 9> e{};
  e[0 * 3 + p0] = 1;
  e[1 * 3 + p1] = 1;
  e[2 * 3 + p2] = 1;
  return pm_from_entries(e, F);
}

ProjMatrix diag(uint32_t a, uint32_t b, uint32_t c, const PrimeField& F) {
  return pm_from_entries({a, 0, 0, 0, b, 0, 0, 0, c}, F);
}

void check_lagrange(const GroupClosure& g) {
  std::size_t total = 0;
  for (const auto& [ord, count] : g.order_histogram) {
    CHECK(g.order % ord == 0);
    total += count;
  }
  CHECK(total == g.order);
  CHECK(g.order == g.elements.size());
}

}  // namespace

TEST_CASE("closure of the classical primitive groups") {
  // The three nested groups generated by S = diag(1, w, w^2), the 3-cycle
  // T, the homology U = diag(1, 1, w) and the order-4 map V, over any
  // field containing a cube root of unity w.
  for (uint32_t p : {7u, 13u}) {
    PrimeField F(p);
    uint32_t w = F.root_of_unity(3);
    uint32_t w2 = F.mul(w, w);
    ProjMatrix S = diag(1, w, w2, F);
    ProjMatrix U = diag(1, 1, w, F);
    ProjMatrix T = perm_matrix(1, 2, 0, F);
    ProjMatrix V = pm_from_entries({1, 1, 1, 1, w, w2, 1, w2, w}, F);
    ProjMatrix UVUi = pm_mul(pm_mul(U, V, F), pm_inv(U, F), F);

    auto g36 = closure({S, T, V}, F);
    auto g72 = closure({S, T, V, UVUi}, F);
    auto g216 = closure({S, T, U, V}, F);
    CHECK(g36.order == 36);
    CHECK(g72.order == 72);
    CHECK(g216.order == 216);
    check_lagrange(g216);
    // Element orders in the order-216 group stay within {1, 2, 3, 4, 6}.
    for (const auto& [ord, count] : g216.order_histogram)
      CHECK(std::set<unsigned>{1, 2, 3, 4, 6}.count(ord) == 1);
    // The chain is nested.
    std::set<ProjMatrix> big(g216.elements.begin(), g216.elements.end());
    for (const auto& e : g72.elements) CHECK(big.count(e) == 1);
  }

  // Fermat quintic: two independent scalings plus the full permutation
  // action give 5*5*6 classes.
  {
    PrimeField F(11);
    uint32_t x5 = F.root_of_unity(5);
    auto g = closure({diag(x5, 1, 1, F), diag(1, x5, 1, F),
                      perm_matrix(0, 2, 1, F), perm_matrix(1, 2, 0, F)},
                     F);
    CHECK(g.order == 150);
    check_lagrange(g);
  }

  // Klein quintic: an order-13 scaling normalized by the 3-cycle.
  {
    PrimeField F(53);
    uint32_t x13 = F.root_of_unity(13);
    auto g = closure(
        {diag(1, x13, F.pow(x13, 10), F), perm_matrix(1, 2, 0, F)}, F);
    CHECK(g.order == 39);
    check_lagrange(g);
  }

  // A tight bound aborts instead of looping.
  {
    PrimeField F(7);
    uint32_t w = F.root_of_unity(3);
    ProjMatrix S = diag(1, w, F.mul(w, w), F);
    ProjMatrix T = perm_matrix(1, 2, 0, F);
    ProjMatrix U = diag(1, 1, w, F);
    ProjMatrix V = pm_from_entries({1, 1, 1, 1, w, F.mul(w, w), 1,
                                    F.mul(w, w), w},
                                   F);
    CHECK_THROWS_AS(closure({S, T, U, V}, F, 100), ClosureBoundExceeded);
  }
}

TEST_CASE("presentation verification") {
  // For X^d + Y^{d-1}Z + YZ^{d-1} the diagonal map of order d(d-2)
  // together with the Y/Z swap generates a group of order 2d(d-2) with
  // sigma^2 = tau^{d(d-2)} = 1 and sigma tau sigma = tau^{-(d-1)}.
  const std::vector<std::pair<unsigned, uint32_t>> cases = {
      {5, 31}, {7, 71}, {8, 97}, {9, 127}};
  for (auto [d, p] : cases) {
    PrimeField F(p);
    const unsigned m = d * (d - 2);
    uint32_t z = F.root_of_unity(m);
    ProjMatrix tau = diag(1, z, F.pow(z, m - (d - 1)), F);
    ProjMatrix sigma = perm_matrix(0, 2, 1, F);
    HomPoly f = make_hompoly(d,
                             {{Monomial{d, 0, 0}, 1},
                              {Monomial{0, d - 1, 1}, 1},
                              {Monomial{0, 1, d - 1}, 1}},
                             F);
    CHECK(is_invariant(f, tau, F).has_value());
    CHECK(is_invariant(f, sigma, F).has_value());
    RelatorWord square = {2, 2};
    RelatorWord power(m, 1);
    RelatorWord twist = {2, 1, 2};
    for (unsigned t = 0; t < d - 1; ++t) twist.push_back(1);
    CHECK(verify_presentation({tau, sigma}, {square, power, twist}, 2 * m, F));
    // The relators do not hold with a wrong conjugation exponent.
    RelatorWord bad = {2, 1, 2};
    for (unsigned t = 0; t < d; ++t) bad.push_back(1);
    CHECK_FALSE(verify_presentation({tau, sigma}, {square, power, bad},
                                    2 * m, F));
    // A wrong target order fails even with correct relators.
    CHECK_FALSE(verify_presentation({tau, sigma}, {square, power, twist},
                                    2 * m + 1, F));
  }

  // The same order-30 group in its abstract presentation
  // tau^2 = sigma^15 = (tau sigma)^2 sigma^3 = 1.
  {
    PrimeField F(31);
    uint32_t z = F.root_of_unity(15);
    ProjMatrix tau = perm_matrix(0, 2, 1, F);
    ProjMatrix sigma = diag(1, z, F.pow(z, 11), F);
    RelatorWord r1 = {1, 1};
    RelatorWord r2(15, 2);
    RelatorWord r3 = {1, 2, 1, 2, 2, 2, 2};
    CHECK(verify_presentation({tau, sigma}, {r1, r2, r3}, 30, F));
  }

  // Klein quintic: tau^13 = sigma^3 = 1 and sigma tau sigma^-1 = tau^9.
  {
    PrimeField F(53);
    uint32_t z = F.root_of_unity(13);
    ProjMatrix tau = diag(1, z, F.pow(z, 10), F);
    ProjMatrix sigma = perm_matrix(1, 2, 0, F);
    RelatorWord r1(13, 1);
    RelatorWord r2 = {2, 2, 2};
    RelatorWord r3 = {2, 1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1};
    CHECK(verify_presentation({tau, sigma}, {r1, r2, r3}, 39, F));
  }

  // Degenerate but valid: the identity generator presents the trivial
  // group.
  {
    PrimeField F(7);
    CHECK(verify_presentation({pm_identity()}, {{1}}, 1, F));
  }
}

TEST_CASE("monomial stabilizers across the degree-5 census") {
  // Generic smooth members of every degree-5 family, specialized over a
  // field containing all the roots of unity the stabilizers need.  The
  // expected orders follow the classification of full automorphism groups
  // in degree 5; every group in that list is monomial, so the monomial
  // stabilizer realizes it.
  PrimeField F(3121);
  struct Row {
    unsigned m, a, b;
    std::map<Monomial, int64_t> values;
    std::size_t expect;
  };
  const std::vector<Row> rows = {
      // Fermat quintic: all free terms zero.
      {5, 1, 2, {}, 150},
      // Klein quintic: rigid, no parameters at all.
      {13, 1, 10, {}, 39},
      {15, 1, 11, {}, 30},
      {20, 4, 5, {}, 20},
      {16, 1, 12, {}, 16},
      {10, 2, 5, {{Monomial{3, 0, 2}, 1}}, 10},
      // Perturbed Fermat keeps the X/Z swap: a dihedral group of order 10.
      {5, 1, 2, {{Monomial{2, 1, 2}, 1}}, 10},
      {8, 1, 4, {{Monomial{3, 0, 2}, 3}}, 8},
      // Equal coefficients on X^2Y^3 and X^2Z^3 allow the Y/Z swap.
      {3,
       1,
       2,
       {{Monomial{3, 1, 1}, 2},
        {Monomial{2, 3, 0}, 1},
        {Monomial{2, 0, 3}, 1},
        {Monomial{1, 2, 2}, 3}},
       6},
      {5, 0, 1, {{Monomial{3, 2, 0}, 2}, {Monomial{2, 3, 0}, 3}}, 5},
      {4,
       1,
       2,
       {{Monomial{3, 0, 2}, 1},
        {Monomial{2, 2, 1}, 1},
        {Monomial{0, 2, 3}, 1}},
       4},
      {4,
       0,
       1,
       {{Monomial{1, 0, 4}, 1},
        {Monomial{3, 2, 0}, 2},
        {Monomial{2, 3, 0}, 3}},
       4},
      // Distinct coefficients on X^2Y^3 and X^2Z^3 break the swap.
      {3,
       1,
       2,
       {{Monomial{3, 1, 1}, 2},
        {Monomial{2, 3, 0}, 2},
        {Monomial{2, 0, 3}, 1},
        {Monomial{1, 2, 2}, 3}},
       3},
      {2,
       0,
       1,
       {{Monomial{1, 0, 4}, 1},
        {Monomial{3, 0, 2}, 1},
        {Monomial{3, 2, 0}, 2},
        {Monomial{2, 3, 0}, 3}},
       2},
  };
  std::multiset<std::size_t> seen, wanted;
  for (const Row& r : rows) {
    PlaneCurve c = specialize(find_family(5, r.m, r.a, r.b), r.values, F);
    REQUIRE(is_smooth(c.form, F).smooth);
    auto stab = monomial_stabilizer(c, F);
    CHECK(stab.order == r.expect);
    check_lagrange(stab);
    // Every reported element genuinely fixes the form.
    for (const auto& e : stab.elements)
      CHECK(is_invariant(c.form, e, F).has_value());
    seen.insert(stab.order);
    wanted.insert(r.expect);
  }
  CHECK(seen == wanted);
  CHECK(wanted == std::multiset<std::size_t>{150, 39, 30, 20, 16, 10, 10, 8,
                                             6, 5, 4, 4, 3, 2});
}

TEST_CASE("exhaustive automorphism search") {
  // Fermat quartic over a field with fourth roots of unity: the full
  // monomial group of order 4*4*6.
  {
    PrimeField F(13);
    HomPoly fermat = make_hompoly(4,
                                  {{Monomial{4, 0, 0}, 1},
                                   {Monomial{0, 4, 0}, 1},
                                   {Monomial{0, 0, 4}, 1}},
                                  F);
    auto g = exhaustive_aut(fermat, F);
    CHECK(g.order == 96);
    check_lagrange(g);
    auto stab = monomial_stabilizer(fermat, F);
    CHECK(stab.order == 96);
    // A tiny budget trips the guard.
    CHECK_THROWS_AS(exhaustive_aut(fermat, F, 1000), BudgetExceeded);
  }

  // The quartic X^3Y + Y^3Z + Z^3X needs seventh roots of unity for its
  // order-7 maps.  Over F_11 those live only in F_{11^3}, so merely the
  // coordinate 3-cycle survives; over F_29 the full group of order 168
  // appears, with the element orders of PSL(2,7).
  {
    PrimeField F(11);
    HomPoly klein = make_hompoly(4,
                                 {{Monomial{3, 1, 0}, 1},
                                  {Monomial{0, 3, 1}, 1},
                                  {Monomial{1, 0, 3}, 1}},
                                 F);
    auto g = exhaustive_aut(klein, F);
    CHECK(g.order == 3);
    auto stab = monomial_stabilizer(klein, F);
    std::set<ProjMatrix> all(g.elements.begin(), g.elements.end());
    for (const auto& e : stab.elements) CHECK(all.count(e) == 1);
  }
  {
    PrimeField F(29);
    HomPoly klein = make_hompoly(4,
                                 {{Monomial{3, 1, 0}, 1},
                                  {Monomial{0, 3, 1}, 1},
                                  {Monomial{1, 0, 3}, 1}},
                                 F);
    auto g = exhaustive_aut(klein, F);
    CHECK(g.order == 168);
    check_lagrange(g);
    CHECK(g.order_histogram ==
          std::map<unsigned, std::size_t>{
              {1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}});
    // The monomial part is the order-21 normalizer of the scaling torus.
    auto stab = monomial_stabilizer(klein, F);
    CHECK(stab.order == 21);
    std::set<ProjMatrix> all(g.elements.begin(), g.elements.end());
    for (const auto& e : stab.elements) CHECK(all.count(e) == 1);
  }

  // A generic member of the smallest quintic family keeps only its
  // defining involution, and the monomial stabilizer already sees it.
  {
    PrimeField F(17);
    PlaneCurve c = specialize(find_family(5, 2, 0, 1),
                              {{Monomial{1, 0, 4}, 1},
                               {Monomial{3, 0, 2}, 1},
                               {Monomial{3, 2, 0}, 2},
                               {Monomial{2, 3, 0}, 3}},
                              F);
    REQUIRE(is_smooth(c.form, F).smooth);
    auto g = exhaustive_aut(c.form, F);
    CHECK(g.order == 2);
    auto stab = monomial_stabilizer(c, F);
    CHECK(stab.order == 2);
    CHECK(stab.elements == g.elements);
  }
}
