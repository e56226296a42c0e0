// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plcaut/poly.hpp"

using namespace plcaut;

namespace {

HomPoly klein(const PrimeField& F) {
  return make_hompoly(4, {{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}}, F);
}

HomPoly fermat(unsigned d, const PrimeField& F) {
  return make_hompoly(
      d, {{{d, 0, 0}, 1}, {{0, d, 0}, 1}, {{0, 0, d}, 1}}, F);
}

bool proportional(const HomPoly& a, const HomPoly& b, const PrimeField& F) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  auto it = b.coeffs.find(a.coeffs.begin()->first);
  if (it == b.coeffs.end()) return false;
  uint32_t lambda = F.div(it->second, a.coeffs.begin()->second);
  return hp_eq(b, hp_scale(a, lambda, F));
}

}  // namespace

TEST_CASE("projective matrices canonicalize and invert") {
  PrimeField F(7);
  auto M = pm_from_entries({2, 0, 0, 0, 4, 0, 0, 0, 6}, F);
  CHECK(M.m[0] == 1);
  CHECK(M.m[4] == 2);
  CHECK(M.m[8] == 3);
  CHECK(pm_is_diagonal(M));
  CHECK(pm_is_identity(pm_mul(M, pm_inv(M, F), F)));
  CHECK_THROWS_AS(pm_from_entries({1, 2, 3, 2, 4, 6, 0, 0, 1}, F),
                  std::invalid_argument);
  auto R = pm_from_entries({0, 1, 0, 0, 0, 1, 1, 0, 0}, F);
  CHECK(!pm_is_diagonal(R));
  CHECK(projective_order(R, F) == 3);
  CHECK(pm_is_identity(pm_pow(R, 3, F)));
  auto S = pm_from_entries({0, 1, 0, 6, 0, 0, 0, 0, 1}, F);
  CHECK(projective_order(S, F) == 4);
  auto v = pm_apply(R, {1, 2, 3}, F);
  CHECK(v == std::array<uint32_t, 3>{2, 3, 1});
}

TEST_CASE("projective order of a diagonal root of unity") {
  PrimeField F(29);
  uint32_t z = F.root_of_unity(7);
  auto M = pm_from_entries({1, 0, 0, 0, z, 0, 0, 0, F.pow(z, 5)}, F);
  CHECK(projective_order(M, F) == 7);
}

TEST_CASE("form construction validates degrees") {
  PrimeField F(11);
  auto f = klein(F);
  CHECK(f.coeffs.size() == 3);
  CHECK_THROWS_AS(make_hompoly(4, {{{1, 1, 1}, 1}}, F),
                  std::invalid_argument);
  auto g = make_hompoly(2, {{{2, 0, 0}, 5}, {{2, 0, 0}, 6}}, F);
  CHECK(g.zero());
  auto h = make_hompoly(2, {{{2, 0, 0}, -1}}, F);
  CHECK(h.coeffs.at({2, 0, 0}) == 10);
}

TEST_CASE("partial derivatives") {
  PrimeField F(11);
  auto dv = partials(klein(F), F);
  CHECK(dv[0].coeffs == std::map<Monomial, uint32_t>{{{2, 1, 0}, 3},
                                                     {{0, 0, 3}, 1}});
  CHECK(dv[1].coeffs == std::map<Monomial, uint32_t>{{{3, 0, 0}, 1},
                                                     {{0, 2, 1}, 3}});
  CHECK(dv[2].coeffs == std::map<Monomial, uint32_t>{{{0, 3, 0}, 1},
                                                     {{1, 0, 2}, 3}});
}

TEST_CASE("evaluation in base and extension agree") {
  PrimeField F(11);
  auto f = klein(F);
  ExtField K(F, 2);
  SplitMix64 rng(3);
  for (int n = 0; n < 25; ++n) {
    std::array<uint32_t, 3> v = {static_cast<uint32_t>(rng.below(11)),
                                 static_cast<uint32_t>(rng.below(11)),
                                 static_cast<uint32_t>(rng.below(11))};
    std::array<ExtField::Elem, 3> w = {K.from_base(v[0]), K.from_base(v[1]),
                                       K.from_base(v[2])};
    CHECK(K.to_base(eval_point_ext(f, K, w)) == eval_point(f, F, v));
  }
}

TEST_CASE("substitution follows the row convention") {
  PrimeField F(13);
  // f = XY with X <- Y and Y <- -X gives -XY.
  auto f = make_hompoly(2, {{{1, 1, 0}, 1}}, F);
  auto M = pm_from_entries({0, 1, 0, 12, 0, 0, 0, 0, 1}, F);
  auto g = apply_proj(f, M, F);
  CHECK(g.coeffs == std::map<Monomial, uint32_t>{{{1, 1, 0}, 12}});
  // A non-monomial substitution exercises the general path.
  auto N = pm_from_entries({1, 1, 0, 0, 1, 0, 0, 0, 1}, F);
  auto h = apply_proj(f, N, F);
  // (X + Y) Y = XY + Y^2.
  CHECK(h.coeffs == std::map<Monomial, uint32_t>{{{1, 1, 0}, 1},
                                                 {{0, 2, 0}, 1}});
}

TEST_CASE("substitution composes contravariantly") {
  PrimeField F(13);
  auto f = make_hompoly(
      3, {{{3, 0, 0}, 2}, {{1, 1, 1}, 5}, {{0, 2, 1}, 1}, {{0, 0, 3}, 7}}, F);
  auto M = pm_from_entries({1, 2, 0, 0, 1, 5, 3, 0, 1}, F);
  auto N = pm_from_entries({0, 1, 0, 0, 0, 1, 1, 0, 0}, F);
  auto lhs = apply_proj(apply_proj(f, M, F), N, F);
  auto rhs = apply_proj(f, pm_mul(M, N, F), F);
  CHECK(proportional(lhs, rhs, F));
}

TEST_CASE("invariance detection returns the scalar") {
  PrimeField F(29);
  auto f = klein(F);
  uint32_t z = F.root_of_unity(7);
  auto M = pm_from_entries({1, 0, 0, 0, z, 0, 0, 0, F.pow(z, 5)}, F);
  auto lam = is_invariant(f, M, F);
  REQUIRE(lam.has_value());
  CHECK(*lam == z);
  auto bad = pm_from_entries({1, 0, 0, 0, z, 0, 0, 0, z}, F);
  CHECK(!is_invariant(f, bad, F).has_value());
  // All weights zero gives scalar one.
  PrimeField F97(97);
  uint32_t w = F97.root_of_unity(16);
  auto g = make_hompoly(
      5, {{{5, 0, 0}, 1}, {{0, 4, 1}, 1}, {{1, 0, 4}, 1}}, F97);
  auto D = pm_from_entries({1, 0, 0, 0, w, 0, 0, 0, F97.pow(w, 12)}, F97);
  auto lam2 = is_invariant(g, D, F97);
  REQUIRE(lam2.has_value());
  CHECK(*lam2 == 1);
}

TEST_CASE("core keeps the maximal-exponent terms") {
  PrimeField F(97);
  auto g = make_hompoly(
      5, {{{5, 0, 0}, 1}, {{0, 4, 1}, 1}, {{1, 0, 4}, 1}, {{3, 0, 2}, 3}},
      F);
  auto c = core(g);
  CHECK(c.coeffs.size() == 1);
  CHECK(c.coeffs.count({5, 0, 0}) == 1);
  auto k = klein(F);
  CHECK(hp_eq(core(k), k));
}

TEST_CASE("resultants eliminate the third variable") {
  PrimeField F(13);
  auto f = make_hompoly(1, {{{0, 0, 1}, 1}, {{1, 0, 0}, -1}}, F);
  auto g = make_hompoly(1, {{{0, 0, 1}, 1}, {{0, 1, 0}, -1}}, F);
  CHECK(resultant_z(f, g, F) == std::vector<uint32_t>{1, 12});
  auto z2 = make_hompoly(2, {{{0, 0, 2}, 1}}, F);
  auto x = make_hompoly(1, {{{1, 0, 0}, 1}}, F);
  CHECK(resultant_z(z2, x, F) == std::vector<uint32_t>{1});
  auto a = make_hompoly(2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}}, F);
  auto b = make_hompoly(2, {{{0, 2, 0}, 1}, {{1, 0, 1}, 1}}, F);
  // Res_Z(X^2 + YZ, Y^2 + XZ) = Y^3 - X^3.
  CHECK(resultant_z(a, b, F) == std::vector<uint32_t>{12, 0, 0, 1});
  CHECK(resultant_z(a, HomPoly{2, {}}, F).empty());
}

TEST_CASE("smooth reference curves certify as smooth") {
  PrimeField F(11);
  CHECK(is_smooth(fermat(4, F), F).smooth);
  CHECK(is_smooth(klein(F), F).smooth);
  CHECK(is_smooth(fermat(5, F), F).smooth);
  PrimeField F7(7);
  auto conic = make_hompoly(
      2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}, F7);
  CHECK(is_smooth(conic, F7).smooth);
}

TEST_CASE("singular curves give verified witnesses") {
  PrimeField F(7);
  // Nodal cubic: Y^2 Z = X^3 + X^2 Z, singular at (0 : 0 : 1).
  auto nodal = make_hompoly(
      3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}}, F);
  auto res = is_smooth(nodal, F);
  REQUIRE(!res.smooth);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->ext_degree == 1);
  {
    ExtField K(F, res.witness->modulus);
    CHECK(K.is_zero(res.witness->point[0]));
    CHECK(K.is_zero(res.witness->point[1]));
    CHECK(!K.is_zero(res.witness->point[2]));
  }
  // Cuspidal cubic.
  auto cusp = make_hompoly(3, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}}, F);
  CHECK(!is_smooth(cusp, F).smooth);
  // A square factor makes a whole line singular.
  auto dbl = make_hompoly(
      3, {{{3, 0, 0}, 1}, {{2, 1, 0}, 1}, {{2, 0, 1}, 1}}, F);
  auto res2 = is_smooth(dbl, F);
  REQUIRE(!res2.smooth);
  CHECK(res2.witness->ext_degree == 1);
}

TEST_CASE("conjugate singular points land in a quadratic extension") {
  PrimeField F(7);
  // (X^2 + Y^2 + Z^2)(X + Y): the conic meets the line in two conjugate
  // points with every coordinate nonzero.
  auto conic = make_hompoly(
      2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}, F);
  auto line = make_hompoly(1, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}}, F);
  auto f = hp_mul(conic, line, F);
  auto res = is_smooth(f, F);
  REQUIRE(!res.smooth);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->ext_degree == 2);
  ExtField K(F, res.witness->modulus);
  for (const auto& c : res.witness->point) CHECK(!K.is_zero(c));
  CHECK(singular_points_scan(f, F, 1).empty());
  CHECK(singular_points_scan(f, F, 2).size() == 2);
}

TEST_CASE("error conditions") {
  PrimeField F(5);
  CHECK_THROWS_AS(is_smooth(HomPoly{3, {}}, F), std::invalid_argument);
  CHECK_THROWS_AS(is_smooth(fermat(5, F), F), FieldError);
}

TEST_CASE("brute-force scan matches the certifier on random cubics") {
  PrimeField F(5);
  SplitMix64 rng(0xABCD);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<Monomial, int64_t>> terms;
    for (unsigned i = 0; i <= 3; ++i) {
      for (unsigned j = 0; i + j <= 3; ++j) {
        unsigned k = 3 - i - j;
        if (rng.below(2)) {
          terms.push_back({{i, j, k}, static_cast<int64_t>(rng.below(5))});
        }
      }
    }
    auto f = make_hompoly(3, terms, F);
    if (f.zero()) continue;
    ++checked;
    auto res = is_smooth(f, F);
    auto s1 = singular_points_scan(f, F, 1);
    auto s2 = singular_points_scan(f, F, 2);
    if (res.smooth) {
      CHECK(s1.empty());
      CHECK(s2.empty());
    } else {
      REQUIRE(res.witness.has_value());
      if (res.witness->ext_degree <= 2) {
        CHECK(!(s1.empty() && s2.empty()));
      }
    }
    if (!s1.empty() || !s2.empty()) {
      CHECK(!res.smooth);
    }
  }
  CHECK(checked > 30);
}
