// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "plcaut/ff.hpp"

namespace plcaut {

// Invertible 3x3 matrix over F_p up to scalars, stored row-major in the
// canonical scaling where the first nonzero entry equals 1.  Equality of
// canonical representatives is equality in PGL_3(F_p).
struct ProjMatrix {
  std::array<uint32_t, 9> m{};

  auto operator<=>(const ProjMatrix&) const = default;
};

// Canonicalizes and validates invertibility; throws std::invalid_argument on
// a singular matrix.
ProjMatrix pm_from_entries(const std::array<uint32_t, 9>& entries,
                           const PrimeField& F);
ProjMatrix pm_identity();
ProjMatrix pm_canon(ProjMatrix a, const PrimeField& F);
uint32_t pm_det(const ProjMatrix& a, const PrimeField& F);
ProjMatrix pm_mul(const ProjMatrix& a, const ProjMatrix& b,
                  const PrimeField& F);
ProjMatrix pm_inv(const ProjMatrix& a, const PrimeField& F);
ProjMatrix pm_pow(const ProjMatrix& a, uint64_t e, const PrimeField& F);
bool pm_is_identity(const ProjMatrix& a);
bool pm_is_diagonal(const ProjMatrix& a);

// Smallest n >= 1 with a^n scalar; throws FieldError past the bound.
unsigned projective_order(const ProjMatrix& a, const PrimeField& F,
                          unsigned bound = 100000);

std::array<uint32_t, 3> pm_apply(const ProjMatrix& a,
                                 const std::array<uint32_t, 3>& v,
                                 const PrimeField& F);
std::array<ExtField::Elem, 3> pm_apply_ext(
    const ProjMatrix& a, const std::array<ExtField::Elem, 3>& v,
    const ExtField& K);

}  // namespace plcaut
