// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/projmatrix.hpp"

#include <stdexcept>

namespace plcaut {

uint32_t pm_det(const ProjMatrix& a, const PrimeField& F) {
  const auto& m = a.m;
  uint32_t t0 = F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7])));
  uint32_t t1 = F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6])));
  uint32_t t2 = F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6])));
  return F.add(F.sub(t0, t1), t2);
}

ProjMatrix pm_canon(ProjMatrix a, const PrimeField& F) {
  for (uint32_t& x : a.m) x %= F.p();
  for (uint32_t x : a.m) {
    if (x != 0) {
      if (x != 1) {
        uint32_t c = F.inv(x);
        for (uint32_t& y : a.m) y = F.mul(y, c);
      }
      return a;
    }
  }
  return a;
}

ProjMatrix pm_from_entries(const std::array<uint32_t, 9>& entries,
                           const PrimeField& F) {
  ProjMatrix a{entries};
  for (uint32_t& x : a.m) x %= F.p();
  if (pm_det(a, F) == 0) {
    throw std::invalid_argument("projective matrix must be invertible");
  }
  return pm_canon(a, F);
}

ProjMatrix pm_identity() { return ProjMatrix{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

ProjMatrix pm_mul(const ProjMatrix& a, const ProjMatrix& b,
                  const PrimeField& F) {
  ProjMatrix c;
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      uint32_t acc = 0;
      for (int t = 0; t < 3; ++t) {
        acc = F.add(acc, F.mul(a.m[3 * r + t], b.m[3 * t + s]));
      }
      c.m[3 * r + s] = acc;
    }
  }
  return pm_canon(c, F);
}

ProjMatrix pm_inv(const ProjMatrix& a, const PrimeField& F) {
  uint32_t det = pm_det(a, F);
  if (det == 0) throw std::invalid_argument("singular matrix has no inverse");
  const auto& m = a.m;
  auto cof = [&](int r0, int c0, int r1, int c1) {
    return F.sub(F.mul(m[3 * r0 + c0], m[3 * r1 + c1]),
                 F.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  ProjMatrix adj;
  adj.m = {cof(1, 1, 2, 2), F.neg(cof(0, 1, 2, 2)), cof(0, 1, 1, 2),
           F.neg(cof(1, 0, 2, 2)), cof(0, 0, 2, 2), F.neg(cof(0, 0, 1, 2)),
           cof(1, 0, 2, 1), F.neg(cof(0, 0, 2, 1)), cof(0, 0, 1, 1)};
  return pm_canon(adj, F);
}

ProjMatrix pm_pow(const ProjMatrix& a, uint64_t e, const PrimeField& F) {
  ProjMatrix r = pm_identity();
  ProjMatrix b = pm_canon(a, F);
  while (e) {
    if (e & 1) r = pm_mul(r, b, F);
    b = pm_mul(b, b, F);
    e >>= 1;
  }
  return r;
}

bool pm_is_identity(const ProjMatrix& a) { return a == pm_identity(); }

bool pm_is_diagonal(const ProjMatrix& a) {
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      if (r != s && a.m[3 * r + s] != 0) return false;
    }
  }
  return true;
}

unsigned projective_order(const ProjMatrix& a, const PrimeField& F,
                          unsigned bound) {
  ProjMatrix b = pm_canon(a, F);
  ProjMatrix cur = b;
  for (unsigned n = 1; n <= bound; ++n) {
    if (pm_is_identity(cur)) return n;
    cur = pm_mul(cur, b, F);
  }
  throw FieldError("projective order exceeds bound");
}

std::array<uint32_t, 3> pm_apply(const ProjMatrix& a,
                                 const std::array<uint32_t, 3>& v,
                                 const PrimeField& F) {
  std::array<uint32_t, 3> w{};
  for (int r = 0; r < 3; ++r) {
    uint32_t acc = 0;
    for (int s = 0; s < 3; ++s) {
      acc = F.add(acc, F.mul(a.m[3 * r + s], v[s] % F.p()));
    }
    w[r] = acc;
  }
  return w;
}

std::array<ExtField::Elem, 3> pm_apply_ext(
    const ProjMatrix& a, const std::array<ExtField::Elem, 3>& v,
    const ExtField& K) {
  std::array<ExtField::Elem, 3> w = {K.zero(), K.zero(), K.zero()};
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      w[r] = K.add(w[r], K.mul(K.from_base(a.m[3 * r + s]), v[s]));
    }
  }
  return w;
}

}  // namespace plcaut
