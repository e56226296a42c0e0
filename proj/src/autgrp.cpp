// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/autgrp.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <utility>

namespace plcaut {

namespace {

int64_t mod_reduce(int64_t v, int64_t n) {
  v %= n;
  if (v < 0) v += n;
  return v;
}

int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  int64_t x1, y1;
  int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Residue classes res mod step inside Z/n, or nothing at all.
struct Progression {
  bool empty = false;
  int64_t res = 0;
  int64_t step = 1;
};

// Solutions x of k*x = r (mod n).
Progression solve_congruence(int64_t k, int64_t r, int64_t n) {
  k = mod_reduce(k, n);
  r = mod_reduce(r, n);
  if (k == 0) {
    if (r == 0) return {false, 0, 1};
    return {true, 0, 1};
  }
  int64_t x, y;
  int64_t g = egcd(k, n, x, y);
  if (r % g != 0) return {true, 0, 1};
  int64_t step = n / g;
  int64_t res = mod_reduce(static_cast<int64_t>((__int128)x * (r / g)), step);
  return {false, res, step};
}

Progression intersect(const Progression& a, const Progression& b) {
  if (a.empty || b.empty) return {true, 0, 1};
  int64_t x, y;
  int64_t g = egcd(a.step, b.step, x, y);
  if ((b.res - a.res) % g != 0) return {true, 0, 1};
  int64_t lcm = a.step / g * b.step;
  __int128 shift = (__int128)(b.res - a.res) / g * x % (b.step / g);
  int64_t res = mod_reduce(a.res + static_cast<int64_t>(shift) * a.step, lcm);
  return {false, res, lcm};
}

GroupClosure finish(std::set<ProjMatrix> elems, const PrimeField& F) {
  GroupClosure out;
  out.elements.assign(elems.begin(), elems.end());
  out.order = out.elements.size();
  for (const ProjMatrix& e : out.elements) {
    ++out.order_histogram[projective_order(e, F)];
  }
  return out;
}

// Row r carries value vals[pi[r]] in column pi[r]; vals[0] is fixed to 1 so
// each projective class of monomial maps appears exactly once.
ProjMatrix monomial_matrix(const std::array<int, 3>& pi, uint32_t u,
                           uint32_t v, const PrimeField& F) {
  std::array<uint32_t, 9> e{};
  const std::array<uint32_t, 3> vals = {1, u, v};
  for (int r = 0; r < 3; ++r) e[3 * r + pi[r]] = vals[pi[r]];
  return pm_from_entries(e, F);
}

uint32_t det3(const std::array<uint32_t, 3>& a, const std::array<uint32_t, 3>& b,
              const std::array<uint32_t, 3>& c, const PrimeField& F) {
  uint32_t t0 = F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1])));
  uint32_t t1 = F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0])));
  uint32_t t2 = F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0])));
  return F.add(F.sub(t0, t1), t2);
}

// The projective map sending the standard frame e0, e1, e2, e0+e1+e2 to
// the frame (q0, q1, q2, q3), assuming general position.
ProjMatrix frame_matrix(const std::array<std::array<uint32_t, 3>, 4>& q,
                        const PrimeField& F) {
  // Solve [q0 | q1 | q2] c = q3 by Cramer; general position keeps every
  // c entry nonzero.
  uint32_t D = det3(q[0], q[1], q[2], F);
  std::array<uint32_t, 3> c = {
      F.div(det3(q[3], q[1], q[2], F), D),
      F.div(det3(q[0], q[3], q[2], F), D),
      F.div(det3(q[0], q[1], q[3], F), D)};
  std::array<uint32_t, 9> e{};
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) e[3 * r + s] = F.mul(q[s][r], c[s]);
  }
  return pm_from_entries(e, F);
}

}  // namespace

GroupClosure closure(const std::vector<ProjMatrix>& gens, const PrimeField& F,
                     std::size_t bound) {
  if (gens.empty()) {
    throw std::invalid_argument("closure needs at least one generator");
  }
  std::vector<ProjMatrix> mult;
  mult.reserve(gens.size());
  for (const ProjMatrix& g : gens) mult.push_back(pm_canon(g, F));
  std::set<ProjMatrix> seen;
  std::vector<ProjMatrix> queue;
  seen.insert(pm_identity());
  queue.push_back(pm_identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ProjMatrix x = queue[head];
    for (const ProjMatrix& g : mult) {
      ProjMatrix y = pm_mul(x, g, F);
      if (seen.insert(y).second) {
        if (seen.size() > bound) {
          throw ClosureBoundExceeded("closure exceeded " +
                                     std::to_string(bound) + " elements");
        }
        queue.push_back(y);
      }
    }
  }
  return finish(std::move(seen), F);
}

GroupClosure monomial_stabilizer(const HomPoly& f, const PrimeField& F) {
  if (f.zero()) {
    throw std::invalid_argument("monomial stabilizer of the zero form");
  }
  const int64_t n = F.p() - 1;
  std::vector<Monomial> supp;
  supp.reserve(f.coeffs.size());
  std::map<Monomial, int64_t> clog;
  for (const auto& [m, c] : f.coeffs) {
    supp.push_back(m);
    clog[m] = F.discrete_log(c);
  }
  static const std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                            {0, 2, 1},
                                                            {1, 0, 2},
                                                            {1, 2, 0},
                                                            {2, 0, 1},
                                                            {2, 1, 0}}};
  auto expo = [](const Monomial& m, int idx) -> int64_t {
    return idx == 0 ? m.i : (idx == 1 ? m.j : m.k);
  };
  std::vector<ProjMatrix> found;
  for (const auto& pi : kPerms) {
    std::array<int, 3> inv{};
    for (int r = 0; r < 3; ++r) inv[pi[r]] = r;
    auto image = [&](const Monomial& m) {
      std::array<unsigned, 3> src = {m.i, m.j, m.k};
      std::array<unsigned, 3> dst{};
      for (int r = 0; r < 3; ++r) dst[pi[r]] = src[r];
      return Monomial{dst[0], dst[1], dst[2]};
    };
    bool support_ok = true;
    for (const Monomial& m : supp) {
      if (!f.coeffs.count(image(m))) {
        support_ok = false;
        break;
      }
    }
    if (!support_ok) continue;
    // Matching the coefficient of each image monomial against the source
    // gives A(m) log u + B(m) log v - gamma(m) = log lambda (mod p-1),
    // where A and B are the exponents landing on the scaled variables.
    // Eliminating lambda against the first support monomial leaves a
    // two-variable congruence system.
    const Monomial& m0 = supp.front();
    const int64_t a0 = expo(m0, inv[1]);
    const int64_t b0 = expo(m0, inv[2]);
    const int64_t gamma0 = clog[image(m0)] - clog[m0];
    struct Eq {
      int64_t da, db, rhs;
    };
    std::vector<Eq> eqs;
    eqs.reserve(supp.size() - 1);
    for (std::size_t t = 1; t < supp.size(); ++t) {
      const Monomial& m = supp[t];
      eqs.push_back({expo(m, inv[1]) - a0, expo(m, inv[2]) - b0,
                     mod_reduce(clog[image(m)] - clog[m] - gamma0, n)});
    }
    for (int64_t lu = 0; lu < n; ++lu) {
      Progression prog{false, 0, 1};
      for (const Eq& e : eqs) {
        prog = intersect(
            prog, solve_congruence(e.db, e.rhs - e.da * lu, n));
        if (prog.empty) break;
      }
      if (prog.empty) continue;
      const uint32_t u = F.pow(F.generator(), static_cast<uint64_t>(lu));
      for (int64_t lv = prog.res; lv < n; lv += prog.step) {
        const uint32_t v = F.pow(F.generator(), static_cast<uint64_t>(lv));
        ProjMatrix cand = monomial_matrix(pi, u, v, F);
        if (is_invariant(f, cand, F)) found.push_back(cand);
      }
    }
  }
  return closure(found, F);
}

GroupClosure monomial_stabilizer(const PlaneCurve& c, const PrimeField& F) {
  return monomial_stabilizer(c.form, F);
}

bool verify_presentation(const std::vector<ProjMatrix>& gens,
                         const std::vector<RelatorWord>& relations,
                         std::size_t expected_order, const PrimeField& F) {
  if (gens.empty() || expected_order == 0) {
    throw std::invalid_argument("presentation needs generators and an order");
  }
  for (const RelatorWord& w : relations) {
    ProjMatrix acc = pm_identity();
    for (int idx : w) {
      std::size_t slot = static_cast<std::size_t>(std::abs(idx));
      if (idx == 0 || slot > gens.size()) {
        throw std::invalid_argument("relator references an unknown generator");
      }
      ProjMatrix g = pm_canon(gens[slot - 1], F);
      if (idx < 0) g = pm_inv(g, F);
      acc = pm_mul(acc, g, F);
    }
    if (!pm_is_identity(acc)) return false;
  }
  try {
    return closure(gens, F, 2 * expected_order + 8).order == expected_order;
  } catch (const ClosureBoundExceeded&) {
    return false;
  }
}

GroupClosure exhaustive_aut(const HomPoly& f, const PrimeField& F,
                            uint64_t budget) {
  if (f.zero()) {
    throw std::invalid_argument("automorphism search on the zero form");
  }
  const uint32_t p = F.p();
  using Pt = std::array<uint32_t, 3>;
  std::vector<Pt> pts;
  for (uint32_t y = 0; y < p; ++y) {
    for (uint32_t z = 0; z < p; ++z) {
      if (eval_point(f, F, {1, y, z}) == 0) pts.push_back({1, y, z});
    }
  }
  for (uint32_t z = 0; z < p; ++z) {
    if (eval_point(f, F, {0, 1, z}) == 0) pts.push_back({0, 1, z});
  }
  if (eval_point(f, F, {0, 0, 1}) == 0) pts.push_back({0, 0, 1});

  // First frame of curve points in general position, in lexicographic
  // order of index tuples.
  const std::size_t N = pts.size();
  std::array<std::size_t, 4> frame{};
  bool have_frame = false;
  for (std::size_t i0 = 0; i0 < N && !have_frame; ++i0) {
    for (std::size_t i1 = i0 + 1; i1 < N && !have_frame; ++i1) {
      for (std::size_t i2 = i1 + 1; i2 < N && !have_frame; ++i2) {
        if (det3(pts[i0], pts[i1], pts[i2], F) == 0) continue;
        for (std::size_t i3 = i2 + 1; i3 < N; ++i3) {
          if (det3(pts[i0], pts[i1], pts[i3], F) == 0) continue;
          if (det3(pts[i0], pts[i2], pts[i3], F) == 0) continue;
          if (det3(pts[i1], pts[i2], pts[i3], F) == 0) continue;
          frame = {i0, i1, i2, i3};
          have_frame = true;
          break;
        }
      }
    }
  }

  std::set<ProjMatrix> found;
  if (!have_frame) {
    // Too few points in general position; sweep every projective class.
    // Canonical representatives have first nonzero entry 1, so fixing each
    // possible position of that entry enumerates each class once.
    uint64_t classes = 1;
    for (int i = 0; i < 8; ++i) {
      classes *= p;
      if (classes > budget) {
        throw BudgetExceeded("projective matrix scan needs more than " +
                             std::to_string(budget) + " candidates");
      }
    }
    std::array<uint32_t, 9> e{};
    for (int lead = 0; lead < 9; ++lead) {
      e.fill(0);
      e[lead] = 1;
      std::array<int, 8> radix{};
      const int free_cells = 8 - lead;
      while (true) {
        for (int t = 0; t < free_cells; ++t) {
          e[lead + 1 + t] = static_cast<uint32_t>(radix[t]);
        }
        ProjMatrix cand{e};
        if (pm_det(cand, F) != 0 && is_invariant(f, cand, F)) {
          found.insert(pm_canon(cand, F));
        }
        int t = 0;
        while (t < free_cells && ++radix[t] == static_cast<int>(p)) {
          radix[t] = 0;
          ++t;
        }
        if (t == free_cells) break;
      }
      if (free_cells == 0) break;
    }
    return finish(std::move(found), F);
  }

  const ProjMatrix A =
      frame_matrix({pts[frame[0]], pts[frame[1]], pts[frame[2]],
                    pts[frame[3]]},
                   F);
  const ProjMatrix Ainv = pm_inv(A, F);
  // One spare curve point screens candidates before the full check.
  std::optional<Pt> probe;
  for (std::size_t i = 0; i < N; ++i) {
    if (i != frame[0] && i != frame[1] && i != frame[2] && i != frame[3]) {
      probe = pts[i];
      break;
    }
  }
  uint64_t examined = 0;
  for (std::size_t b0 = 0; b0 < N; ++b0) {
    for (std::size_t b1 = 0; b1 < N; ++b1) {
      if (b1 == b0) continue;
      for (std::size_t b2 = 0; b2 < N; ++b2) {
        if (b2 == b0 || b2 == b1) continue;
        if (det3(pts[b0], pts[b1], pts[b2], F) == 0) continue;
        for (std::size_t b3 = 0; b3 < N; ++b3) {
          if (b3 == b0 || b3 == b1 || b3 == b2) continue;
          if (det3(pts[b0], pts[b1], pts[b3], F) == 0) continue;
          if (det3(pts[b0], pts[b2], pts[b3], F) == 0) continue;
          if (det3(pts[b1], pts[b2], pts[b3], F) == 0) continue;
          if (++examined > budget) {
            throw BudgetExceeded("frame search needs more than " +
                                 std::to_string(budget) + " candidates");
          }
          const ProjMatrix B = frame_matrix(
              {pts[b0], pts[b1], pts[b2], pts[b3]}, F);
          const ProjMatrix M = pm_mul(B, Ainv, F);
          if (probe && eval_point(f, F, pm_apply(M, *probe, F)) != 0) {
            continue;
          }
          if (is_invariant(f, M, F)) found.insert(M);
        }
      }
    }
  }
  return finish(std::move(found), F);
}

}  // namespace plcaut
