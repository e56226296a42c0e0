// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/quotient.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

namespace plcaut {

namespace {

bool proportional_ext(const std::array<ExtField::Elem, 3>& u,
                      const std::array<ExtField::Elem, 3>& w,
                      const ExtField& K) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!K.eq(K.mul(u[i], w[j]), K.mul(u[j], w[i]))) return false;
  return true;
}

// Exact order of the stabilizer of a projective point under the cyclic
// group generated by M.  The smallest t with M^t fixing the point divides
// the projective order n, and the stabilizer has order n/t.
unsigned stabilizer_order_ext(const ProjMatrix& M,
                              const std::array<ExtField::Elem, 3>& pt,
                              const ExtField& K, unsigned n) {
  std::array<ExtField::Elem, 3> cur = pt;
  for (unsigned t = 1; t <= n; ++t) {
    cur = pm_apply_ext(M, cur, K);
    if (proportional_ext(cur, pt, K)) return n / t;
  }
  return 1;
}

std::array<ExtField::Elem, 3> normalize_point(
    std::array<ExtField::Elem, 3> pt, const ExtField& K) {
  for (auto& c : pt) {
    if (K.is_zero(c)) continue;
    ExtField::Elem s = K.inv(c);
    for (auto& x : pt) x = K.mul(x, s);
    break;
  }
  return pt;
}

// M as P diag(d0, d1, d2) P^{-1} over F_p.
struct DiagForm {
  ProjMatrix basis;
  std::array<uint32_t, 3> eigen;
};

// Basis of the kernel of a 3x3 matrix, by Gauss-Jordan elimination.
std::vector<std::array<uint32_t, 3>> kernel3(std::array<uint32_t, 9> b,
                                             const PrimeField& F) {
  int pivot_rows = 0;
  std::array<int, 3> pivot_col = {-1, -1, -1};
  std::array<bool, 3> is_pivot = {false, false, false};
  for (int col = 0; col < 3; ++col) {
    int r = pivot_rows;
    while (r < 3 && b[3 * r + col] == 0) ++r;
    if (r == 3) continue;
    for (int c = 0; c < 3; ++c) std::swap(b[3 * r + c], b[3 * pivot_rows + c]);
    uint32_t s = F.inv(b[3 * pivot_rows + col]);
    for (int c = 0; c < 3; ++c)
      b[3 * pivot_rows + c] = F.mul(b[3 * pivot_rows + c], s);
    for (int rr = 0; rr < 3; ++rr) {
      if (rr == pivot_rows || b[3 * rr + col] == 0) continue;
      uint32_t f = b[3 * rr + col];
      for (int c = 0; c < 3; ++c)
        b[3 * rr + c] = F.sub(b[3 * rr + c], F.mul(f, b[3 * pivot_rows + c]));
    }
    pivot_col[pivot_rows] = col;
    is_pivot[col] = true;
    ++pivot_rows;
  }
  std::vector<std::array<uint32_t, 3>> basis;
  for (int c = 0; c < 3; ++c) {
    if (is_pivot[c]) continue;
    std::array<uint32_t, 3> v = {0, 0, 0};
    v[c] = 1;
    for (int r = 0; r < pivot_rows; ++r)
      v[pivot_col[r]] = F.neg(b[3 * r + c]);
    basis.push_back(v);
  }
  return basis;
}

DiagForm diagonalize(const ProjMatrix& M, const PrimeField& F) {
  if (pm_is_diagonal(M)) return {pm_identity(), {M.m[0], M.m[4], M.m[8]}};
  const auto& a = M.m;
  uint32_t tr = F.add(F.add(a[0], a[4]), a[8]);
  uint32_t c1 = F.sub(F.mul(a[0], a[4]), F.mul(a[1], a[3]));
  c1 = F.add(c1, F.sub(F.mul(a[0], a[8]), F.mul(a[2], a[6])));
  c1 = F.add(c1, F.sub(F.mul(a[4], a[8]), F.mul(a[5], a[7])));
  uint32_t det = pm_det(M, F);

  ExtField L(F, 1);
  ExtField::Poly cp = L.lift({F.neg(det), c1, F.neg(tr), 1});
  std::vector<uint32_t> eigenvalues;
  for (const auto& root : L.roots(L.p_radical(cp)))
    eigenvalues.push_back(L.to_base(root));

  unsigned rational_multiplicity = 0;
  for (uint32_t lambda : eigenvalues) {
    ExtField::Poly lin = {L.from_base(F.neg(lambda)), L.one()};
    ExtField::Poly rest = cp;
    while (ExtField::p_deg(rest) >= 1 &&
           L.is_zero(L.p_eval(rest, L.from_base(lambda)))) {
      rest = L.p_quot(rest, lin);
      ++rational_multiplicity;
    }
  }
  if (rational_multiplicity < 3)
    throw FieldError(
        "matrix has an eigenvalue outside the base field; rerun over a field "
        "containing all eigenvalues of the action");

  std::array<uint32_t, 9> basis_cols{};
  std::array<uint32_t, 3> eig{};
  unsigned filled = 0;
  for (uint32_t lambda : eigenvalues) {
    std::array<uint32_t, 9> b = a;
    for (int i = 0; i < 3; ++i)
      b[4 * i] = F.sub(b[4 * i], lambda);
    for (const auto& v : kernel3(b, F)) {
      if (filled == 3) break;
      for (int r = 0; r < 3; ++r) basis_cols[3 * r + filled] = v[r];
      eig[filled] = lambda;
      ++filled;
    }
  }
  if (filled < 3)
    throw std::invalid_argument(
        "matrix is not diagonalizable: eigenspaces are too small");
  return {pm_from_entries(basis_cols, F), eig};
}

std::array<ExtField::Elem, 3> unit_point(int i, const ExtField& K) {
  std::array<ExtField::Elem, 3> pt = {K.zero(), K.zero(), K.zero()};
  pt[i] = K.one();
  return pt;
}

struct KeyedPoint {
  std::tuple<unsigned, uint64_t, uint64_t, uint64_t> key;
  BranchPoint bp;
};

// Maps a point found in the eigenbasis back through the basis matrix,
// verifies it against the original data and records it with a sort key.
void emit_point(std::vector<KeyedPoint>& out, const HomPoly& f,
                const ProjMatrix& M, const ProjMatrix& basis,
                const std::array<ExtField::Elem, 3>& w, const ExtField& K,
                unsigned n) {
  std::array<ExtField::Elem, 3> v =
      normalize_point(pm_apply_ext(basis, w, K), K);
  if (!K.is_zero(eval_point_ext(f, K, v)))
    throw std::logic_error("fixed-point candidate is not on the curve");
  unsigned s = stabilizer_order_ext(M, v, K, n);
  if (s <= 1) return;
  out.push_back(
      {{K.e(), K.to_index(v[0]), K.to_index(v[1]), K.to_index(v[2])},
       BranchPoint{K.e(), K.modulus(), v, s}});
}

}  // namespace

uint64_t genus(unsigned d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  return static_cast<uint64_t>(d - 1) * (d - 2) / 2;
}

std::vector<BranchPoint> fixed_points(const HomPoly& f, const ProjMatrix& M,
                                      const PrimeField& F) {
  if (f.zero()) throw std::invalid_argument("zero form has no curve");
  if (!is_invariant(f, M, F))
    throw std::invalid_argument("matrix does not stabilize the curve");
  unsigned n = projective_order(M, F);
  std::vector<KeyedPoint> found;
  if (n == 1) return {};

  DiagForm dg = diagonalize(M, F);
  HomPoly g = apply_proj(f, dg.basis, F);

  ExtField base1(F, 1);
  std::map<unsigned, ExtField> fields;
  fields.emplace(1, base1);

  // Vertices of the eigenbasis frame are always fixed, so each one lying on
  // the curve carries the full group as stabilizer.
  for (int i = 0; i < 3; ++i) {
    std::array<uint32_t, 3> v = {0, 0, 0};
    v[i] = 1;
    if (eval_point(g, F, v) == 0)
      emit_point(found, f, M, dg.basis, unit_point(i, base1), base1, n);
  }

  // A coordinate line of the frame carries interior fixed points exactly
  // when the ratio of its two eigenvalues has order smaller than n.  Those
  // points are the nonzero roots of the restricted form, and they may live
  // in extensions.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      int other = 3 - i - j;
      uint32_t ratio = F.div(dg.eigen[j], dg.eigen[i]);
      if (F.order_of(ratio) == n) continue;

      std::vector<uint32_t> q(g.d + 1, 0);
      auto expo = [&](const Monomial& mo, int axis) {
        return axis == 0 ? mo.i : axis == 1 ? mo.j : mo.k;
      };
      for (const auto& [mo, c] : g.coeffs)
        if (expo(mo, other) == 0) q[expo(mo, j)] = c;
      unsigned lo = 0;
      while (lo <= g.d && q[lo] == 0) ++lo;
      if (lo > g.d)
        throw std::invalid_argument(
            "the curve contains a line fixed pointwise by the action");
      std::vector<uint32_t> shifted(q.begin() + lo, q.end());

      ExtField::Poly lifted = base1.lift(shifted);
      for (const auto& factor :
           base1.factor_squarefree(base1.p_radical(lifted))) {
        unsigned deg = static_cast<unsigned>(ExtField::p_deg(factor));
        auto it = fields.find(deg);
        if (it == fields.end())
          it = fields.emplace(deg, ExtField(F, deg)).first;
        const ExtField& K = it->second;
        std::vector<ExtField::Elem> roots = K.roots(K.lift(base1.lower(factor)));
        if (roots.size() != deg)
          throw std::logic_error("irreducible factor lost roots");
        for (const auto& z : roots) {
          std::array<ExtField::Elem, 3> w = {K.zero(), K.zero(), K.zero()};
          w[i] = K.one();
          w[j] = z;
          emit_point(found, f, M, dg.basis, w, K, n);
        }
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const KeyedPoint& a, const KeyedPoint& b) {
              return a.key < b.key;
            });
  std::vector<BranchPoint> out;
  out.reserve(found.size());
  for (auto& kp : found) out.push_back(std::move(kp.bp));
  return out;
}

std::vector<BranchPoint> fixed_points(const PlaneCurve& c, const ProjMatrix& M,
                                      const PrimeField& F) {
  return fixed_points(c.form, M, F);
}

std::vector<BranchPoint> fixed_points_scan(const HomPoly& f,
                                           const ProjMatrix& M,
                                           const PrimeField& F, unsigned e) {
  unsigned n = projective_order(M, F);
  ExtField K(F, e);
  uint64_t q = K.q();
  std::vector<KeyedPoint> found;

  // Powers of the two running coordinates are cached so each point costs
  // two multiplications per term instead of three exponentiations.
  std::vector<ExtField::Elem> ypow(f.d + 1, K.one()), zpow(f.d + 1, K.one());
  struct Term {
    unsigned i, j, k;
    ExtField::Elem c;
  };
  std::vector<Term> terms;
  for (const auto& [mo, c] : f.coeffs)
    terms.push_back({mo.i, mo.j, mo.k, K.from_base(c)});
  auto consider = [&](const std::array<ExtField::Elem, 3>& pt) {
    unsigned s = stabilizer_order_ext(M, pt, K, n);
    if (s > 1)
      found.push_back(
          {{e, K.to_index(pt[0]), K.to_index(pt[1]), K.to_index(pt[2])},
           BranchPoint{e, K.modulus(), pt, s}});
  };

  for (uint64_t yi = 0; yi < q; ++yi) {
    ExtField::Elem y = K.from_index(yi);
    for (unsigned t = 1; t <= f.d; ++t) ypow[t] = K.mul(ypow[t - 1], y);
    for (uint64_t zi = 0; zi < q; ++zi) {
      ExtField::Elem z = K.from_index(zi);
      for (unsigned t = 1; t <= f.d; ++t) zpow[t] = K.mul(zpow[t - 1], z);
      ExtField::Elem acc = K.zero();
      for (const auto& t : terms)
        acc = K.add(acc, K.mul(t.c, K.mul(ypow[t.j], zpow[t.k])));
      if (K.is_zero(acc)) consider({K.one(), y, z});
    }
  }
  for (uint64_t zi = 0; zi < q; ++zi) {
    ExtField::Elem z = K.from_index(zi);
    for (unsigned t = 1; t <= f.d; ++t) zpow[t] = K.mul(zpow[t - 1], z);
    ExtField::Elem acc = K.zero();
    for (const auto& t : terms)
      if (t.i == 0) acc = K.add(acc, K.mul(t.c, zpow[t.k]));
    if (K.is_zero(acc)) consider({K.zero(), K.one(), z});
  }
  {
    auto it = f.coeffs.find(Monomial{0, 0, f.d});
    if (it == f.coeffs.end()) consider({K.zero(), K.zero(), K.one()});
  }

  std::sort(found.begin(), found.end(),
            [](const KeyedPoint& a, const KeyedPoint& b) {
              return a.key < b.key;
            });
  std::vector<BranchPoint> out;
  out.reserve(found.size());
  for (auto& kp : found) out.push_back(std::move(kp.bp));
  return out;
}

BranchData branch_data(const std::vector<BranchPoint>& points,
                       uint64_t group_order) {
  std::map<unsigned, uint64_t> count_by_stab;
  for (const auto& bp : points) {
    if (bp.stabilizer_order < 2 || group_order % bp.stabilizer_order != 0)
      throw InconsistentBranchData(
          "stabilizer order does not divide the group order");
    ++count_by_stab[bp.stabilizer_order];
  }
  BranchData data;
  data.group_order = group_order;
  for (auto it = count_by_stab.rbegin(); it != count_by_stab.rend(); ++it) {
    auto [s, count] = *it;
    uint64_t orbit_size = group_order / s;
    if (count % orbit_size != 0)
      throw InconsistentBranchData(
          "fixed points do not split into whole orbits");
    for (uint64_t r = 0; r < count / orbit_size; ++r)
      data.orbits.push_back({orbit_size, s});
  }
  return data;
}

uint64_t hurwitz_quotient_genus(uint64_t g, const BranchData& data) {
  if (data.group_order < 1)
    throw InconsistentBranchData("group order must be positive");
  int64_t n = static_cast<int64_t>(data.group_order);
  int64_t ram = 0;
  for (const auto& orb : data.orbits) {
    if (orb.e < 2)
      throw InconsistentBranchData("ramification index below 2 in an orbit");
    if (static_cast<int64_t>(orb.size) * orb.e != n)
      throw InconsistentBranchData("orbit size times index misses the order");
    ram += static_cast<int64_t>(orb.size) * (orb.e - 1);
  }
  int64_t numer = 2 * static_cast<int64_t>(g) - 2 + 2 * n - ram;
  if (numer < 0 || numer % (2 * n) != 0)
    throw InconsistentBranchData(
        "no nonnegative integer genus satisfies the Hurwitz formula");
  return static_cast<uint64_t>(numer / (2 * n));
}

QuotientReport quotient_analysis(const HomPoly& f, const ProjMatrix& M,
                                 const PrimeField& F) {
  QuotientReport rep;
  rep.group_order = projective_order(M, F);
  rep.points = fixed_points(f, M, F);
  rep.data = branch_data(rep.points, rep.group_order);
  rep.quotient_genus = hurwitz_quotient_genus(genus(f.d), rep.data);
  return rep;
}

}  // namespace plcaut
