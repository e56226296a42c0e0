// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plcaut {

unsigned Monomial::exponent() const { return std::max(i, std::max(j, k)); }

HomPoly make_hompoly(unsigned d,
                     const std::vector<std::pair<Monomial, int64_t>>& terms,
                     const PrimeField& F) {
  HomPoly f;
  f.d = d;
  for (const auto& [mono, c] : terms) {
    if (mono.degree() != d) {
      throw std::invalid_argument("term degree does not match the form");
    }
    uint32_t v = F.add(f.coeffs.count(mono) ? f.coeffs[mono] : 0, F.reduce(c));
    if (v == 0) {
      f.coeffs.erase(mono);
    } else {
      f.coeffs[mono] = v;
    }
  }
  return f;
}

HomPoly hp_add(const HomPoly& a, const HomPoly& b, const PrimeField& F) {
  if (a.d != b.d && !a.zero() && !b.zero()) {
    throw std::invalid_argument("degree mismatch in sum");
  }
  HomPoly r = a;
  if (r.zero()) r.d = b.d;
  for (const auto& [mono, c] : b.coeffs) {
    uint32_t v = F.add(r.coeffs.count(mono) ? r.coeffs[mono] : 0, c);
    if (v == 0) {
      r.coeffs.erase(mono);
    } else {
      r.coeffs[mono] = v;
    }
  }
  return r;
}

HomPoly hp_scale(const HomPoly& a, uint32_t c, const PrimeField& F) {
  HomPoly r;
  r.d = a.d;
  c %= F.p();
  if (c == 0) return r;
  for (const auto& [mono, v] : a.coeffs) r.coeffs[mono] = F.mul(v, c);
  return r;
}

HomPoly hp_mul(const HomPoly& a, const HomPoly& b, const PrimeField& F) {
  HomPoly r;
  r.d = a.d + b.d;
  for (const auto& [ma, ca] : a.coeffs) {
    for (const auto& [mb, cb] : b.coeffs) {
      Monomial m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
      uint32_t v = F.add(r.coeffs.count(m) ? r.coeffs[m] : 0, F.mul(ca, cb));
      if (v == 0) {
        r.coeffs.erase(m);
      } else {
        r.coeffs[m] = v;
      }
    }
  }
  return r;
}

bool hp_eq(const HomPoly& a, const HomPoly& b) {
  return a.coeffs == b.coeffs && (a.zero() || b.zero() || a.d == b.d);
}

std::array<HomPoly, 3> partials(const HomPoly& f, const PrimeField& F) {
  std::array<HomPoly, 3> out;
  for (auto& g : out) g.d = f.d == 0 ? 0 : f.d - 1;
  for (const auto& [m, c] : f.coeffs) {
    if (m.i > 0) {
      uint32_t v = F.mul(c, F.reduce(m.i));
      if (v) out[0].coeffs[{m.i - 1, m.j, m.k}] = v;
    }
    if (m.j > 0) {
      uint32_t v = F.mul(c, F.reduce(m.j));
      if (v) out[1].coeffs[{m.i, m.j - 1, m.k}] = v;
    }
    if (m.k > 0) {
      uint32_t v = F.mul(c, F.reduce(m.k));
      if (v) out[2].coeffs[{m.i, m.j, m.k - 1}] = v;
    }
  }
  return out;
}

uint32_t eval_point(const HomPoly& f, const PrimeField& F,
                    const std::array<uint32_t, 3>& v) {
  std::array<std::vector<uint32_t>, 3> pw;
  for (int t = 0; t < 3; ++t) {
    pw[t].assign(f.d + 1, 1);
    for (unsigned e = 1; e <= f.d; ++e) pw[t][e] = F.mul(pw[t][e - 1], v[t] % F.p());
  }
  uint32_t acc = 0;
  for (const auto& [m, c] : f.coeffs) {
    acc = F.add(acc, F.mul(c, F.mul(pw[0][m.i], F.mul(pw[1][m.j], pw[2][m.k]))));
  }
  return acc;
}

ExtField::Elem eval_point_ext(const HomPoly& f, const ExtField& K,
                              const std::array<ExtField::Elem, 3>& v) {
  std::array<std::vector<ExtField::Elem>, 3> pw;
  for (int t = 0; t < 3; ++t) {
    pw[t].assign(f.d + 1, K.one());
    for (unsigned e = 1; e <= f.d; ++e) pw[t][e] = K.mul(pw[t][e - 1], v[t]);
  }
  ExtField::Elem acc = K.zero();
  for (const auto& [m, c] : f.coeffs) {
    ExtField::Elem term = K.mul(pw[0][m.i], K.mul(pw[1][m.j], pw[2][m.k]));
    acc = K.add(acc, K.mul(K.from_base(c), term));
  }
  return acc;
}

namespace {

// Monomial matrices act by permuting variables and scaling, which keeps the
// substitution a single term per term.
bool monomial_structure(const ProjMatrix& M, std::array<int, 3>* col,
                        std::array<uint32_t, 3>* scale) {
  for (int r = 0; r < 3; ++r) {
    int nz = -1;
    for (int s = 0; s < 3; ++s) {
      if (M.m[3 * r + s] != 0) {
        if (nz >= 0) return false;
        nz = s;
      }
    }
    if (nz < 0) return false;
    (*col)[r] = nz;
    (*scale)[r] = M.m[3 * r + nz];
  }
  return true;
}

}  // namespace

HomPoly apply_proj(const HomPoly& f, const ProjMatrix& M,
                   const PrimeField& F) {
  HomPoly out;
  out.d = f.d;
  std::array<int, 3> col;
  std::array<uint32_t, 3> scale;
  if (monomial_structure(M, &col, &scale)) {
    std::array<std::vector<uint32_t>, 3> pw;
    for (int t = 0; t < 3; ++t) {
      pw[t].assign(f.d + 1, 1);
      for (unsigned e = 1; e <= f.d; ++e) pw[t][e] = F.mul(pw[t][e - 1], scale[t]);
    }
    for (const auto& [m, c] : f.coeffs) {
      std::array<unsigned, 3> ex{};
      ex[col[0]] = m.i;
      ex[col[1]] = m.j;
      ex[col[2]] = m.k;
      Monomial nm{ex[0], ex[1], ex[2]};
      uint32_t v = F.mul(c, F.mul(pw[0][m.i], F.mul(pw[1][m.j], pw[2][m.k])));
      uint32_t acc = F.add(out.coeffs.count(nm) ? out.coeffs[nm] : 0, v);
      if (acc == 0) {
        out.coeffs.erase(nm);
      } else {
        out.coeffs[nm] = acc;
      }
    }
    return out;
  }
  // General path: powers of the three substituted linear forms.
  std::array<std::vector<HomPoly>, 3> pw;
  for (int r = 0; r < 3; ++r) {
    HomPoly lin;
    lin.d = 1;
    if (M.m[3 * r]) lin.coeffs[{1, 0, 0}] = M.m[3 * r];
    if (M.m[3 * r + 1]) lin.coeffs[{0, 1, 0}] = M.m[3 * r + 1];
    if (M.m[3 * r + 2]) lin.coeffs[{0, 0, 1}] = M.m[3 * r + 2];
    HomPoly acc;
    acc.d = 0;
    acc.coeffs[{0, 0, 0}] = 1;
    pw[r].push_back(acc);
    for (unsigned e = 1; e <= f.d; ++e) {
      pw[r].push_back(hp_mul(pw[r].back(), lin, F));
    }
  }
  for (const auto& [m, c] : f.coeffs) {
    HomPoly term = hp_mul(pw[0][m.i], hp_mul(pw[1][m.j], pw[2][m.k], F), F);
    out = hp_add(out, hp_scale(term, c, F), F);
  }
  out.d = f.d;
  return out;
}

std::optional<uint32_t> is_invariant(const HomPoly& f, const ProjMatrix& M,
                                     const PrimeField& F) {
  if (f.zero()) return std::nullopt;
  HomPoly g = apply_proj(f, M, F);
  const auto& [mono, c] = *f.coeffs.begin();
  auto it = g.coeffs.find(mono);
  if (it == g.coeffs.end()) return std::nullopt;
  uint32_t lambda = F.div(it->second, c);
  if (hp_eq(g, hp_scale(f, lambda, F))) return lambda;
  return std::nullopt;
}

HomPoly core(const HomPoly& f) {
  HomPoly r;
  r.d = f.d;
  unsigned top = 0;
  for (const auto& [m, c] : f.coeffs) top = std::max(top, m.exponent());
  for (const auto& [m, c] : f.coeffs) {
    if (m.exponent() == top) r.coeffs[m] = c;
  }
  return r;
}

namespace {

int z_degree(const HomPoly& f) {
  int zd = -1;
  for (const auto& [m, c] : f.coeffs) zd = std::max(zd, static_cast<int>(m.k));
  return zd;
}

// Coefficients in T of a Z-free form evaluated at (1, T, 0).
std::vector<uint32_t> dehomog_t(const HomPoly& f) {
  std::vector<uint32_t> v;
  for (const auto& [m, c] : f.coeffs) {
    if (v.size() <= m.j) v.resize(m.j + 1, 0);
    v[m.j] = c;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Coefficients in Z of f evaluated at (1, t0, Z) over K.
ExtField::Poly specialize_z(const HomPoly& f, const ExtField& K,
                            const ExtField::Elem& t0) {
  std::vector<ExtField::Elem> pow_t(f.d + 1, K.one());
  for (unsigned e = 1; e <= f.d; ++e) pow_t[e] = K.mul(pow_t[e - 1], t0);
  ExtField::Poly out;
  for (const auto& [m, c] : f.coeffs) {
    if (out.size() <= m.k) out.resize(m.k + 1, K.zero());
    out[m.k] = K.add(out[m.k], K.mul(K.from_base(c), pow_t[m.j]));
  }
  return K.p_trim(std::move(out));
}

ExtField::Elem det_gauss(const ExtField& K,
                         std::vector<std::vector<ExtField::Elem>> a) {
  size_t n = a.size();
  ExtField::Elem det = K.one();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && K.is_zero(a[piv][c])) ++piv;
    if (piv == n) return K.zero();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = K.neg(det);
    }
    det = K.mul(det, a[c][c]);
    ExtField::Elem inv = K.inv(a[c][c]);
    for (size_t r = c + 1; r < n; ++r) {
      if (K.is_zero(a[r][c])) continue;
      ExtField::Elem fct = K.mul(a[r][c], inv);
      for (size_t s = c; s < n; ++s) {
        a[r][s] = K.sub(a[r][s], K.mul(fct, a[c][s]));
      }
    }
  }
  return det;
}

ExtField::Poly lagrange_interpolate(const ExtField& K,
                                    const std::vector<ExtField::Elem>& xs,
                                    const std::vector<ExtField::Elem>& ys) {
  // Full product prod = (x - x_0)...(x - x_n); each basis numerator comes
  // from one synthetic division.
  ExtField::Poly prod = {K.one()};
  for (const auto& x : xs) {
    prod = K.p_mul(prod, ExtField::Poly{K.neg(x), K.one()});
  }
  ExtField::Poly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    ExtField::Poly quo = K.p_quot(prod, ExtField::Poly{K.neg(xs[i]), K.one()});
    ExtField::Elem denom = K.p_eval(quo, xs[i]);
    ExtField::Elem w = K.mul(ys[i], K.inv(denom));
    acc = K.p_add(acc, K.p_scale(quo, w));
  }
  return acc;
}

}  // namespace

std::vector<uint32_t> resultant_z(const HomPoly& f, const HomPoly& g,
                                  const PrimeField& F) {
  if (f.zero() || g.zero()) return {};
  int a = z_degree(f);
  int b = z_degree(g);
  ExtField k1(F, 1);
  if (a == 0 && b == 0) return {1};
  if (b == 0) {
    ExtField::Poly r = {k1.one()};
    ExtField::Poly u = k1.lift(dehomog_t(g));
    for (int i = 0; i < a; ++i) r = k1.p_mul(r, u);
    return k1.lower(r);
  }
  if (a == 0) {
    ExtField::Poly r = {k1.one()};
    ExtField::Poly u = k1.lift(dehomog_t(f));
    for (int i = 0; i < b; ++i) r = k1.p_mul(r, u);
    return k1.lower(r);
  }
  int m = static_cast<int>(f.d), n = static_cast<int>(g.d);
  int dstar = b * m + a * n - a * b;
  unsigned points = static_cast<unsigned>(dstar) + 2;
  unsigned kdeg = 1;
  {
    uint64_t cap = F.p();
    while (cap < points) {
      ++kdeg;
      cap = cap > UINT64_MAX / F.p() ? UINT64_MAX : cap * F.p();
    }
  }
  ExtField K(F, kdeg);
  std::vector<ExtField::Elem> xs, ys;
  xs.reserve(points);
  ys.reserve(points);
  const int size = a + b;
  for (unsigned idx = 0; idx < points; ++idx) {
    ExtField::Elem tau = K.from_index(idx);
    std::vector<ExtField::Elem> pow_t(std::max(f.d, g.d) + 1, K.one());
    for (size_t e = 1; e < pow_t.size(); ++e) pow_t[e] = K.mul(pow_t[e - 1], tau);
    std::vector<ExtField::Elem> A(a + 1, K.zero()), B(b + 1, K.zero());
    for (const auto& [mo, c] : f.coeffs) {
      A[mo.k] = K.add(A[mo.k], K.mul(K.from_base(c), pow_t[mo.j]));
    }
    for (const auto& [mo, c] : g.coeffs) {
      B[mo.k] = K.add(B[mo.k], K.mul(K.from_base(c), pow_t[mo.j]));
    }
    std::vector<std::vector<ExtField::Elem>> syl(
        size, std::vector<ExtField::Elem>(size, K.zero()));
    for (int r = 0; r < b; ++r) {
      for (int z = 0; z <= a; ++z) syl[r][r + a - z] = A[z];
    }
    for (int r = 0; r < a; ++r) {
      for (int z = 0; z <= b; ++z) syl[b + r][r + b - z] = B[z];
    }
    xs.push_back(tau);
    ys.push_back(det_gauss(K, std::move(syl)));
  }
  ExtField::Poly interp = K.p_trim(lagrange_interpolate(K, xs, ys));
  if (ExtField::p_deg(interp) > dstar) {
    throw std::logic_error("resultant interpolation exceeded its degree bound");
  }
  std::vector<uint32_t> out;
  out.reserve(interp.size());
  for (const auto& c : interp) {
    if (!K.in_base(c)) {
      throw std::logic_error("resultant coefficient escaped the base field");
    }
    out.push_back(K.to_base(c));
  }
  return out;
}

namespace {

// Restriction of a form to one coordinate line, as a univariate in the free
// parameter: sel 0 is the line X=0 through (0,1,s), sel 1 is Y=0 through
// (1,0,s), sel 2 is Z=0 through (1,s,0).
std::vector<uint32_t> restrict_line(const HomPoly& f, int sel) {
  std::vector<uint32_t> v;
  for (const auto& [m, c] : f.coeffs) {
    unsigned keep = 0, power = 0;
    if (sel == 0) {
      keep = m.i;
      power = m.k;
    } else if (sel == 1) {
      keep = m.j;
      power = m.k;
    } else {
      keep = m.k;
      power = m.j;
    }
    if (keep != 0) continue;
    if (v.size() <= power) v.resize(power + 1, 0);
    v[power] = c;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::array<ExtField::Elem, 3> line_point(const ExtField& K, int sel,
                                         const ExtField::Elem& s) {
  if (sel == 0) return {K.zero(), K.one(), s};
  if (sel == 1) return {K.one(), K.zero(), s};
  return {K.one(), s, K.zero()};
}

bool witness_checks(const HomPoly& f, const std::array<HomPoly, 3>& dv,
                    const ExtField& K,
                    const std::array<ExtField::Elem, 3>& pt) {
  bool nonzero = false;
  for (const auto& c : pt) nonzero = nonzero || !K.is_zero(c);
  if (!nonzero) return false;
  if (!K.is_zero(eval_point_ext(f, K, pt))) return false;
  for (const auto& g : dv) {
    if (!K.is_zero(eval_point_ext(g, K, pt))) return false;
  }
  return true;
}

SingularWitness make_witness(const ExtField& K,
                             const std::array<ExtField::Elem, 3>& pt) {
  SingularWitness w;
  w.ext_degree = K.e();
  w.modulus = K.modulus();
  w.point = pt;
  return w;
}

ExtField::Poly gcd_list(const ExtField& K,
                        const std::vector<ExtField::Poly>& polys) {
  ExtField::Poly g;
  for (const auto& f : polys) g = g.empty() ? K.p_trim(f) : K.p_gcd(g, f);
  return g;
}

SmoothResult smooth_rec(const HomPoly& f, const PrimeField& F,
                        SplitMix64& rng, int depth);

// Step inside one choice of chart: eliminate Z between the partials of g and
// chase every candidate Y-value down to an actual point.  Returns nothing
// when the constraint system is degenerate for this chart.
std::optional<SmoothResult> chart_scan(const HomPoly& g, const PrimeField& F) {
  auto dv = partials(g, F);
  ExtField k1(F, 1);
  std::vector<ExtField::Poly> constraints;
  for (int s = 0; s < 3; ++s) {
    for (int t = s + 1; t < 3; ++t) {
      if (z_degree(dv[s]) > 0 && z_degree(dv[t]) > 0) {
        auto r = resultant_z(dv[s], dv[t], F);
        if (!r.empty()) constraints.push_back(k1.lift(r));
      }
    }
  }
  for (int t = 0; t < 3; ++t) {
    if (!dv[t].zero() && z_degree(dv[t]) == 0) {
      constraints.push_back(k1.lift(dehomog_t(dv[t])));
    }
  }
  if (constraints.empty()) return std::nullopt;
  ExtField::Poly cand = gcd_list(k1, constraints);
  if (cand.empty()) return std::nullopt;
  // Candidates at T = 0 sit on a coordinate line, which the line pass has
  // already covered.
  size_t shift = 0;
  while (shift < cand.size() && k1.is_zero(cand[shift])) ++shift;
  cand.erase(cand.begin(), cand.begin() + shift);
  if (ExtField::p_deg(cand) <= 0) {
    return SmoothResult{true, std::nullopt};
  }
  cand = k1.p_radical(cand);
  auto factors = k1.factor_squarefree(cand);
  for (const auto& h : factors) {
    unsigned e = static_cast<unsigned>(ExtField::p_deg(h));
    ExtField K = e == 1 ? ExtField(F, 1) : ExtField(F, k1.lower(h));
    ExtField::Elem t0 =
        e == 1 ? K.from_base(F.neg(k1.to_base(h[0]))) : K.t();
    std::vector<ExtField::Poly> specs;
    bool all_zero = true;
    for (int t = 0; t < 3; ++t) {
      auto s = specialize_z(dv[t], K, t0);
      if (!s.empty()) {
        all_zero = false;
        specs.push_back(std::move(s));
      }
    }
    if (all_zero) {
      return SmoothResult{false,
                          make_witness(K, {K.one(), t0, K.zero()})};
    }
    ExtField::Poly w = gcd_list(K, specs);
    if (ExtField::p_deg(w) <= 0) continue;
    w = K.p_radical(w);
    unsigned fstar = K.min_factor_degree(w);
    if (fstar == 1) {
      auto rts = K.roots(w);
      if (rts.empty()) {
        throw std::logic_error("linear factor without a root");
      }
      return SmoothResult{false, make_witness(K, {K.one(), t0, rts[0]})};
    }
    unsigned n = e * fstar;
    ExtField L(F, n);
    auto h_lift = L.lift(k1.lower(h));
    auto t_roots = L.roots(h_lift);
    if (t_roots.empty()) {
      throw std::logic_error("candidate factor lost its roots in the join");
    }
    ExtField::Elem t0l = t_roots[0];
    std::vector<ExtField::Poly> specs_l;
    for (int t = 0; t < 3; ++t) {
      auto s = specialize_z(dv[t], L, t0l);
      if (!s.empty()) specs_l.push_back(std::move(s));
    }
    ExtField::Poly wl = gcd_list(L, specs_l);
    if (ExtField::p_deg(wl) <= 0) {
      throw std::logic_error("specialization degenerated in the join");
    }
    auto z_roots = L.roots(wl);
    if (z_roots.empty()) {
      throw std::logic_error("join field is missing the promised root");
    }
    return SmoothResult{false, make_witness(L, {L.one(), t0l, z_roots[0]})};
  }
  return SmoothResult{true, std::nullopt};
}

SmoothResult smooth_rec(const HomPoly& f, const PrimeField& F,
                        SplitMix64& rng, int depth) {
  auto dv = partials(f, F);
  ExtField k1(F, 1);

  // Reference points of the coordinate triangle.
  const std::array<std::array<uint32_t, 3>, 3> refs = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (const auto& pt : refs) {
    bool sing = true;
    for (const auto& g : dv) sing = sing && eval_point(g, F, pt) == 0;
    if (sing) {
      std::array<ExtField::Elem, 3> ep = {k1.from_base(pt[0]),
                                          k1.from_base(pt[1]),
                                          k1.from_base(pt[2])};
      return SmoothResult{false, make_witness(k1, ep)};
    }
  }

  // Coordinate lines.
  for (int sel = 0; sel < 3; ++sel) {
    std::vector<ExtField::Poly> rests;
    bool all_zero = true;
    for (int t = 0; t < 3; ++t) {
      auto v = restrict_line(dv[t], sel);
      if (!v.empty()) {
        all_zero = false;
        rests.push_back(k1.lift(v));
      }
    }
    if (all_zero) {
      return SmoothResult{false,
                          make_witness(k1, line_point(k1, sel, k1.zero()))};
    }
    ExtField::Poly g = gcd_list(k1, rests);
    if (ExtField::p_deg(g) <= 0) continue;
    auto factors = k1.factor_squarefree(k1.p_radical(g));
    const auto& h = factors.front();
    unsigned e = static_cast<unsigned>(ExtField::p_deg(h));
    if (e == 1) {
      uint32_t root = F.neg(k1.to_base(h[0]));
      return SmoothResult{
          false, make_witness(k1, line_point(k1, sel, k1.from_base(root)))};
    }
    ExtField K(F, k1.lower(h));
    return SmoothResult{false, make_witness(K, line_point(K, sel, K.t()))};
  }

  // Off the coordinate triangle: try the three cyclic charts, falling back
  // to a random change of coordinates when every chart degenerates.
  const ProjMatrix id = pm_identity();
  const ProjMatrix rho = pm_from_entries({0, 1, 0, 0, 0, 1, 1, 0, 0}, F);
  const ProjMatrix rho2 = pm_mul(rho, rho, F);
  for (const ProjMatrix& R : {id, rho, rho2}) {
    HomPoly g = pm_is_identity(R) ? f : apply_proj(f, R, F);
    auto res = chart_scan(g, F);
    if (!res) continue;
    if (!res->smooth && res->witness) {
      ExtField K(F, res->witness->modulus);
      res->witness->point = pm_apply_ext(R, res->witness->point, K);
    }
    return *res;
  }
  if (depth + 1 >= 6) {
    throw FieldError("smoothness analysis degenerated");
  }
  ProjMatrix M;
  for (;;) {
    std::array<uint32_t, 9> entries;
    for (auto& x : entries) x = static_cast<uint32_t>(rng.below(F.p()));
    ProjMatrix cand{entries};
    if (pm_det(cand, F) != 0) {
      M = pm_canon(cand, F);
      break;
    }
  }
  HomPoly g = apply_proj(f, M, F);
  SmoothResult res = smooth_rec(g, F, rng, depth + 1);
  if (!res.smooth && res.witness) {
    ExtField K(F, res.witness->modulus);
    res.witness->point = pm_apply_ext(M, res.witness->point, K);
  }
  return res;
}

}  // namespace

SmoothResult is_smooth(const HomPoly& f, const PrimeField& F) {
  if (f.zero()) throw std::invalid_argument("smoothness of the zero form");
  if (f.d == 0) throw std::invalid_argument("form degree must be positive");
  if (f.d % F.p() == 0) {
    throw FieldError("characteristic divides the degree");
  }
  SplitMix64 rng(0x5A17D00DULL);
  SmoothResult res = smooth_rec(f, F, rng, 0);
  if (!res.smooth) {
    if (!res.witness) throw std::logic_error("singular result lacks witness");
    ExtField K(F, res.witness->modulus);
    auto dv = partials(f, F);
    if (!witness_checks(f, dv, K, res.witness->point)) {
      throw std::logic_error("singular witness failed verification");
    }
  }
  return res;
}

std::vector<std::array<ExtField::Elem, 3>> singular_points_scan(
    const HomPoly& f, const PrimeField& F, unsigned e) {
  ExtField K(F, e);
  uint64_t q = K.q();
  if (q > 2048) {
    throw std::invalid_argument("scan field too large for brute force");
  }
  auto dv = partials(f, F);
  std::vector<std::array<ExtField::Elem, 3>> out;
  auto consider = [&](const std::array<ExtField::Elem, 3>& pt) {
    for (const auto& g : dv) {
      if (!K.is_zero(eval_point_ext(g, K, pt))) return;
    }
    if (!K.is_zero(eval_point_ext(f, K, pt))) return;
    out.push_back(pt);
  };

  // Packed index arithmetic with a multiplication table keeps the quadratic
  // chart affordable.
  uint32_t p = F.p();
  size_t qs = static_cast<size_t>(q);
  std::vector<uint32_t> mul_tab(qs * qs);
  for (size_t a = 0; a < qs; ++a) {
    ExtField::Elem ea = K.from_index(a);
    for (size_t b = a; b < qs; ++b) {
      uint32_t v = static_cast<uint32_t>(K.to_index(K.mul(ea, K.from_index(b))));
      mul_tab[a * qs + b] = v;
      mul_tab[b * qs + a] = v;
    }
  }
  auto addp = [&](uint32_t a, uint32_t b) {
    uint32_t r = 0, mult = 1;
    for (unsigned t = 0; t < e; ++t) {
      uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      r += ((da + db) % p) * mult;
      mult *= p;
    }
    return r;
  };

  consider({K.zero(), K.zero(), K.one()});
  // Chart (0, 1, z): restrictions are univariate in z.
  {
    std::array<std::vector<uint32_t>, 3> r;
    for (int t = 0; t < 3; ++t) r[t] = restrict_line(dv[t], 0);
    for (uint64_t z = 0; z < q; ++z) {
      uint32_t zi = static_cast<uint32_t>(z);
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        uint32_t acc = 0;
        for (size_t idx = r[t].size(); idx-- > 0;) {
          acc = addp(mul_tab[acc * qs + zi], r[t][idx]);
        }
        ok = acc == 0;
      }
      if (ok) consider({K.zero(), K.one(), K.from_index(z)});
    }
  }
  // Chart (1, y, z): per y, collapse each partial to a univariate in z.
  {
    unsigned dz = 0;
    for (const auto& g : dv) {
      for (const auto& [m, c] : g.coeffs) dz = std::max(dz, m.k);
    }
    for (uint64_t y = 0; y < q; ++y) {
      uint32_t yi = static_cast<uint32_t>(y);
      std::vector<uint32_t> ypow(f.d + 1, 1);
      for (size_t t = 1; t < ypow.size(); ++t) {
        ypow[t] = mul_tab[ypow[t - 1] * qs + yi];
      }
      std::array<std::vector<uint32_t>, 3> zc;
      for (int t = 0; t < 3; ++t) {
        zc[t].assign(dz + 1, 0);
        for (const auto& [m, c] : dv[t].coeffs) {
          zc[t][m.k] = addp(zc[t][m.k], mul_tab[c * qs + ypow[m.j]]);
        }
      }
      for (uint64_t z = 0; z < q; ++z) {
        uint32_t zi = static_cast<uint32_t>(z);
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t) {
          uint32_t acc = 0;
          for (size_t idx = zc[t].size(); idx-- > 0;) {
            acc = addp(mul_tab[acc * qs + zi], zc[t][idx]);
          }
          ok = acc == 0;
        }
        if (ok) consider({K.one(), K.from_index(y), K.from_index(z)});
      }
    }
  }
  return out;
}

}  // namespace plcaut
