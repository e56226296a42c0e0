// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/types.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace plcaut {

std::string case_label(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1:
      return "1";
    case CaseTag::Case2:
      return "2";
    case CaseTag::Case3:
      return "3";
    case CaseTag::Case4a:
      return "4a";
    case CaseTag::Case4b:
      return "4b";
    case CaseTag::Case4c:
      return "4c";
    case CaseTag::Case5:
      return "5";
    case CaseTag::Case6:
      return "6";
  }
  return "?";
}

unsigned weight(const Monomial& mono, unsigned m, unsigned a, unsigned b) {
  return static_cast<unsigned>(
      (static_cast<uint64_t>(a) * mono.j + static_cast<uint64_t>(b) * mono.k) %
      m);
}

std::vector<Monomial> invariant_monomials(unsigned d, unsigned m, unsigned a,
                                          unsigned b, unsigned wclass) {
  std::vector<Monomial> out;
  for (unsigned i = 0; i <= d; ++i) {
    for (unsigned j = 0; i + j <= d; ++j) {
      Monomial mono{i, j, d - i - j};
      if (weight(mono, m, a, b) == wclass % m) out.push_back(mono);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<unsigned> divisors_from(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned m = 2; m <= n; ++m) {
    if (n % m == 0) out.push_back(m);
  }
  return out;
}

bool gamma_valid(unsigned m, unsigned a, unsigned b) {
  return a >= 1 && a < m && b >= 1 && b < m && a != b &&
         std::gcd(a, b) == 1;
}

struct Emitter {
  unsigned d;
  std::vector<TypeFamily>* out;

  void operator()(unsigned m, unsigned a, unsigned b, unsigned wclass,
                  CaseTag tag) const {
    TypeFamily fam;
    fam.type = {d, m, a, b};
    fam.tag = tag;
    fam.wclass = wclass % m;
    fam.support = invariant_monomials(d, m, a, b, fam.wclass);
    if (fam.support.empty()) {
      throw std::logic_error("case solution produced an empty family");
    }
    unsigned maxe[3] = {0, 0, 0};
    bool div[3] = {true, true, true};
    for (const auto& mono : fam.support) {
      unsigned e[3] = {mono.i, mono.j, mono.k};
      for (int t = 0; t < 3; ++t) {
        maxe[t] = std::max(maxe[t], e[t]);
        div[t] = div[t] && e[t] >= 1;
      }
    }
    fam.forced_reducible = div[0] || div[1] || div[2];
    fam.fails_nonsingularity_necessary_condition =
        maxe[0] < d - 1 || maxe[1] < d - 1 || maxe[2] < d - 1;
    out->push_back(std::move(fam));
  }
};

}  // namespace

std::vector<unsigned> divisor_bound(unsigned d, unsigned m) {
  if (m == 0) throw std::invalid_argument("order must be positive");
  std::vector<unsigned> bounds = {d - 1,         d,           d * d - 3 * d + 3,
                                  d * (d - 2),   (d - 1) * (d - 1),
                                  d * (d - 1)};
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  std::vector<unsigned> out;
  for (unsigned b : bounds) {
    if (b % m == 0) out.push_back(b);
  }
  return out;
}

std::vector<TypeFamily> enumerate_types(unsigned d) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  std::vector<TypeFamily> out;
  Emitter emit{d, &out};

  for (unsigned m : divisors_from(d - 1)) {
    emit(m, 0, 1, 0, CaseTag::Case1);
  }
  for (unsigned m : divisors_from(d)) {
    emit(m, 0, 1, 0, CaseTag::Case2);
  }
  for (unsigned m : divisors_from(d * d - 3 * d + 3)) {
    for (unsigned a = 1; a < m; ++a) {
      unsigned b = static_cast<unsigned>(
          (static_cast<uint64_t>(m) - (d - 2) % m) * a % m);
      if (gamma_valid(m, a, b)) emit(m, a, b, a, CaseTag::Case3);
    }
  }
  for (unsigned m : divisors_from(d * (d - 2))) {
    for (unsigned a = 1; a < m; ++a) {
      unsigned b = static_cast<unsigned>(
          (static_cast<uint64_t>(m) - (d - 1) % m) * a % m);
      if (!gamma_valid(m, a, b)) continue;
      if ((a + static_cast<uint64_t>(d - 1) * b) % m != 0) continue;
      emit(m, a, b, 0, CaseTag::Case4a);
    }
  }
  for (unsigned m : divisors_from((d - 1) * (d - 1))) {
    for (unsigned a = 1; a < m; ++a) {
      unsigned b = static_cast<unsigned>(
          (static_cast<uint64_t>(m) - (d - 1) % m) * a % m);
      if (!gamma_valid(m, a, b)) continue;
      if (static_cast<uint64_t>(d - 1) * b % m != 0) continue;
      emit(m, a, b, 0, CaseTag::Case4b);
    }
  }
  for (unsigned m : divisors_from(d - 1)) {
    for (unsigned a = 1; a < m; ++a) {
      for (unsigned b = 1; b < m; ++b) {
        if (gamma_valid(m, a, b)) emit(m, a, b, 0, CaseTag::Case4c);
      }
    }
  }
  for (unsigned m : divisors_from(d * (d - 1))) {
    for (unsigned a = 1; a < m; ++a) {
      if (static_cast<uint64_t>(d) * a % m != 0) continue;
      for (unsigned b = 1; b < m; ++b) {
        if (static_cast<uint64_t>(d - 1) * b % m != 0) continue;
        if (gamma_valid(m, a, b)) emit(m, a, b, 0, CaseTag::Case5);
      }
    }
  }
  for (unsigned m : divisors_from(d)) {
    for (unsigned a = 1; a < m; ++a) {
      for (unsigned b = 1; b < m; ++b) {
        if (gamma_valid(m, a, b)) emit(m, a, b, 0, CaseTag::Case6);
      }
    }
  }
  return out;
}

namespace {

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct OrbitPoint {
  unsigned a, b, wclass;
  std::vector<Monomial> support;
};

// Applies one coordinate permutation to the weight triple (0, a, b), then
// rescales so the first weight is zero again.  The weight class shifts by
// s d because every monomial has total degree d.
OrbitPoint permuted_point(unsigned d, unsigned m, const OrbitPoint& pt,
                          const int (&perm)[3]) {
  unsigned w[3] = {0, pt.a, pt.b};
  unsigned wp[3] = {w[perm[0]], w[perm[1]], w[perm[2]]};
  unsigned s = wp[0];
  OrbitPoint q;
  q.a = (wp[1] + m - s) % m;
  q.b = (wp[2] + m - s) % m;
  uint64_t shift = static_cast<uint64_t>(s) * d % m;
  q.wclass = static_cast<unsigned>((pt.wclass + m - shift) % m);
  q.support.reserve(pt.support.size());
  for (const auto& mono : pt.support) {
    unsigned e[3] = {mono.i, mono.j, mono.k};
    q.support.push_back({e[perm[0]], e[perm[1]], e[perm[2]]});
  }
  std::sort(q.support.begin(), q.support.end());
  return q;
}

}  // namespace

FamilyKey canonical_family_key(const TypeFamily& fam) {
  unsigned m = fam.type.m;
  OrbitPoint base{fam.type.a, fam.type.b, fam.wclass, fam.support};
  FamilyKey best;
  bool first = true;
  for (const auto& perm : kPerms) {
    OrbitPoint pt = permuted_point(fam.type.d, m, base, perm);
    for (unsigned u = 1; u < std::max(m, 2u); ++u) {
      if (std::gcd(u, m) != 1) continue;
      FamilyKey key;
      key.m = m;
      key.a = static_cast<unsigned>(static_cast<uint64_t>(u) * pt.a % m);
      key.b = static_cast<unsigned>(static_cast<uint64_t>(u) * pt.b % m);
      key.wclass =
          static_cast<unsigned>(static_cast<uint64_t>(u) * pt.wclass % m);
      key.support = pt.support;
      if (first || key < best) {
        best = std::move(key);
        first = false;
      }
    }
  }
  return best;
}

std::pair<unsigned, unsigned> subgroup_class_key(unsigned m, unsigned a,
                                                 unsigned b) {
  std::pair<unsigned, unsigned> best{m, m};
  for (const auto& perm : kPerms) {
    unsigned w[3] = {0, a % m, b % m};
    unsigned wp[3] = {w[perm[0]], w[perm[1]], w[perm[2]]};
    unsigned s = wp[0];
    unsigned a2 = (wp[1] + m - s) % m;
    unsigned b2 = (wp[2] + m - s) % m;
    for (unsigned u = 1; u < std::max(m, 2u); ++u) {
      if (std::gcd(u, m) != 1) continue;
      std::pair<unsigned, unsigned> cand{
          static_cast<unsigned>(static_cast<uint64_t>(u) * a2 % m),
          static_cast<unsigned>(static_cast<uint64_t>(u) * b2 % m)};
      best = std::min(best, cand);
    }
  }
  return best;
}

std::vector<TypeFamily> dedup_families(const std::vector<TypeFamily>& raw) {
  std::map<FamilyKey, std::vector<const TypeFamily*>> groups;
  for (const auto& fam : raw) {
    groups[canonical_family_key(fam)].push_back(&fam);
  }
  std::vector<TypeFamily> out;
  out.reserve(groups.size());
  for (const auto& [key, members] : groups) {
    const TypeFamily* rep = members.front();
    for (const TypeFamily* fam : members) {
      auto lhs = std::make_pair(fam->type.a, fam->type.b);
      auto rhs = std::make_pair(rep->type.a, rep->type.b);
      if (lhs < rhs) rep = fam;
    }
    out.push_back(*rep);
  }
  std::sort(out.begin(), out.end(), [](const TypeFamily& x, const TypeFamily& y) {
    if (x.type.m != y.type.m) return x.type.m > y.type.m;
    if (x.type.a != y.type.a) return x.type.a < y.type.a;
    if (x.type.b != y.type.b) return x.type.b < y.type.b;
    return x.wclass < y.wclass;
  });
  return out;
}

std::vector<TypeFamily> table_families(unsigned d) {
  auto rows = dedup_families(enumerate_types(d));
  std::vector<TypeFamily> out;
  for (auto& fam : rows) {
    if (fam.forced_reducible) continue;
    if (fam.fails_nonsingularity_necessary_condition) continue;
    if (fam.tag == CaseTag::Case3 && fam.type.m != d * d - 3 * d + 3) continue;
    if (fam.tag == CaseTag::Case6 && fam.type.m != d) continue;
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace plcaut
