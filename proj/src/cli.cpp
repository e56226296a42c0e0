// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include "plcaut/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcaut/autgrp.hpp"
#include "plcaut/family.hpp"
#include "plcaut/ff.hpp"
#include "plcaut/poly.hpp"
#include "plcaut/projmatrix.hpp"
#include "plcaut/quotient.hpp"
#include "plcaut/strata.hpp"
#include "plcaut/types.hpp"

namespace plcaut {
namespace {

using ojson = nlohmann::ordered_json;

constexpr uint64_t kDefaultSeed = 1789;
constexpr unsigned kDefaultTrials = 64;
constexpr uint64_t kDefaultBudget = 50000000;

// ---------------------------------------------------------------------------
// Pretty printers.

std::string monomial_pretty(const Monomial& mo) {
  std::string s;
  auto piece = [&s](char v, unsigned e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += std::to_string(e);
  };
  piece('X', mo.i);
  piece('Y', mo.j);
  piece('Z', mo.k);
  return s;
}

std::string form_pretty(const HomPoly& f) {
  if (f.coeffs.empty()) return "0";
  std::string s;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    if (!s.empty()) s += "+";
    if (it->second != 1) s += std::to_string(it->second) + "*";
    s += monomial_pretty(it->first);
  }
  return s;
}

// Coefficient vector (low degree first) rendered as a polynomial in t.
std::string poly_in_t(const std::vector<uint32_t>& cs) {
  std::string s;
  for (std::size_t idx = cs.size(); idx-- > 0;) {
    if (cs[idx] == 0) continue;
    if (!s.empty()) s += "+";
    if (idx == 0) {
      s += std::to_string(cs[idx]);
      continue;
    }
    if (cs[idx] != 1) s += std::to_string(cs[idx]);
    s += "t";
    if (idx > 1) s += "^" + std::to_string(idx);
  }
  return s.empty() ? "0" : s;
}

std::string point_pretty(const std::array<ExtField::Elem, 3>& pt) {
  return "(" + poly_in_t(pt[0]) + " : " + poly_in_t(pt[1]) + " : " +
         poly_in_t(pt[2]) + ")";
}

ojson support_json(const std::vector<Monomial>& support) {
  ojson arr = ojson::array();
  for (const Monomial& mo : support) arr.push_back({mo.i, mo.j, mo.k});
  return arr;
}

ojson histogram_json(const std::map<unsigned, std::size_t>& hist) {
  ojson obj = ojson::object();
  for (const auto& [ord, count] : hist) obj[std::to_string(ord)] = count;
  return obj;
}

// ---------------------------------------------------------------------------
// Output documents.  Every subcommand fills one Doc; the renderer turns it
// into Markdown (headline, notes, table and a JSON companion block), bare
// CSV, or the JSON payload alone.

enum class Fmt { Md, Csv, Json };

Fmt parse_fmt(const std::string& s) {
  if (s == "md") return Fmt::Md;
  if (s == "csv") return Fmt::Csv;
  if (s == "json") return Fmt::Json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

struct Doc {
  std::string title;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  ojson payload;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

void render_doc(const Doc& doc, Fmt fmt, std::ostream& os) {
  switch (fmt) {
    case Fmt::Json:
      os << doc.payload.dump(2) << "\n";
      return;
    case Fmt::Csv: {
      for (std::size_t i = 0; i < doc.columns.size(); ++i)
        os << (i ? "," : "") << csv_quote(doc.columns[i]);
      os << "\n";
      for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          os << (i ? "," : "") << csv_quote(row[i]);
        os << "\n";
      }
      return;
    }
    case Fmt::Md: {
      os << "# " << doc.title << "\n";
      if (!doc.notes.empty()) {
        os << "\n";
        for (const std::string& n : doc.notes) os << "- " << n << "\n";
      }
      if (!doc.columns.empty()) {
        os << "\n|";
        for (const std::string& c : doc.columns) os << " " << c << " |";
        os << "\n|";
        for (std::size_t i = 0; i < doc.columns.size(); ++i) os << "---|";
        os << "\n";
        for (const auto& row : doc.rows) {
          os << "|";
          for (const std::string& cell : row) os << " " << cell << " |";
          os << "\n";
        }
      }
      os << "\n```json\n" << doc.payload.dump(2) << "\n```\n";
      return;
    }
  }
}

int emit_doc(const Doc& doc, Fmt fmt, const std::string& outfile,
             std::ostream& out, std::ostream& err) {
  if (outfile.empty()) {
    render_doc(doc, fmt, out);
    return 0;
  }
  std::ofstream f(outfile, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << outfile << "'\n";
    return 2;
  }
  render_doc(doc, fmt, f);
  return 0;
}

// ---------------------------------------------------------------------------
// Curve specification parsing.  Grammar (per --help):
//   d=<degree> type=<m>,<a>,<b>[,<w>] [alpha=<int>] [beta=<int>]
//   d=<degree> coeffs=[(i,j,k,c),...]

constexpr unsigned kNoWeightClass = 0xffffffffu;

struct CurveInput {
  unsigned d = 0;
  std::optional<std::array<unsigned, 4>> type;  // m, a, b, wclass or sentinel
  std::optional<int64_t> alpha;
  std::optional<int64_t> beta;
  std::vector<std::array<int64_t, 4>> raw;
};

int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (...) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  if (used != s.size())
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

std::vector<int64_t> parse_int_list(const std::string& s) {
  std::vector<int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::array<int64_t, 4>> parse_coeff_list(const std::string& s) {
  std::vector<std::array<int64_t, 4>> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("coeffs: expected '") + c +
                                  "' in '" + s + "'");
    ++pos;
  };
  auto number = [&]() -> int64_t {
    skip();
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s.substr(pos), &used);
    } catch (...) {
      throw std::invalid_argument("coeffs: expected an integer in '" + s +
                                  "'");
    }
    pos += used;
    return v;
  };
  expect('[');
  skip();
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      std::array<int64_t, 4> term{};
      expect('(');
      term[0] = number();
      expect(',');
      term[1] = number();
      expect(',');
      term[2] = number();
      expect(',');
      term[3] = number();
      expect(')');
      out.push_back(term);
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
  }
  skip();
  if (pos != s.size())
    throw std::invalid_argument("coeffs: trailing characters in '" + s + "'");
  if (out.empty()) throw std::invalid_argument("coeffs: empty term list");
  return out;
}

CurveInput parse_curve_tokens(const std::vector<std::string>& tokens) {
  CurveInput in;
  bool saw_d = false;
  for (const std::string& tok : tokens) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "d") {
      int64_t v = parse_int(val);
      if (v < 4 || v > 64)
        throw std::invalid_argument("degree must lie in 4..64");
      in.d = static_cast<unsigned>(v);
      saw_d = true;
    } else if (key == "type") {
      auto xs = parse_int_list(val);
      if (xs.size() != 3 && xs.size() != 4)
        throw std::invalid_argument("type takes m,a,b or m,a,b,w");
      for (int64_t x : xs)
        if (x < 0) throw std::invalid_argument("type components must be >= 0");
      in.type = {static_cast<unsigned>(xs[0]), static_cast<unsigned>(xs[1]),
                 static_cast<unsigned>(xs[2]),
                 xs.size() == 4 ? static_cast<unsigned>(xs[3])
                                : kNoWeightClass};
    } else if (key == "alpha") {
      in.alpha = parse_int(val);
    } else if (key == "beta") {
      in.beta = parse_int(val);
    } else if (key == "coeffs") {
      in.raw = parse_coeff_list(val);
    } else {
      throw std::invalid_argument("unknown curve key '" + key +
                                  "' (use d, type, alpha, beta, coeffs)");
    }
  }
  if (!saw_d) throw std::invalid_argument("curve spec needs d=<degree>");
  if (in.type && !in.raw.empty())
    throw std::invalid_argument("give either type=... or coeffs=..., not both");
  if (!in.type && in.raw.empty())
    throw std::invalid_argument("curve spec needs type=m,a,b or coeffs=[...]");
  if (!in.raw.empty() && (in.alpha || in.beta))
    throw std::invalid_argument("alpha/beta apply only to type= specs");
  return in;
}

struct BuiltCurve {
  PrimeField F;
  HomPoly form;
  std::optional<CyclicType> ctype;
};

uint32_t checked_field(int64_t field, unsigned fallback_d,
                       const std::vector<uint32_t>& orders) {
  if (field == 0) return select_prime(fallback_d, orders);
  if (field < 2 || field > 0x7fffffff || !is_prime(static_cast<uint64_t>(field)))
    throw std::invalid_argument("--field must be a prime");
  return static_cast<uint32_t>(field);
}

BuiltCurve build_curve(const CurveInput& in, int64_t field) {
  if (!in.raw.empty()) {
    PrimeField F(checked_field(field, in.d, {}));
    std::vector<std::pair<Monomial, int64_t>> terms;
    for (const auto& t : in.raw) {
      if (t[0] < 0 || t[1] < 0 || t[2] < 0)
        throw std::invalid_argument("coeffs: exponents must be >= 0");
      terms.push_back({Monomial{static_cast<unsigned>(t[0]),
                                static_cast<unsigned>(t[1]),
                                static_cast<unsigned>(t[2])},
                       t[3]});
    }
    HomPoly f = make_hompoly(in.d, terms, F);
    if (f.zero()) throw std::invalid_argument("curve has no nonzero terms");
    return {F, f, std::nullopt};
  }
  auto [m, a, b, w] = *in.type;
  const TypeFamily* pick = nullptr;
  auto classes = dedup_families(enumerate_types(in.d));
  for (const TypeFamily& fam : classes) {
    if (fam.type.m != m || fam.type.a != a || fam.type.b != b) continue;
    if (w != kNoWeightClass && fam.wclass != w) continue;
    if (!pick || fam.wclass < pick->wclass) pick = &fam;
  }
  if (!pick)
    throw std::invalid_argument(
        "no family of this type in degree " + std::to_string(in.d) +
        "; run `plcaut types " + std::to_string(in.d) +
        " --unfiltered` to list the available types");
  EquationFamily ef = make_family(*pick);
  PrimeField F(checked_field(field, in.d, {m}));
  std::map<Monomial, int64_t> values;
  for (const auto& [mono, kind] : ef.entries) {
    if (kind == CoefficientKind::NonzeroParam && in.alpha)
      values[mono] = *in.alpha;
    if (kind == CoefficientKind::FreeParam && in.beta) values[mono] = *in.beta;
  }
  PlaneCurve c = specialize(ef, values, F);
  return {F, c.form, pick->type};
}

// ---------------------------------------------------------------------------
// Matrix helpers shared by the closure and verify commands.

ProjMatrix diag3(uint32_t a, uint32_t b, uint32_t c, const PrimeField& F) {
  return pm_from_entries({a, 0, 0, 0, b, 0, 0, 0, c}, F);
}

ProjMatrix perm3(int p0, int p1, int p2, const PrimeField& F) {
  std::array<uint32_t, 9> e{};
  e[0 * 3 + p0] = 1;
  e[1 * 3 + p1] = 1;
  e[2 * 3 + p2] = 1;
  return pm_from_entries(e, F);
}

ProjMatrix diagonal_map(unsigned m, unsigned a, unsigned b,
                        const PrimeField& F) {
  uint32_t xi = F.root_of_unity(m);
  return diag3(1, F.pow(xi, a % m), F.pow(xi, b % m), F);
}

// The four Hessian-group generators over a field with cube roots of unity.
struct HessianGens {
  ProjMatrix S, T, U, V;
};

HessianGens hessian_gens(const PrimeField& F) {
  uint32_t w = F.root_of_unity(3);
  uint32_t w2 = F.mul(w, w);
  return {diag3(1, w, w2, F), perm3(1, 2, 0, F), diag3(1, 1, w, F),
          pm_from_entries({1, 1, 1, 1, w, w2, 1, w2, w}, F)};
}

GroupClosure named_closure(const std::string& name, unsigned d,
                           const PrimeField& F) {
  if (name == "hess36" || name == "hess72" || name == "hess216") {
    HessianGens h = hessian_gens(F);
    if (name == "hess36") return closure({h.S, h.T, h.V}, F);
    if (name == "hess72")
      return closure(
          {h.S, h.T, h.V, pm_mul(h.U, pm_mul(h.V, pm_inv(h.U, F), F), F)}, F);
    return closure({h.S, h.T, h.U, h.V}, F);
  }
  if (name == "fermat") {
    uint32_t xd = F.root_of_unity(d);
    return closure({diag3(xd, 1, 1, F), diag3(1, xd, 1, F), perm3(0, 2, 1, F),
                    perm3(1, 2, 0, F)},
                   F);
  }
  if (name == "klein") {
    unsigned k = d * d - 3 * d + 3;
    uint32_t z = F.root_of_unity(k);
    return closure({diag3(1, z, F.pow(z, (2 * k + 2 - d) % k), F),
                    perm3(1, 2, 0, F)},
                   F);
  }
  throw std::invalid_argument(
      "unknown group '" + name +
      "' (use hess36, hess72, hess216, fermat, klein)");
}

std::vector<uint32_t> closure_default_orders(const std::string& name,
                                             unsigned d) {
  if (name.rfind("hess", 0) == 0) return {3};
  if (name == "fermat") return {d};
  if (name == "klein") return {d * d - 3 * d + 3};
  return {};
}

// ---------------------------------------------------------------------------
// Verification checks.  Each check is independent and reports a one-line
// detail; the runner executes them on up to `jobs` threads.

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckBody = std::function<std::pair<bool, std::string>()>;

std::vector<CheckResult> run_checks(
    const std::vector<std::pair<std::string, CheckBody>>& checks,
    unsigned jobs) {
  std::vector<CheckResult> out(checks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < checks.size();) {
      out[i].name = checks[i].first;
      try {
        auto [ok, detail] = checks[i].second();
        out[i].pass = ok;
        out[i].detail = detail;
      } catch (const std::exception& ex) {
        out[i].pass = false;
        out[i].detail = std::string("exception: ") + ex.what();
      }
    }
  };
  std::size_t n = std::max<std::size_t>(1, jobs);
  n = std::min(n, checks.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

std::pair<bool, std::string> check_census_sizes(unsigned d) {
  static const std::map<unsigned, std::array<std::size_t, 3>> known = {
      {4, {30, 10, 10}},  {5, {57, 13, 12}},  {6, {99, 20, 17}},
      {7, {139, 23, 20}}, {8, {196, 22, 21}}, {9, {273, 31, 24}}};
  auto raw = enumerate_types(d);
  auto classes = dedup_families(raw);
  auto table = table_families(d);
  std::ostringstream os;
  os << raw.size() << " raw census entries, " << classes.size()
     << " classes, " << table.size() << " table rows";
  auto it = known.find(d);
  bool ok;
  if (it != known.end()) {
    ok = raw.size() == it->second[0] && classes.size() == it->second[1] &&
         table.size() == it->second[2];
    if (!ok)
      os << " (expected " << it->second[0] << "/" << it->second[1] << "/"
         << it->second[2] << ")";
  } else {
    ok = !table.empty() && table.size() <= classes.size() &&
         classes.size() <= raw.size();
  }
  return {ok, os.str()};
}

std::pair<bool, std::string> check_divisor_bounds(unsigned d) {
  unsigned max_m = 0;
  std::size_t n = 0;
  for (const TypeFamily& fam : enumerate_types(d)) {
    ++n;
    max_m = std::max(max_m, fam.type.m);
    if (fam.type.m > d * (d - 1) || divisor_bound(d, fam.type.m).empty()) {
      return {false, "order " + std::to_string(fam.type.m) +
                         " escapes every divisor bound"};
    }
  }
  std::ostringstream os;
  os << n << " census orders divide one of {d-1, d, d^2-3d+3, (d-1)^2, "
     << "d(d-2), d(d-1)}; largest is " << max_m << " <= " << d * (d - 1);
  return {true, os.str()};
}

std::pair<bool, std::string> check_collapses(unsigned d) {
  struct Target {
    unsigned m;
    std::vector<Monomial> support;
  };
  const std::vector<Target> targets = {
      {d * (d - 1), {{d, 0, 0}, {0, d, 0}, {1, 0, d - 1}}},
      {(d - 1) * (d - 1), {{d, 0, 0}, {0, d - 1, 1}, {1, 0, d - 1}}},
      {d * (d - 2), {{d, 0, 0}, {0, d - 1, 1}, {0, 1, d - 1}}},
      {d * d - 3 * d + 3, {{d - 1, 1, 0}, {0, d - 1, 1}, {1, 0, d - 1}}}};
  auto classes = dedup_families(enumerate_types(d));
  std::ostringstream os;
  for (const Target& t : targets) {
    std::vector<const TypeFamily*> hits;
    for (const TypeFamily& fam : classes)
      if (fam.type.m == t.m) hits.push_back(&fam);
    if (hits.size() != 1)
      return {false, "order " + std::to_string(t.m) + " has " +
                         std::to_string(hits.size()) + " classes, wanted 1"};
    std::vector<Monomial> got = hits[0]->support;
    std::vector<Monomial> want = t.support;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
      return {false,
              "order " + std::to_string(t.m) + " support is not the rigid "
              "three-term form"};
    if (os.tellp() > 0) os << ", ";
    os << "m=" << t.m;
  }
  return {true, "rigid three-term supports confirmed for " + os.str()};
}

std::pair<bool, std::string> check_smooth_members(unsigned d, unsigned trials,
                                                  uint64_t seed) {
  auto table = table_families(d);
  std::set<uint32_t> primes;
  uint64_t salt = 0;
  for (const TypeFamily& fam : table) {
    EquationFamily ef = make_family(fam);
    PrimeField F(select_prime(d, {fam.type.m}));
    primes.insert(F.p());
    PlaneCurve c = sample_smooth(ef, F, trials, seed + salt++);
    if (!is_smooth(c.form, F).smooth)
      return {false, "sampled member of type " + std::to_string(fam.type.m) +
                         ",(" + std::to_string(fam.type.a) + "," +
                         std::to_string(fam.type.b) + ") is singular"};
  }
  std::ostringstream os;
  os << "all " << table.size()
     << " table families admit smooth members; fields tried:";
  for (uint32_t p : primes) os << " " << p;
  return {true, os.str()};
}

std::pair<bool, std::string> check_quintic_census() {
  struct Row {
    unsigned m, a, b;
    std::map<Monomial, int64_t> values;
    std::size_t expect;
  };
  const std::vector<Row> rows = {
      {5, 1, 2, {}, 150},
      {13, 1, 10, {}, 39},
      {15, 1, 11, {}, 30},
      {20, 4, 5, {}, 20},
      {16, 1, 12, {}, 16},
      {10, 2, 5, {{Monomial{3, 0, 2}, 1}}, 10},
      {5, 1, 2, {{Monomial{2, 1, 2}, 1}}, 10},
      {8, 1, 4, {{Monomial{3, 0, 2}, 3}}, 8},
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
  PrimeField F(3121);
  auto classes = dedup_families(enumerate_types(5));
  std::vector<std::size_t> seen;
  for (const Row& r : rows) {
    const TypeFamily* pick = nullptr;
    for (const TypeFamily& fam : classes)
      if (fam.type.m == r.m && fam.type.a == r.a && fam.type.b == r.b)
        pick = &fam;
    if (!pick) return {false, "missing quintic type " + std::to_string(r.m)};
    PlaneCurve c = specialize(make_family(*pick), r.values, F);
    if (!is_smooth(c.form, F).smooth)
      return {false, "census member of order " + std::to_string(r.m) +
                         " came out singular"};
    std::size_t got = monomial_stabilizer(c, F).order;
    if (got != r.expect)
      return {false, "stabilizer of the order-" + std::to_string(r.m) +
                         " member is " + std::to_string(got) + ", wanted " +
                         std::to_string(r.expect)};
    seen.push_back(got);
  }
  std::ostringstream os;
  os << "stabilizer orders";
  for (std::size_t v : seen) os << " " << v;
  return {true, os.str()};
}

std::pair<bool, std::string> check_twist_presentation(unsigned d) {
  const unsigned m = d * (d - 2);
  PrimeField F(select_prime(d, {m}));
  uint32_t z = F.root_of_unity(m);
  ProjMatrix tau = diag3(1, z, F.pow(z, m - (d - 1)), F);
  ProjMatrix sigma = perm3(0, 2, 1, F);
  RelatorWord square = {2, 2};
  RelatorWord power(m, 1);
  RelatorWord twist = {2, 1, 2};
  for (unsigned t = 0; t < d - 1; ++t) twist.push_back(1);
  bool ok = verify_presentation({tau, sigma}, {square, power, twist}, 2 * m, F);
  // The relators must pin the order exactly, not merely divide it.
  ok = ok && !verify_presentation({tau, sigma}, {square, power, twist},
                                  2 * m + 1, F);
  std::ostringstream os;
  os << "group of order " << 2 * m
     << " with sigma^2 = tau^" << m << " = 1 and sigma tau sigma = tau^-"
     << (d - 1) << " over F_" << F.p();
  return {ok, os.str()};
}

std::pair<bool, std::string> check_fermat_quintic_closure() {
  PrimeField F(select_prime(5, {5}));
  GroupClosure g = named_closure("fermat", 5, F);
  return {g.order == 150, "closure of the diagonal maps and coordinate "
                          "permutations has order " +
                              std::to_string(g.order) + " over F_" +
                              std::to_string(F.p())};
}

std::pair<bool, std::string> check_klein_quintic() {
  PrimeField F(select_prime(5, {13}));
  GroupClosure g = named_closure("klein", 5, F);
  uint32_t z = F.root_of_unity(13);
  ProjMatrix tau = diag3(1, z, F.pow(z, 10), F);
  ProjMatrix sigma = perm3(1, 2, 0, F);
  RelatorWord r1(13, 1);
  RelatorWord r2 = {2, 2, 2};
  RelatorWord r3 = {2, 1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1};
  bool pres = verify_presentation({tau, sigma}, {r1, r2, r3}, 39, F);
  return {g.order == 39 && pres,
          "closure order " + std::to_string(g.order) +
              ", presentation tau^13 = sigma^3 = 1, sigma tau sigma^-1 = "
              "tau^9 verified over F_" + std::to_string(F.p())};
}

std::pair<bool, std::string> check_order30_presentation() {
  PrimeField F(select_prime(5, {15}));
  uint32_t z = F.root_of_unity(15);
  ProjMatrix tau = perm3(0, 2, 1, F);
  ProjMatrix sigma = diag3(1, z, F.pow(z, 11), F);
  RelatorWord r1 = {1, 1};
  RelatorWord r2(15, 2);
  RelatorWord r3 = {1, 2, 1, 2, 2, 2, 2};
  bool ok = verify_presentation({tau, sigma}, {r1, r2, r3}, 30, F);
  return {ok, "order-30 group with tau^2 = sigma^15 = (tau sigma)^2 sigma^3 "
              "= 1 over F_" + std::to_string(F.p())};
}

std::pair<bool, std::string> check_hessian_closures() {
  PrimeField F(select_prime(6, {3}));
  GroupClosure g36 = named_closure("hess36", 6, F);
  GroupClosure g72 = named_closure("hess72", 6, F);
  GroupClosure g216 = named_closure("hess216", 6, F);
  const std::map<unsigned, std::size_t> want216 = {
      {1, 1}, {2, 9}, {3, 80}, {4, 54}, {6, 72}};
  bool ok = g36.order == 36 && g72.order == 72 && g216.order == 216 &&
            g216.order_histogram == want216;
  std::ostringstream os;
  os << "orders " << g36.order << " / " << g72.order << " / " << g216.order
     << " over F_" << F.p() << "; element orders of the largest lie in "
     << "{1, 2, 3, 4, 6}";
  return {ok, os.str()};
}

std::pair<bool, std::string> check_fermat_quartic_exhaustive(uint64_t budget) {
  PrimeField F(13);
  HomPoly fermat = make_hompoly(
      4, {{Monomial{4, 0, 0}, 1}, {Monomial{0, 4, 0}, 1}, {Monomial{0, 0, 4}, 1}},
      F);
  GroupClosure g = exhaustive_aut(fermat, F, budget);
  return {g.order == 96, "every rational automorphism found by frame search: "
                         "order " + std::to_string(g.order) + " over F_13"};
}

std::pair<bool, std::string> check_klein_quartic_exhaustive(uint64_t budget) {
  auto klein = [](const PrimeField& F) {
    return make_hompoly(4,
                        {{Monomial{3, 1, 0}, 1},
                         {Monomial{0, 3, 1}, 1},
                         {Monomial{1, 0, 3}, 1}},
                        F);
  };
  PrimeField F29(29);
  GroupClosure big = exhaustive_aut(klein(F29), F29, budget);
  PrimeField F11(11);
  GroupClosure small = exhaustive_aut(klein(F11), F11, budget);
  bool ok = big.order == 168 && big.order_histogram.count(7) &&
            big.order_histogram.at(7) == 48 && small.order == 3;
  std::ostringstream os;
  os << "order " << big.order << " over F_29, whose multiplicative group "
     << "contains seventh roots of unity; over F_11 they are missing and "
     << "only the rational subgroup of order " << small.order << " remains";
  return {ok, os.str()};
}

// ---------------------------------------------------------------------------
// Subcommand drivers.

int cmd_types(unsigned d, bool unfiltered, Fmt fmt, const std::string& outfile,
              std::ostream& out, std::ostream& err) {
  if (d < 4) {
    err << "error: degree must be at least 4\n";
    return 2;
  }
  auto fams = unfiltered ? dedup_families(enumerate_types(d))
                         : table_families(d);
  Doc doc;
  doc.title = "cyclic types in degree " + std::to_string(d) +
              (unfiltered ? " (all classes)" : "");
  doc.notes.push_back(std::to_string(fams.size()) + " families");
  doc.columns = {"m", "(a,b)", "case", "invariant family"};
  if (unfiltered) doc.columns.push_back("flags");
  ojson rows = ojson::array();
  for (const TypeFamily& fam : fams) {
    std::vector<std::string> row = {
        std::to_string(fam.type.m),
        "(" + std::to_string(fam.type.a) + "," + std::to_string(fam.type.b) +
            ")",
        case_label(fam.tag), support_shorthand(d, fam.support)};
    if (unfiltered) {
      std::string flags;
      if (fam.forced_reducible) flags = "reducible";
      if (fam.fails_nonsingularity_necessary_condition)
        flags += flags.empty() ? "singular" : ", singular";
      row.push_back(flags.empty() ? "-" : flags);
    }
    doc.rows.push_back(row);
    ojson jr;
    jr["m"] = fam.type.m;
    jr["a"] = fam.type.a;
    jr["b"] = fam.type.b;
    jr["weight_class"] = fam.wclass;
    jr["case"] = case_label(fam.tag);
    jr["shorthand"] = support_shorthand(d, fam.support);
    jr["support"] = support_json(fam.support);
    jr["forced_reducible"] = fam.forced_reducible;
    jr["fails_smooth_condition"] = fam.fails_nonsingularity_necessary_condition;
    rows.push_back(jr);
  }
  doc.payload = {{"command", "types"},
                 {"degree", d},
                 {"filtered", !unfiltered},
                 {"count", fams.size()},
                 {"rows", rows}};
  return emit_doc(doc, fmt, outfile, out, err);
}

int cmd_verify(unsigned d, unsigned trials, uint64_t seed, uint64_t budget,
               bool exhaustive, unsigned jobs, Fmt fmt,
               const std::string& outfile, std::ostream& out,
               std::ostream& err) {
  if (d < 4) {
    err << "error: degree must be at least 4\n";
    return 2;
  }
  std::vector<std::pair<std::string, CheckBody>> checks;
  checks.push_back({"census sizes", [d] { return check_census_sizes(d); }});
  checks.push_back(
      {"order divisor bounds", [d] { return check_divisor_bounds(d); }});
  if (d >= 5)
    checks.push_back(
        {"large-order collapses", [d] { return check_collapses(d); }});
  checks.push_back({"smooth members by sampling", [d, trials, seed] {
                      return check_smooth_members(d, trials, seed);
                    }});
  if (d == 5) {
    checks.push_back(
        {"quintic stabilizer census", [] { return check_quintic_census(); }});
    checks.push_back({"Fermat quintic closure",
                      [] { return check_fermat_quintic_closure(); }});
    checks.push_back(
        {"Klein quintic group", [] { return check_klein_quintic(); }});
    checks.push_back({"order-30 presentation",
                      [] { return check_order30_presentation(); }});
  }
  if (d == 5 || d == 7 || d == 8 || d == 9)
    checks.push_back({"order-2d(d-2) presentation",
                      [d] { return check_twist_presentation(d); }});
  if (d == 6)
    checks.push_back(
        {"Hessian closures", [] { return check_hessian_closures(); }});
  if (exhaustive && d == 4) {
    checks.push_back({"Fermat quartic exhaustive search", [budget] {
                        return check_fermat_quartic_exhaustive(budget);
                      }});
    checks.push_back({"Klein quartic exhaustive search", [budget] {
                        return check_klein_quartic_exhaustive(budget);
                      }});
  }
  auto results = run_checks(checks, jobs);
  std::size_t failed = 0;
  for (const CheckResult& r : results)
    if (!r.pass) ++failed;

  Doc doc;
  doc.title = "verification report for degree " + std::to_string(d);
  doc.notes.push_back("seed " + std::to_string(seed) + ", trials " +
                      std::to_string(trials));
  doc.notes.push_back(failed == 0 ? "all checks passed"
                                  : std::to_string(failed) + " check(s) FAILED");
  doc.columns = {"check", "status", "detail"};
  ojson jchecks = ojson::array();
  for (const CheckResult& r : results) {
    doc.rows.push_back({r.name, r.pass ? "pass" : "FAIL", r.detail});
    jchecks.push_back(
        {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  doc.payload = {{"command", "verify"}, {"degree", d},
                 {"seed", seed},        {"trials", trials},
                 {"exhaustive", exhaustive}, {"checks", jchecks},
                 {"failed", failed}};
  int rc = emit_doc(doc, fmt, outfile, out, err);
  if (rc != 0) return rc;
  return failed == 0 ? 0 : 1;
}

int cmd_smooth(const std::vector<std::string>& tokens, int64_t field, Fmt fmt,
               const std::string& outfile, std::ostream& out,
               std::ostream& err) {
  CurveInput in = parse_curve_tokens(tokens);
  BuiltCurve bc = build_curve(in, field);
  SmoothResult r = is_smooth(bc.form, bc.F);
  Doc doc;
  doc.title = "smoothness of a degree-" + std::to_string(in.d) + " curve";
  doc.notes.push_back("curve " + form_pretty(bc.form) + " over F_" +
                      std::to_string(bc.F.p()));
  doc.notes.push_back(r.smooth ? "smooth over the algebraic closure"
                               : "singular");
  doc.payload = {{"command", "smooth"},
                 {"degree", in.d},
                 {"field", bc.F.p()},
                 {"curve", form_pretty(bc.form)},
                 {"smooth", r.smooth}};
  if (r.witness) {
    doc.columns = {"extension degree", "modulus", "singular point"};
    doc.rows.push_back({std::to_string(r.witness->ext_degree),
                        poly_in_t(r.witness->modulus),
                        point_pretty(r.witness->point)});
    ojson w;
    w["ext_degree"] = r.witness->ext_degree;
    w["modulus"] = poly_in_t(r.witness->modulus);
    w["point"] = {poly_in_t(r.witness->point[0]),
                  poly_in_t(r.witness->point[1]),
                  poly_in_t(r.witness->point[2])};
    doc.payload["witness"] = w;
  } else {
    doc.payload["witness"] = nullptr;
  }
  return emit_doc(doc, fmt, outfile, out, err);
}

int cmd_aut(const std::vector<std::string>& tokens, int64_t field,
            bool exhaustive, uint64_t budget, Fmt fmt,
            const std::string& outfile, std::ostream& out, std::ostream& err) {
  CurveInput in = parse_curve_tokens(tokens);
  BuiltCurve bc = build_curve(in, field);
  GroupClosure g = exhaustive ? exhaustive_aut(bc.form, bc.F, budget)
                              : monomial_stabilizer(bc.form, bc.F);
  Doc doc;
  doc.title = std::string(exhaustive ? "rational automorphism group"
                                     : "monomial stabilizer") +
              " of a degree-" + std::to_string(in.d) + " curve";
  doc.notes.push_back("curve " + form_pretty(bc.form) + " over F_" +
                      std::to_string(bc.F.p()));
  doc.notes.push_back("group order " + std::to_string(g.order));
  doc.columns = {"element order", "count"};
  for (const auto& [ord, count] : g.order_histogram)
    doc.rows.push_back({std::to_string(ord), std::to_string(count)});
  doc.payload = {{"command", "aut"},
                 {"degree", in.d},
                 {"field", bc.F.p()},
                 {"curve", form_pretty(bc.form)},
                 {"method", exhaustive ? "exhaustive" : "monomial"},
                 {"order", g.order},
                 {"order_histogram", histogram_json(g.order_histogram)}};
  return emit_doc(doc, fmt, outfile, out, err);
}

int cmd_closure(const std::string& name, unsigned d, int64_t field, Fmt fmt,
                const std::string& outfile, std::ostream& out,
                std::ostream& err) {
  if (d < 4) {
    err << "error: degree must be at least 4\n";
    return 2;
  }
  PrimeField F(checked_field(field, d, closure_default_orders(name, d)));
  GroupClosure g = named_closure(name, d, F);
  Doc doc;
  doc.title = "closure of the generator set '" + name + "'";
  doc.notes.push_back("field F_" + std::to_string(F.p()));
  doc.notes.push_back("group order " + std::to_string(g.order));
  doc.columns = {"element order", "count"};
  for (const auto& [ord, count] : g.order_histogram)
    doc.rows.push_back({std::to_string(ord), std::to_string(count)});
  doc.payload = {{"command", "closure"},
                 {"group", name},
                 {"degree", d},
                 {"field", F.p()},
                 {"order", g.order},
                 {"order_histogram", histogram_json(g.order_histogram)}};
  return emit_doc(doc, fmt, outfile, out, err);
}

int cmd_quotient(const std::vector<std::string>& tokens,
                 const std::string& map_str, int64_t field, Fmt fmt,
                 const std::string& outfile, std::ostream& out,
                 std::ostream& err) {
  CurveInput in = parse_curve_tokens(tokens);
  BuiltCurve bc = build_curve(in, field);
  unsigned mm, ma, mb;
  if (!map_str.empty()) {
    auto xs = parse_int_list(map_str);
    if (xs.size() != 3 || xs[0] < 1 || xs[1] < 0 || xs[2] < 0)
      throw std::invalid_argument("--map takes m,a,b with m >= 1");
    mm = static_cast<unsigned>(xs[0]);
    ma = static_cast<unsigned>(xs[1]);
    mb = static_cast<unsigned>(xs[2]);
  } else if (bc.ctype) {
    mm = bc.ctype->m;
    ma = bc.ctype->a;
    mb = bc.ctype->b;
  } else {
    throw std::invalid_argument("raw curves need --map m,a,b");
  }
  SmoothResult sm = is_smooth(bc.form, bc.F);
  if (!sm.smooth) {
    err << "error: the curve is singular, so the genus formula does not "
           "apply\n";
    return 1;
  }
  ProjMatrix M = diagonal_map(mm, ma, mb, bc.F);
  QuotientReport rep = quotient_analysis(bc.form, M, bc.F);

  std::string profile;
  std::vector<unsigned> ram;
  for (const BranchOrbit& o : rep.data.orbits) {
    if (!profile.empty()) profile += " ";
    profile += "(" + std::to_string(o.size) + "," + std::to_string(o.e) + ")";
    ram.push_back(o.e);
  }
  Doc doc;
  doc.title = "cyclic quotient of a degree-" + std::to_string(in.d) + " curve";
  doc.notes.push_back("curve " + form_pretty(bc.form) + " over F_" +
                      std::to_string(bc.F.p()));
  doc.notes.push_back("action diag(1, xi_" + std::to_string(mm) + "^" +
                      std::to_string(ma) + ", xi_" + std::to_string(mm) + "^" +
                      std::to_string(mb) + "), group order " +
                      std::to_string(rep.group_order));
  doc.notes.push_back("branch orbits (size,e): " +
                      (profile.empty() ? "none" : profile));
  doc.notes.push_back("curve genus " + std::to_string(genus(in.d)) +
                      ", quotient genus " +
                      std::to_string(rep.quotient_genus));
  doc.columns = {"extension degree", "modulus", "fixed point", "stabilizer"};
  ojson jpoints = ojson::array();
  for (const BranchPoint& bp : rep.points) {
    doc.rows.push_back({std::to_string(bp.ext_degree), poly_in_t(bp.modulus),
                        point_pretty(bp.point),
                        std::to_string(bp.stabilizer_order)});
    jpoints.push_back({{"ext_degree", bp.ext_degree},
                       {"modulus", poly_in_t(bp.modulus)},
                       {"point",
                        {poly_in_t(bp.point[0]), poly_in_t(bp.point[1]),
                         poly_in_t(bp.point[2])}},
                       {"stabilizer", bp.stabilizer_order}});
  }
  ojson jorbits = ojson::array();
  for (const BranchOrbit& o : rep.data.orbits)
    jorbits.push_back({{"size", o.size}, {"e", o.e}});
  doc.payload = {{"command", "quotient"},
                 {"degree", in.d},
                 {"field", bc.F.p()},
                 {"curve", form_pretty(bc.form)},
                 {"map", {{"m", mm}, {"a", ma}, {"b", mb}}},
                 {"group_order", rep.group_order},
                 {"fixed_points", jpoints},
                 {"orbits", jorbits},
                 {"ramification_indices", ram},
                 {"curve_genus", genus(in.d)},
                 {"quotient_genus", rep.quotient_genus}};
  return emit_doc(doc, fmt, outfile, out, err);
}

int cmd_strata(unsigned d, unsigned order, Fmt fmt, const std::string& outfile,
               std::ostream& out, std::ostream& err) {
  if (d < 4) {
    err << "error: degree must be at least 4\n";
    return 2;
  }
  std::vector<StratumReport> reports;
  if (order > 0) {
    reports.push_back(equation_components(d, order));
  } else {
    for (unsigned m = 2; m <= d * (d - 1); ++m) {
      StratumReport r = equation_components(d, m);
      if (r.count > 0) reports.push_back(r);
    }
  }
  Doc doc;
  doc.title = "moduli strata with a cyclic action in degree " +
              std::to_string(d);
  doc.notes.push_back(
      "component counts are lower bounds for the number of irreducible "
      "components of each stratum");
  doc.columns = {"m",
                 "components",
                 "(a,b)",
                 "weight class",
                 "eigenspace families",
                 "generic extra automorphisms",
                 "family"};
  ojson jstrata = ojson::array();
  for (const StratumReport& rep : reports) {
    ojson jcomps = ojson::array();
    for (const StratumComponent& comp : rep.component_types) {
      const TypeFamily& fam = comp.family;
      doc.rows.push_back(
          {std::to_string(rep.m), std::to_string(rep.count),
           "(" + std::to_string(fam.type.a) + "," +
               std::to_string(fam.type.b) + ")",
           std::to_string(fam.wclass), std::to_string(comp.eigenspace_families),
           comp.extra_automorphisms_generic ? "yes" : "no",
           support_shorthand(d, fam.support)});
      jcomps.push_back(
          {{"m", fam.type.m},
           {"a", fam.type.a},
           {"b", fam.type.b},
           {"weight_class", fam.wclass},
           {"eigenspace_families", comp.eigenspace_families},
           {"extra_automorphisms_generic", comp.extra_automorphisms_generic},
           {"shorthand", support_shorthand(d, fam.support)},
           {"support", support_json(fam.support)}});
    }
    jstrata.push_back({{"m", rep.m},
                       {"component_count", rep.count},
                       {"irreducible_candidate", rep.es_irreducible_candidate},
                       {"components", jcomps}});
  }
  doc.payload = {{"command", "strata"},
                 {"degree", d},
                 {"strata", jstrata}};
  return emit_doc(doc, fmt, outfile, out, err);
}

const char kFooter[] = R"(Curve specification (smooth, aut, quotient):
  d=<degree> type=<m>,<a>,<b>[,<w>] [alpha=<int>] [beta=<int>]
      A member of the invariant equation family of the cyclic type m,(a,b)
      in degree d.  alpha is assigned to every required-nonzero slot
      (default 1) and beta to every free slot (default 0); the optional
      fourth type component picks a weight class when one type carries
      several families.  Run `plcaut types <d> --unfiltered` to list types.
  d=<degree> coeffs=[(i,j,k,c),...]
      A raw form, the sum of the terms c*X^i*Y^j*Z^k; every term must have
      total degree d.

Examples:
  plcaut types 5
  plcaut verify 5 --jobs 4
  plcaut smooth d=5 type=8,1,4 beta=3
  plcaut aut d=4 coeffs=[(3,1,0,1),(0,3,1,1),(1,0,3,1)] --field 29 --exhaustive
  plcaut quotient d=5 type=20,4,5 --map 4,0,1
  plcaut closure hess216
  plcaut strata 5 4
)";

}  // namespace

std::string support_shorthand(unsigned d, const std::vector<Monomial>& support) {
  std::map<unsigned, std::vector<Monomial>> slices;
  for (const Monomial& mo : support) slices[mo.k].push_back(mo);
  std::string s;
  auto append = [&s](const std::string& term) {
    if (!s.empty()) s += "+";
    s += term;
  };
  for (auto& [k, monos] : slices) {
    unsigned n = d - k;
    if (n >= 1 && monos.size() == n + 1) {
      // Every degree-n monomial in X and Y appears: collapse the slice.
      std::string t;
      if (k > 0) t = "Z" + std::to_string(k) + "*";
      t += "L" + std::to_string(n) + "Z";
      append(t);
      continue;
    }
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& x, const Monomial& y) { return y < x; });
    for (const Monomial& mo : monos) append(monomial_pretty(mo));
  }
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "plcaut: cyclic automorphisms of smooth plane curves.\n"
      "Enumerates invariant equation families by type m,(a,b), certifies\n"
      "smoothness over finite fields of large characteristic, computes\n"
      "automorphism subgroups, quotient genera and moduli stratum counts."};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string format = "md";
  std::string outfile;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", outfile, "write the report to a file");
  };

  unsigned degree = 0;
  bool unfiltered = false;
  CLI::App* types = app.add_subcommand(
      "types", "list the cyclic types and invariant families of a degree");
  types->add_option("degree,--degree", degree, "curve degree (>= 4)")
      ->required();
  types->add_flag("--unfiltered", unfiltered,
                  "include families with no smooth members");
  add_common(types);

  unsigned trials = kDefaultTrials;
  uint64_t seed = kDefaultSeed;
  uint64_t budget = kDefaultBudget;
  bool exhaustive = false;
  unsigned jobs = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the verification battery for a degree");
  verify->add_option("degree,--degree", degree, "curve degree (>= 4)")
      ->required();
  verify->add_option("--trials", trials, "sampling trials per family")
      ->capture_default_str();
  verify->add_option("--seed", seed, "sampling seed")->capture_default_str();
  verify->add_option("--budget", budget, "exhaustive search budget")
      ->capture_default_str();
  verify->add_flag("--exhaustive", exhaustive,
                   "include the exhaustive automorphism searches (degree 4)");
  verify->add_option("--jobs", jobs, "checks to run in parallel")
      ->capture_default_str();
  add_common(verify);

  std::vector<std::string> curve_tokens;
  int64_t field = 0;
  CLI::App* smooth = app.add_subcommand(
      "smooth", "decide smoothness of one curve (see --help for the grammar)");
  smooth->add_option("spec", curve_tokens, "curve spec tokens")->required();
  smooth->add_option("--field", field,
                     "prime field characteristic (0 = choose automatically)");
  add_common(smooth);

  CLI::App* aut = app.add_subcommand(
      "aut", "automorphisms of one curve (see --help for the grammar)");
  aut->add_option("spec", curve_tokens, "curve spec tokens")->required();
  aut->add_option("--field", field,
                  "prime field characteristic (0 = choose automatically)");
  aut->add_flag("--exhaustive", exhaustive,
                "search all rational automorphisms, not just monomial ones");
  aut->add_option("--budget", budget, "exhaustive search budget")
      ->capture_default_str();
  add_common(aut);

  std::string group_name;
  unsigned closure_degree = 5;
  CLI::App* closure_cmd = app.add_subcommand(
      "closure", "order and element orders of a named generator set");
  closure_cmd
      ->add_option("group", group_name,
                   "one of hess36, hess72, hess216, fermat, klein")
      ->required();
  closure_cmd->add_option("--degree", closure_degree,
                          "degree for the fermat and klein generator sets")
      ->capture_default_str();
  closure_cmd->add_option("--field", field,
                          "prime field characteristic (0 = choose "
                          "automatically)");
  add_common(closure_cmd);

  std::string map_str;
  CLI::App* quotient = app.add_subcommand(
      "quotient",
      "branch data and quotient genus of a cyclic action on one curve");
  quotient->add_option("spec", curve_tokens, "curve spec tokens")->required();
  quotient->add_option("--map", map_str,
                       "acting diagonal map m,a,b for diag(1, xi_m^a, "
                       "xi_m^b); defaults to the generator of the curve's "
                       "own type");
  quotient->add_option("--field", field,
                       "prime field characteristic (0 = choose automatically)");
  add_common(quotient);

  unsigned stratum_order = 0;
  CLI::App* strata = app.add_subcommand(
      "strata", "equation components of the moduli strata of a degree");
  strata->add_option("degree,--degree", degree, "curve degree (>= 4)")
      ->required();
  strata->add_option("order", stratum_order,
                     "group order m (omit to scan m = 2 .. d(d-1))");
  add_common(strata);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Fmt fmt = parse_fmt(format);
    if (app.got_subcommand(types))
      return cmd_types(degree, unfiltered, fmt, outfile, out, err);
    if (app.got_subcommand(verify))
      return cmd_verify(degree, trials, seed, budget, exhaustive, jobs, fmt,
                        outfile, out, err);
    if (app.got_subcommand(smooth))
      return cmd_smooth(curve_tokens, field, fmt, outfile, out, err);
    if (app.got_subcommand(aut))
      return cmd_aut(curve_tokens, field, exhaustive, budget, fmt, outfile,
                     out, err);
    if (app.got_subcommand(closure_cmd))
      return cmd_closure(group_name, closure_degree, field, fmt, outfile, out,
                         err);
    if (app.got_subcommand(quotient))
      return cmd_quotient(curve_tokens, map_str, field, fmt, outfile, out,
                          err);
    if (app.got_subcommand(strata))
      return cmd_strata(degree, stratum_order, fmt, outfile, out, err);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const FieldError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace plcaut
