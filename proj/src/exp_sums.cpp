/*
 * Copyright 2026 The dgscheme Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dgscheme/exp_sums.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dgscheme/kernels.hpp"

namespace dgscheme {

namespace {

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

Json gauss_json(const GaussianInteger& z) { return {{"re", exact_json(z.re)}, {"im", exact_json(z.im)}}; }

mpz_class pow2(unsigned e) { return mpz_class(1) << e; }

RingElement cube(const GaloisRing& ring, RingElement x) { return ring.mul(x, ring.mul(x, x)); }

// Sum of i^{T(aZ + 2Z^3)} over the lifts Z of zs.
GaussianInteger lifted_sum(const GaloisRing& ring, RingElement a, const std::vector<FieldElement>& zs) {
  GaussianInteger s;
  for (const auto z : zs) {
    const RingElement Z = ring.teich_lift(z);
    s.add_i_pow(ring.trace(GaloisRing::add(ring.mul(a, Z), GaloisRing::twice(cube(ring, Z)))));
  }
  return s;
}

std::vector<FieldElement> cubic_roots(const BinaryField& f, FieldElement a) {
  std::vector<FieldElement> r;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const FieldElement e{x};
    if (BinaryField::add(BinaryField::add(f.cube(e), e), a).is_zero()) r.push_back(e);
  }
  return r;
}

Json ring_json(const GaloisRing& ring, RingElement x) {
  const auto c = ring.coefficients(x);
  return Json(std::vector<int>(c.begin(), c.begin() + ring.degree()));
}

bool in_t_plus_t(const GaloisRing& ring, RingElement t) {
  for (const auto G : ring.teichmuller())
    if (ring.is_teichmuller(GaloisRing::sub(t, G))) return true;
  return false;
}

std::vector<kernels::TupleTerm> pattern_terms(MultisetPattern p) {
  using T = kernels::TupleTerm;
  switch (p) {
    case MultisetPattern::T_plus_2T: return {T{1, false}, T{2, false}};
    case MultisetPattern::T_minus_T: return {T{1, false}, T{-1, false}};
    case MultisetPattern::T_plus_T: return {T{1, false}, T{1, false}};
    case MultisetPattern::T3: return {T{1, false}, T{1, false}, T{1, false}};
    case MultisetPattern::T2_minus_T: return {T{1, false}, T{1, false}, T{-1, false}};
    case MultisetPattern::T4: return {T{1, false}, T{1, false}, T{1, false}, T{1, false}};
    case MultisetPattern::T2_minus_T2: return {T{1, false}, T{1, false}, T{-1, false}, T{-1, false}};
    case MultisetPattern::T3_minus_T: return {T{1, false}, T{1, false}, T{1, false}, T{-1, false}};
  }
  throw std::invalid_argument("unknown multiset pattern");
}

std::vector<kernels::TupleTerm> variant_terms(SystemVariant v) {
  using T = kernels::TupleTerm;
  switch (v) {
    case SystemVariant::W_plus_2:
    case SystemVariant::N6_1: return {T{1, true}, T{1, true}, T{-1, true}};
    case SystemVariant::N6_2: return {T{1, true}, T{1, true}, T{1, true}};
    case SystemVariant::N8_1: return {T{1, true}, T{1, true}, T{-1, true}, T{-1, true}};
    case SystemVariant::N8_2: return {T{1, true}, T{1, true}, T{1, true}, T{1, true}};
  }
  throw std::invalid_argument("unknown system variant");
}

std::vector<std::uint64_t> histogram(const GaloisRing& ring, std::span<const kernels::TupleTerm> terms, Exec exec) {
  return exec == Exec::parallel ? kernels::tuple_histogram_parallel(ring, terms)
                                : kernels::tuple_histogram_serial(ring, terms);
}

// (ring target, cube target) of a system for its parameters.
std::pair<RingElement, FieldElement> system_target(const GaloisRing& ring, SystemVariant v, RingElement w,
                                                   RingElement b, FieldElement d) {
  const auto& f = ring.field();
  const FieldElement wb = GaloisRing::reduce(w), bb = GaloisRing::reduce(b);
  switch (v) {
    case SystemVariant::W_plus_2:
      return {GaloisRing::add(w, GaloisRing::twice(ring.one())), BinaryField::add(f.cube(wb), d)};
    case SystemVariant::N6_1:
      return {GaloisRing::add(w, GaloisRing::twice(b)), BinaryField::add(f.cube(wb), f.mul(f.cube(bb), d))};
    case SystemVariant::N6_2:
      return {GaloisRing::add(GaloisRing::neg(w), GaloisRing::twice(b)),
              BinaryField::add(f.cube(wb), f.mul(f.cube(bb), d))};
    case SystemVariant::N8_1:
    case SystemVariant::N8_2: return {GaloisRing::twice(b), f.mul(f.cube(bb), d)};
  }
  throw std::invalid_argument("unknown system variant");
}

bool variant_needs_b(SystemVariant v) { return v != SystemVariant::W_plus_2; }
bool variant_has_w(SystemVariant v) { return v != SystemVariant::N8_1 && v != SystemVariant::N8_2; }

// Weight of (a, b) in E or F from xi(a, b).
__int128 sum_weight(SumKind kind, Gauss64 x) {
  const __int128 re = x.re, im = x.im;
  const __int128 n = re * re + im * im;
  const __int128 re2 = re * re - im * im, im2 = 2 * re * im;
  if (kind == SumKind::E) return 2 * (re2 * re2 - im2 * im2) + 6 * n * n;
  return 2 * n * re2;
}

}  // namespace

Json LemmaReport::to_json() const {
  return {{"lemma_id", lemma_id},
          {"m", m},
          {"cases_checked", cases_checked},
          {"failure_count", failure_count},
          {"passed", passed()},
          {"failures", failures}};
}

// ---- xi, S, eta ----

GaussianInteger xi(const GaloisRing& ring, RingElement a, FieldElement b) {
  const RingElement B = ring.teich_lift(b);
  GaussianInteger s;
  for (const auto X : ring.teichmuller())
    s.add_i_pow(ring.trace(GaloisRing::add(ring.mul(a, X), GaloisRing::twice(ring.mul(B, cube(ring, X))))));
  return s;
}

long big_s(const GaloisRing& ring, const GroupElement& g) {
  // S = sum over X of i^e + i^{-e}, e = u + T(aX + 2BX^3).
  const RingElement B = ring.teich_lift(g.b);
  GaussianInteger s;
  for (const auto X : ring.teichmuller()) {
    const int e = g.u + ring.trace(GaloisRing::add(ring.mul(g.a, X), GaloisRing::twice(ring.mul(B, cube(ring, X)))));
    s.add_i_pow(e);
    s.add_i_pow(-e & 3);
  }
  if (!s.is_real()) throw std::logic_error("big_s: nonzero imaginary part");
  return s.re.get_si();
}

RootSets root_sets(const BinaryField& f, FieldElement u) {
  RootSets r;
  const FieldElement u2 = f.square(u);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const FieldElement z{x};
    const FieldElement h = BinaryField::add(BinaryField::add(f.square(z), f.mul(u2, z)), f.sqrt(z));
    if (h.is_zero()) r.H.push_back(z);
    if (BinaryField::add(h, u).is_zero()) r.F.push_back(z);
  }
  return r;
}

std::vector<Json> eta_identity_failures(const GaloisRing& ring, RingElement a) {
  const auto& f = ring.field();
  const int m = ring.degree();
  const FieldElement u = GaloisRing::reduce(a);
  const RootSets rs = root_sets(f, u);
  const GaussianInteger e = eta(ring, a), eb = e.conj();
  const mpz_class q = pow2(m);
  const mpz_class nF = static_cast<unsigned long>(rs.F.size());
  const GaussianInteger e2 = e * e, ee = e * eb;
  const mpz_class sign = f.trace(f.cube(u)) ? -1 : 1;

  std::vector<std::pair<GaussianInteger, GaussianInteger>> sides;
  sides.emplace_back(e2, lifted_sum(ring, a, rs.F) * q);
  sides.emplace_back(ee, lifted_sum(ring, a, rs.H) * q);
  sides.emplace_back(e2 * e2, ee * mpz_class(q * sign * nF));
  sides.emplace_back(ee * ee, ee * mpz_class(q * nF));
  sides.emplace_back(e2 * ee, e2 * mpz_class(q * nF));
  std::vector<Json> out;
  for (std::size_t k = 0; k < sides.size(); ++k)
    if (!(sides[k].first == sides[k].second))
      out.push_back({{"identity", k + 1}, {"a", ring_json(ring, a)}, {"eta", gauss_json(e)},
                     {"lhs", gauss_json(sides[k].first)}, {"rhs", gauss_json(sides[k].second)}});
  return out;
}

LemmaReport check_xi_properties(const GaloisRing& ring) {
  LemmaReport rep{"xi_properties", ring.degree()};
  const auto& f = ring.field();
  const std::uint32_t q = ring.q();
  const auto table = kernels::xi_table_serial(ring);
  auto at = [&](RingElement a, FieldElement b) { return table[static_cast<std::size_t>(ring.code(a)) * q + b.bits]; };
  const std::int64_t qq = q;
  // |xi|^2 takes the values 0, q, 2q, 4q, and q^2 at (0, 0) only.
  // The table against the term-by-term sum, only where that stays cheap.
  const bool direct = ring.degree() <= 5;
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement a = ring.from_code(code);
    for (std::uint32_t bb = 0; bb < q; ++bb) {
      const FieldElement b{bb};
      const Gauss64 x = at(a, b);
      ++rep.cases_checked;
      if (direct) {
        const GaussianInteger d = xi(ring, a, b);
        if (d.re != x.re || d.im != x.im)
          rep.fail({{"property", "table"}, {"a", ring_json(ring, a)}, {"b", bb}});
      }
      const std::int64_t n = x.re * x.re + x.im * x.im;
      if (n == qq * qq && (code != 0 || bb != 0))
        rep.fail({{"property", "norm_q2_off_origin"}, {"a", ring_json(ring, a)}, {"b", bb}});
      if (n != 0 && n != qq && n != 2 * qq && n != 4 * qq && n != qq * qq)
        rep.fail({{"property", "norm_set"}, {"a", ring_json(ring, a)}, {"b", bb}, {"norm", n}});
      if (!b.is_zero()) {
        const RingElement Binv3 = ring.teich_lift(f.cube_root(f.inv(b)));
        if (!(at(ring.mul(a, Binv3), f.one()) == x))
          rep.fail({{"property", "b_reduction"}, {"a", ring_json(ring, a)}, {"b", bb}});
      }
      // Scaling by W in T*: a = U + 2V goes to UW + 2VW, b to b w^3.
      for (std::uint32_t w = 1; w < q; ++w) {
        const FieldElement wf{w};
        const RingElement Wt = ring.teich_lift(wf);
        if (!(at(ring.mul(a, Wt), f.mul(b, f.cube(wf))) == x))
          rep.fail({{"property", "scaling"}, {"a", ring_json(ring, a)}, {"b", bb}, {"w", w}});
      }
    }
  }
  if (!(at(ring.zero(), f.zero()) == Gauss64{qq, 0})) rep.fail({{"property", "xi00"}});
  return rep;
}

LemmaReport check_eta_identities(const GaloisRing& ring) {
  LemmaReport rep{"eta_identities", ring.degree()};
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    ++rep.cases_checked;
    for (auto& j : eta_identity_failures(ring, ring.from_code(code))) rep.fail(std::move(j));
  }
  return rep;
}

LemmaReport check_root_sets(const GaloisRing& ring) {
  LemmaReport rep{"root_sets", ring.degree()};
  const auto& f = ring.field();
  for (std::uint32_t ub = 0; ub < f.size(); ++ub) {
    const FieldElement u{ub};
    ++rep.cases_checked;
    const RootSets rs = root_sets(f, u);
    const FieldElement u2 = f.square(u);
    auto fail = [&](const char* what) { rep.fail({{"property", what}, {"u", ub}}); };
    if (std::find(rs.F.begin(), rs.F.end(), u2) == rs.F.end()) fail("u_squared_in_F");
    std::vector<FieldElement> shifted;
    for (const auto x : rs.H) shifted.push_back(BinaryField::add(x, u2));
    std::sort(shifted.begin(), shifted.end());
    if (shifted != rs.F) fail("shift");
    if (rs.F.size() != rs.H.size()) fail("sizes");
    for (const auto x : rs.H)
      if (f.trace(f.mul(u, x)) != 0) fail("trace_on_H");
    const int t3 = f.trace(f.cube(u));
    for (const auto y : rs.F)
      if (f.trace(f.mul(u, y)) != t3) fail("trace_on_F");
    if (ub == 0) {
      const bool has0 = std::find(rs.H.begin(), rs.H.end(), f.zero()) != rs.H.end();
      const bool has1 = std::find(rs.H.begin(), rs.H.end(), f.one()) != rs.H.end();
      if (!has0 || !has1) fail("H0_contains_0_1");
    }
  }
  return rep;
}

// ---- cubics ----

CubicClass classify_cubic(const BinaryField& f, FieldElement a) {
  if (a.is_zero()) throw std::invalid_argument("classify_cubic: a must be nonzero");
  switch (cubic_roots(f, a).size()) {
    case 0: return CubicClass::M0;
    case 1: return CubicClass::M1;
    case 3: return CubicClass::M3;
    default: throw std::logic_error("classify_cubic: impossible root count");
  }
}

std::array<std::uint64_t, 3> cubic_census(const BinaryField& f) {
  std::array<std::uint64_t, 3> c{};
  for (std::uint32_t a = 1; a < f.size(); ++a) ++c[static_cast<int>(classify_cubic(f, {a}))];
  return c;
}

std::array<std::uint64_t, 3> cubic_census_formula(int m) {
  const std::uint64_t q = std::uint64_t{1} << m;
  return {(q + 1) / 3, q / 2 - 1, (q - 2) / 6};
}

LemmaReport check_cubic_census(const BinaryField& f) {
  LemmaReport rep{"cubic_census", f.degree()};
  rep.cases_checked = f.size() - 1;
  const auto got = cubic_census(f), want = cubic_census_formula(f.degree());
  if (got != want) rep.fail({{"computed", got}, {"expected", want}});
  return rep;
}

LemmaReport check_cubic_cases(const BinaryField& f) {
  LemmaReport rep{"cubic_cases", f.degree()};
  const std::uint32_t q = f.size();
  std::vector<char> s1(q, 0), s3(q, 0);
  for (std::uint32_t bb = 2; bb < q; ++bb) {
    const FieldElement b{bb}, bi = f.inv(b);
    s1[BinaryField::add(b, bi).bits] = 1;
    if (f.trace(b) == 1) s3[BinaryField::add(bi, f.cube(bi)).bits] = 1;
  }
  const auto census = cubic_census_formula(f.degree());
  const auto n1 = static_cast<std::uint64_t>(std::count(s1.begin(), s1.end(), 1));
  const auto n3 = static_cast<std::uint64_t>(std::count(s3.begin(), s3.end(), 1));
  if (n1 != census[1]) rep.fail({{"case", 2}, {"set_size", n1}, {"expected", census[1]}});
  if (n3 != census[2]) rep.fail({{"case", 3}, {"set_size", n3}, {"expected", census[2]}});
  for (std::uint32_t ab = 0; ab < q; ++ab) {
    const FieldElement a{ab};
    ++rep.cases_checked;
    const auto roots = cubic_roots(f, a);
    const std::size_t n = roots.size();
    if (ab == 0) {
      if (roots != std::vector<FieldElement>{f.zero(), f.one()}) rep.fail({{"case", 1}, {"roots", n}});
      continue;
    }
    if (s1[ab] && s3[ab]) rep.fail({{"case", "overlap"}, {"a", ab}});
    if (s1[ab] && n != 1) rep.fail({{"case", 2}, {"a", ab}, {"roots", n}});
    if (s3[ab] && n != 3) rep.fail({{"case", 3}, {"a", ab}, {"roots", n}});
    if (!s1[ab] && !s3[ab] && n != 0) rep.fail({{"case", 4}, {"a", ab}, {"roots", n}});
    if ((n == 1) != (f.trace(f.inv(a)) == 0)) rep.fail({{"case", "trace_criterion"}, {"a", ab}, {"roots", n}});
  }
  return rep;
}

// ---- multisets ----

const std::vector<MultisetPattern>& all_multiset_patterns() {
  static const std::vector<MultisetPattern> v{MultisetPattern::T_plus_2T, MultisetPattern::T_minus_T,
                                              MultisetPattern::T_plus_T,  MultisetPattern::T3,
                                              MultisetPattern::T2_minus_T, MultisetPattern::T4,
                                              MultisetPattern::T2_minus_T2, MultisetPattern::T3_minus_T};
  return v;
}

std::string pattern_name(MultisetPattern p) {
  switch (p) {
    case MultisetPattern::T_plus_2T: return "T+2T";
    case MultisetPattern::T_minus_T: return "T-T";
    case MultisetPattern::T_plus_T: return "T+T";
    case MultisetPattern::T3: return "T+T+T";
    case MultisetPattern::T2_minus_T: return "T+T-T";
    case MultisetPattern::T4: return "T+T+T+T";
    case MultisetPattern::T2_minus_T2: return "T+T-T-T";
    case MultisetPattern::T3_minus_T: return "T+T+T-T";
  }
  return "?";
}

int pattern_arity(MultisetPattern p) { return static_cast<int>(pattern_terms(p).size()); }

std::vector<std::uint64_t> multiset_histogram(const GaloisRing& ring, MultisetPattern p, Exec exec) {
  const auto terms = pattern_terms(p);
  const auto h = histogram(ring, terms, exec);
  std::vector<std::uint64_t> out(ring.size());
  for (std::uint32_t c = 0; c < ring.size(); ++c) out[c] = h[static_cast<std::size_t>(c) * ring.q()];
  return out;
}

std::uint64_t multiset_count(const GaloisRing& ring, MultisetPattern p, RingElement target) {
  // Plain nested loops over T^k.
  const auto terms = pattern_terms(p);
  const auto& T = ring.teichmuller();
  const std::size_t k = terms.size(), q = T.size();
  std::vector<std::size_t> idx(k, 0);
  std::uint64_t n = 0;
  while (true) {
    RingElement s = ring.zero();
    for (std::size_t j = 0; j < k; ++j) {
      RingElement x = T[idx[j]];
      if (terms[j].coefficient == 2 || terms[j].coefficient == -2) x = GaloisRing::twice(x);
      if (terms[j].coefficient < 0) x = GaloisRing::neg(x);
      s = GaloisRing::add(s, x);
    }
    n += s == target;
    std::size_t j = 0;
    while (j < k && ++idx[j] == q) idx[j++] = 0;
    if (j == k) break;
  }
  return n;
}

std::optional<std::uint64_t> multiset_expected(const GaloisRing& ring, MultisetPattern p, RingElement t) {
  const std::uint64_t q = ring.q();
  const bool zero = t.is_zero(), even = t.is_even();
  switch (p) {
    case MultisetPattern::T_plus_2T: return 1;
    case MultisetPattern::T_minus_T: return zero ? q : (even ? 0 : 1);
    case MultisetPattern::T_plus_T:
      if (even) return 1;
      return std::nullopt;
    case MultisetPattern::T3: return ring.is_teichmuller(GaloisRing::neg(t)) ? 1 : q + 1;
    case MultisetPattern::T2_minus_T: return ring.is_teichmuller(t) ? 2 * q - 1 : q - 1;
    case MultisetPattern::T4: return zero ? q : (even ? q * (q + 1) : q * q);
    case MultisetPattern::T2_minus_T2: return zero ? (2 * q - 1) * q : (even ? (q - 1) * q : q * q);
    case MultisetPattern::T3_minus_T:
      if (even) return q * q;
      return in_t_plus_t(ring, t) ? (q + 1) * q : (q - 1) * q;
  }
  throw std::invalid_argument("unknown multiset pattern");
}

LemmaReport check_multiset(const GaloisRing& ring, MultisetPattern p, Exec exec) {
  LemmaReport rep{"multiset " + pattern_name(p), ring.degree()};
  const auto h = multiset_histogram(ring, p, exec);
  const std::uint64_t q = ring.q();
  std::uint64_t total = 0, doubles = 0;
  for (std::uint32_t c = 0; c < ring.size(); ++c) {
    const RingElement t = ring.from_code(c);
    ++rep.cases_checked;
    total += h[c];
    if (const auto want = multiset_expected(ring, p, t)) {
      if (h[c] != *want) rep.fail({{"target", ring_json(ring, t)}, {"count", h[c]}, {"expected", *want}});
      continue;
    }
    // T + T outside 2R: 0 or 2, never on both t and -t.
    if (h[c] != 0 && h[c] != 2) rep.fail({{"target", ring_json(ring, t)}, {"count", h[c]}, {"expected", "0 or 2"}});
    if (h[c] == 2) {
      ++doubles;
      if (h[ring.code(GaloisRing::neg(t))] != 0) rep.fail({{"target", ring_json(ring, t)}, {"property", "t and -t"}});
    }
  }
  if (p == MultisetPattern::T_plus_T && doubles != (q * q - q) / 2)
    rep.fail({{"property", "half_outside_2R"}, {"count", doubles}, {"expected", (q * q - q) / 2}});
  std::uint64_t want_total = 1;
  for (int j = 0; j < pattern_arity(p); ++j) want_total *= q;
  if (total != want_total) rep.fail({{"property", "checksum"}, {"total", total}, {"expected", want_total}});
  return rep;
}

// ---- systems ----

const std::vector<SystemVariant>& all_system_variants() {
  static const std::vector<SystemVariant> v{SystemVariant::W_plus_2, SystemVariant::N6_1, SystemVariant::N6_2,
                                            SystemVariant::N8_1, SystemVariant::N8_2};
  return v;
}

std::string variant_name(SystemVariant v) {
  switch (v) {
    case SystemVariant::W_plus_2: return "X+Y-Z=W+2";
    case SystemVariant::N6_1: return "X+Y-Z=A+2B";
    case SystemVariant::N6_2: return "X+Y+Z=-A+2B";
    case SystemVariant::N8_1: return "X+Y-Z-W=2B";
    case SystemVariant::N8_2: return "X+Y+Z+W=2B";
  }
  return "?";
}

std::uint64_t system_expected(int m, SystemVariant v, std::optional<CubicClass> d) {
  const std::uint64_t q = std::uint64_t{1} << m;
  const int k = !d ? 0 : (*d == CubicClass::M0 ? 1 : (*d == CubicClass::M1 ? 2 : 3));
  // Columns: d = 0, M0, M1, M3.
  static constexpr std::uint64_t three[3][4] = {{1, 0, 2, 0}, {1, 0, 2, 0}, {3, 0, 0, 6}};
  switch (v) {
    case SystemVariant::W_plus_2: return three[0][k];
    case SystemVariant::N6_1: return three[1][k];
    case SystemVariant::N6_2: return three[2][k];
    case SystemVariant::N8_1: return std::array<std::uint64_t, 4>{q, 0, 2 * q, 0}[k];
    case SystemVariant::N8_2: return std::array<std::uint64_t, 4>{3 * q, 0, 0, 6 * q}[k];
  }
  throw std::invalid_argument("unknown system variant");
}

std::uint64_t system_count(const GaloisRing& ring, SystemVariant v, RingElement w, RingElement b, FieldElement d) {
  if (variant_has_w(v) && !ring.is_teichmuller(w)) throw std::invalid_argument("system_count: W/A must lie in T");
  if (variant_needs_b(v) && (!ring.is_teichmuller(b) || b.is_zero()))
    throw std::invalid_argument("system_count: B must lie in T*");
  const auto [rt, ct] = system_target(ring, v, w, b, d);
  const auto terms = variant_terms(v);
  const auto& f = ring.field();
  const auto& T = ring.teichmuller();
  const std::size_t k = terms.size(), q = T.size();
  std::vector<std::size_t> idx(k, 0);
  std::uint64_t n = 0;
  while (true) {
    RingElement s = ring.zero();
    FieldElement c = f.zero();
    for (std::size_t j = 0; j < k; ++j) {
      const RingElement x = T[idx[j]];
      s = GaloisRing::add(s, terms[j].coefficient < 0 ? GaloisRing::neg(x) : x);
      c = BinaryField::add(c, f.cube(GaloisRing::reduce(x)));
    }
    n += (s == rt && c == ct);
    std::size_t j = 0;
    while (j < k && ++idx[j] == q) idx[j++] = 0;
    if (j == k) break;
  }
  return n;
}

LemmaReport check_system(const GaloisRing& ring, SystemVariant v, Exec exec) {
  LemmaReport rep{"system " + variant_name(v), ring.degree()};
  const auto& f = ring.field();
  const std::uint32_t q = ring.q();
  const auto terms = variant_terms(v);
  const auto h = histogram(ring, terms, exec);
  std::vector<std::optional<CubicClass>> cls(q);
  for (std::uint32_t d = 1; d < q; ++d) cls[d] = classify_cubic(f, {d});
  const auto& T = ring.teichmuller();
  const std::vector<RingElement> none{ring.zero()};
  const std::vector<RingElement> tstar(T.begin() + 1, T.end());
  const auto& ws = variant_has_w(v) ? T : none;
  const auto& bs = variant_needs_b(v) ? tstar : none;
  for (const auto w : ws)
    for (const auto b : bs)
      for (std::uint32_t d = 0; d < q; ++d) {
        ++rep.cases_checked;
        const auto [rt, ct] = system_target(ring, v, w, b, {d});
        const std::uint64_t got = h[static_cast<std::size_t>(ring.code(rt)) * q + ct.bits];
        const std::uint64_t want = system_expected(ring.degree(), v, cls[d]);
        if (got != want)
          rep.fail({{"w", ring_json(ring, w)}, {"b", ring_json(ring, b)}, {"d", d}, {"count", got}, {"expected", want}});
      }
  return rep;
}

// ---- E and F ----

GroupShape ring_field_shape(const GaloisRing& ring) {
  const int m = ring.degree(), n = 2 * m;
  const auto& f = ring.field();
  const auto gram = ring.trace_gram();
  std::vector<Z4> w(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      w[i * n + j] = gram[i * m + j];
      w[(m + i) * n + m + j] = static_cast<Z4>(2 * f.trace(f.mul(f.exp(i), f.exp(j))));
    }
  return GroupShape(m, m, std::move(w));
}

std::uint32_t ring_field_index(const GaloisRing& ring, RingElement a, FieldElement b) {
  const int m = ring.degree();
  return a.lo | (b.bits << m) | (a.hi << (2 * m));
}

mpz_class sum_brute(const DgGroup& g, SumKind kind, RingElement c, FieldElement d) {
  const auto& ring = g.ring();
  const auto tc = ring.trace_mask(c);
  const std::uint32_t td = ring.field().trace_mask(d);
  __int128 acc[4] = {0, 0, 0, 0};
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement a = ring.from_code(code);
    const int ta = GaloisRing::apply_trace_mask(tc, a);
    for (std::uint32_t b = 0; b < g.q(); ++b) {
      const int e = (ta + 2 * (std::popcount(b & td) & 1)) & 3;
      acc[e] += sum_weight(kind, g.xi(a, {b}));
    }
  }
  if (acc[1] != acc[3]) throw std::logic_error("sum_brute: nonzero imaginary part");
  return to_mpz(acc[0] - acc[2]);
}

std::vector<mpz_class> sum_all(const DgGroup& g, SumKind kind, Exec exec) {
  const auto& ring = g.ring();
  const GroupShape shape = ring_field_shape(ring);
  std::vector<std::int64_t> w(shape.order());
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement a = ring.from_code(code);
    for (std::uint32_t b = 0; b < g.q(); ++b) {
      const __int128 v = sum_weight(kind, g.xi(a, {b}));
      if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("sum_all: weight exceeds 64 bits");
      w[ring_field_index(ring, a, {b})] = static_cast<std::int64_t>(v);
    }
  }
  const auto y = character_sums(shape, w, exec);
  std::vector<mpz_class> out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k].im != 0) throw std::logic_error("sum_all: nonzero imaginary part");
    out[k] = static_cast<long>(y[k].re);
  }
  return out;
}

std::pair<RingElement, RingElement> split_difference(const GaloisRing& ring, RingElement c) {
  if (c.is_even()) throw std::invalid_argument("split_difference: c must lie outside 2R");
  std::optional<std::pair<RingElement, RingElement>> found;
  for (const auto G : ring.teichmuller()) {
    const RingElement F = GaloisRing::add(c, G);
    if (!ring.is_teichmuller(F)) continue;
    if (found) throw std::logic_error("split_difference: decomposition not unique");
    found = {F, G};
  }
  if (!found) throw std::logic_error("split_difference: no decomposition");
  return *found;
}

std::optional<std::pair<RingElement, RingElement>> split_sum(const GaloisRing& ring, RingElement c) {
  for (const auto G : ring.teichmuller()) {
    const RingElement F = GaloisRing::sub(c, G);
    if (F != G && ring.is_teichmuller(F)) return std::pair{F, G};
  }
  return std::nullopt;
}

std::optional<mpz_class> sum_closed(const GaloisRing& ring, SumKind kind, RingElement c, FieldElement d) {
  const auto& f = ring.field();
  const unsigned m = static_cast<unsigned>(ring.degree());
  const mpz_class scale = pow2(3 * m + (kind == SumKind::E ? 4 : 2));
  const mpz_class big = scale * (3 * pow2(m - 1) - 1), small = scale * (pow2(m - 1) - 1);
  auto cubes = [&](const std::pair<RingElement, RingElement>& fg) {
    return BinaryField::add(f.cube(GaloisRing::reduce(fg.first)), f.cube(GaloisRing::reduce(fg.second)));
  };
  if (kind == SumKind::E) {
    if (c.is_even()) return std::nullopt;
    return d == cubes(split_difference(ring, c)) ? big : small;
  }
  if (c.is_even()) return d.is_zero() ? big : small;
  // Outside T + T, F(c, d) = F(-c, d) and -c has the stated form.
  auto fg = split_sum(ring, c);
  if (!fg) fg = split_sum(ring, GaloisRing::neg(c));
  if (!fg) throw std::logic_error("sum_closed: neither c nor -c lies in T + T");
  return d == cubes(*fg) ? big : small;
}

// ---- N columns ----

GaussianInteger n_column(const DgGroup& g, int i, std::uint32_t character) {
  if (i < 0 || i > 9) throw std::invalid_argument("n_column: i must be in 0..9");
  const auto& ring = g.ring();
  const GroupElement ch = g.element(character);
  const auto tc = ring.trace_mask(ch.a);
  const std::uint32_t td = ring.field().trace_mask(ch.b);
  const int k = i / 2;
  const bool kerdock_only = i % 2 == 1;
  __int128 acc[4] = {0, 0, 0, 0};
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const GroupElement e = g.element(h);
    if (kerdock_only && !e.b.is_zero()) continue;
    __int128 w = 1;
    for (int t = 0; t < k; ++t) w *= g.big_s(h);
    const int x = (e.u * ch.u + GaloisRing::apply_trace_mask(tc, e.a) + 2 * (std::popcount(e.b.bits & td) & 1)) & 3;
    acc[x] += w;
  }
  return {to_mpz(acc[0] - acc[2]), to_mpz(acc[1] - acc[3])};
}

std::vector<Gauss64> n_column_all(const DgGroup& g, int i, Exec exec) {
  if (i < 0 || i > 9) throw std::invalid_argument("n_column_all: i must be in 0..9");
  std::vector<std::int64_t> w(g.order(), 0);
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    if (i % 2 == 1 && !g.element(h).b.is_zero()) continue;
    std::int64_t v = 1;
    for (int t = 0; t < i / 2; ++t) v *= g.big_s(h);
    w[h] = v;
  }
  return character_sums(g.shape(), w, exec);
}

}  // namespace dgscheme
