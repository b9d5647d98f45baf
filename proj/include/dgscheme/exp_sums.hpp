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

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgscheme/codes.hpp"
#include "dgscheme/dg_group.hpp"
#include "dgscheme/galois_ring.hpp"
#include "dgscheme/gaussian.hpp"
#include "dgscheme/scheme.hpp"

namespace dgscheme {

/// Outcome of one exhaustively checked identity or counting statement.
struct LemmaReport {
  LemmaReport() = default;
  LemmaReport(std::string id, int degree) : lemma_id(std::move(id)), m(degree) {}

  std::string lemma_id;
  int m = 0;
  std::uint64_t cases_checked = 0;
  std::vector<Json> failures;  // at most kMaxFailures kept
  std::uint64_t failure_count = 0;

  static constexpr std::size_t kMaxFailures = 16;
  bool passed() const { return failure_count == 0; }
  void fail(Json witness) {
    ++failure_count;
    if (failures.size() < kMaxFailures) failures.push_back(std::move(witness));
  }
  Json to_json() const;
};

// ---- xi, S, eta ----

/// xi(a, b) = sum over X in T of i^{T(aX + 2BX^3)}, summed term by term.
GaussianInteger xi(const GaloisRing& ring, RingElement a, FieldElement b);
/// S(u, a, b) = i^u xi(a, b) + conjugate. Throws std::logic_error if the
/// sum is not real.
long big_s(const GaloisRing& ring, const GroupElement& g);
inline GaussianInteger eta(const GaloisRing& ring, RingElement a) { return xi(ring, a, ring.field().one()); }

struct RootSets {
  std::vector<FieldElement> F;  // zeros of z^2 + u^2 z + sqrt(z) + u
  std::vector<FieldElement> H;  // zeros of z^2 + u^2 z + sqrt(z)
};
RootSets root_sets(const BinaryField& f, FieldElement u);

/// The five identities for eta_a; failures name the identity and both sides.
std::vector<Json> eta_identity_failures(const GaloisRing& ring, RingElement a);

LemmaReport check_xi_properties(const GaloisRing& ring);
LemmaReport check_eta_identities(const GaloisRing& ring);
LemmaReport check_root_sets(const GaloisRing& ring);

// ---- cubics x^3 + x + a ----

enum class CubicClass { M0, M1, M3 };
/// Number of roots of x^3 + x + a decides the class. Throws for a = 0.
CubicClass classify_cubic(const BinaryField& f, FieldElement a);
/// (|M0|, |M1|, |M3|).
std::array<std::uint64_t, 3> cubic_census(const BinaryField& f);
/// (q + 1)/3, q/2 - 1, (q - 2)/6.
std::array<std::uint64_t, 3> cubic_census_formula(int m);
LemmaReport check_cubic_census(const BinaryField& f);
/// The four-case root lemma, the two set sizes it relies on, and the claim
/// that a unique root occurs exactly when tr(1/a) = 0.
LemmaReport check_cubic_cases(const BinaryField& f);

// ---- multisets of Teichmuller sums ----

enum class MultisetPattern { T_plus_2T, T_minus_T, T_plus_T, T3, T2_minus_T, T4, T2_minus_T2, T3_minus_T };
const std::vector<MultisetPattern>& all_multiset_patterns();
std::string pattern_name(MultisetPattern p);
int pattern_arity(MultisetPattern p);

/// Multiplicity of every target, indexed by ring code.
std::vector<std::uint64_t> multiset_histogram(const GaloisRing& ring, MultisetPattern p, Exec exec = Exec::parallel);
std::uint64_t multiset_count(const GaloisRing& ring, MultisetPattern p, RingElement target);
/// Closed-form multiplicity; for T + T outside 2R the statement only says
/// "0 or 2", reported as nullopt.
std::optional<std::uint64_t> multiset_expected(const GaloisRing& ring, MultisetPattern p, RingElement target);
LemmaReport check_multiset(const GaloisRing& ring, MultisetPattern p, Exec exec = Exec::parallel);

// ---- solution counts of sum/cube systems ----

enum class SystemVariant { W_plus_2, N6_1, N6_2, N8_1, N8_2 };
const std::vector<SystemVariant>& all_system_variants();
std::string variant_name(SystemVariant v);
/// Expected count keyed on the class of d (d = 0 is its own case).
std::uint64_t system_expected(int m, SystemVariant v, std::optional<CubicClass> d_class);
/// Brute-force count. `w` is W (W_plus_2) or A (N6_1, N6_2); `b` is B.
std::uint64_t system_count(const GaloisRing& ring, SystemVariant v, RingElement w, RingElement b, FieldElement d);
LemmaReport check_system(const GaloisRing& ring, SystemVariant v, Exec exec = Exec::parallel);

// ---- the sums E(c, d) and F(c, d) ----

/// Group R x F_q with pairing T(ac) + 2 tr(bd); index = code(a) | b << 2m
/// is not used, see ring_field_index.
GroupShape ring_field_shape(const GaloisRing& ring);
std::uint32_t ring_field_index(const GaloisRing& ring, RingElement a, FieldElement b);

enum class SumKind { E, F };
/// Direct sum over every (a, b) using the xi table of `g`.
mpz_class sum_brute(const DgGroup& g, SumKind kind, RingElement c, FieldElement d);
/// All (c, d) at once through the character transform, indexed by
/// ring_field_index.
std::vector<mpz_class> sum_all(const DgGroup& g, SumKind kind, Exec exec = Exec::parallel);
/// Closed form when one is stated: E for c outside 2R, F everywhere.
std::optional<mpz_class> sum_closed(const GaloisRing& ring, SumKind kind, RingElement c, FieldElement d);

/// (F, G) in T x T with F - G = c, for c outside 2R.
std::pair<RingElement, RingElement> split_difference(const GaloisRing& ring, RingElement c);
/// (F, G) with F + G = c and F != G, if c has such a form.
std::optional<std::pair<RingElement, RingElement>> split_sum(const GaloisRing& ring, RingElement c);

// ---- N columns ----

/// g(N_i) = sum_h S(h)^{i/2} chi_g(h), odd i restricted to b = 0.
GaussianInteger n_column(const DgGroup& g, int i, std::uint32_t character);
/// g(N_i) for every g through the transform.
std::vector<Gauss64> n_column_all(const DgGroup& g, int i, Exec exec = Exec::parallel);

}  // namespace dgscheme
