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

#include "dgscheme/dg_constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "dgscheme/codes.hpp"
#include "dgscheme/exp_sums.hpp"
#include "dgscheme/kernels.hpp"

namespace dgscheme {

namespace {

constexpr std::uint16_t kUnset = 0xffff;

using R = GaloisRing;

// Membership bitmaps of the ten E sets.
struct SetFamily {
  explicit SetFamily(std::uint32_t n) : in(10, std::vector<std::uint8_t>(n, 0)) {}
  std::vector<std::vector<std::uint8_t>> in;
};

}  // namespace

Partition build_R_partition(const DgGroup& g) {
  const std::int64_t q = g.q(), s = g.s();
  Partition p{10, std::vector<std::uint16_t>(g.order())};
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const std::int64_t v = g.big_s(h);
    const bool k = g.element(h).b.is_zero();
    int label;
    if (v == 2 * q) label = 0;
    else if (v == 2 * s) label = 1;
    else if (v == s) label = k ? 2 : 3;
    else if (v == 0) label = k ? 4 : 5;
    else if (v == -s) label = k ? 7 : 6;
    else if (v == -2 * s) label = 8;
    else if (v == -2 * q) label = 9;
    else throw std::logic_error("build_R_partition: S value " + std::to_string(v) + " is not admissible");
    p.labels[h] = static_cast<std::uint16_t>(label);
  }
  return p;
}

Partition build_E_partition(const DgGroup& g) {
  const auto& ring = g.ring();
  const auto& f = ring.field();
  const auto& T = ring.teichmuller();
  const std::uint32_t q = g.q();
  SetFamily sets(g.order());
  auto mark = [&](int j, Z4 u, RingElement a, FieldElement r) { sets.in[j][g.index({static_cast<Z4>(u & 3), a, r})] = 1; };
  auto cube_of = [&](RingElement X) { return f.cube(R::reduce(X)); };

  // E0, E1
  mark(0, 0, ring.zero(), f.zero());
  for (std::uint32_t r = 1; r < q; ++r) mark(1, 0, ring.zero(), {r});

  // E2, E3
  for (const auto X : T) {
    mark(2, 1, X, cube_of(X));
    mark(2, 3, R::neg(X), cube_of(X));
  }
  for (const auto X : T)
    for (std::uint32_t r = 0; r < q; ++r) {
      for (const auto& [u, a] : {std::pair<Z4, RingElement>{1, X}, {3, R::neg(X)}}) {
        const auto idx = g.index({u, a, {r}});
        if (!sets.in[2][idx]) sets.in[3][idx] = 1;
      }
    }

  // E4, E5
  for (const auto X : T)
    for (const auto Y : T) {
      const FieldElement c = BinaryField::add(cube_of(X), cube_of(Y));
      if (X != Y) mark(4, 0, R::add(R::neg(X), Y), c);
      mark(4, 2, R::add(X, Y), c);
      mark(4, 2, R::neg(R::add(X, Y)), c);
    }
  for (std::uint32_t code = 0; code < ring.size(); ++code) {
    const RingElement S = ring.from_code(code);
    for (std::uint32_t r = 0; r < q; ++r) {
      for (Z4 u : {Z4{0}, Z4{2}}) {
        if (u == 0 && S.is_even()) continue;
        const auto idx = g.index({u, S, {r}});
        if (!sets.in[4][idx]) sets.in[5][idx] = 1;
      }
    }
  }

  // E6 and E7 share their (u, a) parts. One (u, a) comes with several cube
  // sums, so E7 is read as those parts times F_q, minus E6.
  std::vector<std::uint8_t> part(static_cast<std::size_t>(4) * ring.size(), 0);
  auto instance = [&](Z4 u, RingElement a, FieldElement sigma) {
    mark(6, u, a, sigma);
    part[static_cast<std::size_t>(u) * ring.size() + ring.code(a)] = 1;
  };
  for (const auto X : T)
    for (const auto Y : T) {
      if (X == Y) continue;
      instance(1, R::sub(R::twice(X), Y), cube_of(Y));
      instance(3, R::add(R::twice(X), Y), cube_of(Y));
    }
  for (const auto X : T)
    for (const auto Y : T) {
      if (X == Y) continue;
      for (const auto Z : T) {
        if (Z == X || Z == Y) continue;
        const FieldElement c = BinaryField::add(BinaryField::add(cube_of(X), cube_of(Y)), cube_of(Z));
        const RingElement xyz = R::add(R::add(X, Y), Z), xy_z = R::sub(R::add(X, Y), Z);
        instance(1, R::neg(xyz), c);
        instance(1, xy_z, c);
        instance(3, xyz, c);
        instance(3, R::neg(xy_z), c);
      }
    }
  for (Z4 u : {Z4{1}, Z4{3}})
    for (std::uint32_t code = 0; code < ring.size(); ++code) {
      if (!part[static_cast<std::size_t>(u) * ring.size() + code]) continue;
      for (std::uint32_t r = 0; r < q; ++r) {
        const auto idx = g.index({u, ring.from_code(code), {r}});
        if (!sets.in[6][idx]) sets.in[7][idx] = 1;
      }
    }

  // E8 from the quadruple histograms, E9 the rest of {(0, 2X, r)}.
  using kernels::TupleTerm;
  const std::vector<TupleTerm> plus4{{1, true}, {1, true}, {1, true}, {1, true}};
  const std::vector<TupleTerm> mixed{{1, true}, {1, true}, {-1, true}, {-1, true}};
  const auto h1 = kernels::tuple_histogram_parallel(ring, plus4);
  const auto h2 = kernels::tuple_histogram_parallel(ring, mixed);
  for (std::size_t k = 1; k < T.size(); ++k) {
    const RingElement two_x = R::twice(T[k]);
    const std::size_t base = static_cast<std::size_t>(ring.code(two_x)) * q;
    for (std::uint32_t r = 0; r < q; ++r) {
      if (h1[base + r] || h2[base + r]) mark(8, 0, two_x, {r});
      else mark(9, 0, two_x, {r});
    }
  }

  Partition p{10, std::vector<std::uint16_t>(g.order(), kUnset)};
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    for (int j = 0; j < 10; ++j) {
      if (!sets.in[j][h]) continue;
      if (p.labels[h] != kUnset)
        throw std::logic_error("build_E_partition: element " + element_json(g.shape(), h).dump() + " lies in E" +
                               std::to_string(p.labels[h]) + " and E" + std::to_string(j));
      p.labels[h] = static_cast<std::uint16_t>(j);
    }
    if (p.labels[h] == kUnset)
      throw std::logic_error("build_E_partition: element " + element_json(g.shape(), h).dump() + " is in no set");
  }
  return p;
}

Partition build_code_relations(const DgGroup& g, CodeRelations kind) {
  const auto& ring = g.ring();
  const int q = static_cast<int>(g.q()), s = static_cast<int>(g.s()), h = s / 2;
  const bool kerdock = kind == CodeRelations::kerdock4;
  const std::uint32_t n = kerdock ? g.kerdock_shape().order() : g.order();
  const int classes = kind == CodeRelations::kerdock4 ? 5 : kind == CodeRelations::seven ? 8
                      : kind == CodeRelations::nine   ? 10
                                                      : 7;
  Partition p{classes, std::vector<std::uint16_t>(n)};
  for (std::uint32_t x = 0; x < n; ++x) {
    const GroupElement e = g.element(kerdock ? g.from_kerdock_index(x) : x);
    const int w = lee_weight(codeword(ring, e));
    const bool in_k = is_kerdock(e);
    int label = -1;
    switch (kind) {
      case CodeRelations::kerdock4:
        label = w == 0 ? 0 : w == q - h ? 1 : w == q ? 2 : w == q + h ? 3 : w == 2 * q ? 4 : -1;
        break;
      case CodeRelations::seven:
        label = w == 0 ? 0 : w == q - s ? 1 : w == q - h ? 2 : w == q ? (in_k ? 3 : 4)
              : w == q + h ? 5 : w == q + s ? 6 : w == 2 * q ? 7 : -1;
        break;
      case CodeRelations::nine:
        label = w == 0 ? 0 : w == q - s ? 1 : w == q - h ? (in_k ? 2 : 3) : w == q ? (in_k ? 4 : 5)
              : w == q + h ? (in_k ? 7 : 6) : w == q + s ? 8 : w == 2 * q ? 9 : -1;
        break;
      case CodeRelations::lee_only:
        label = w == 0 ? 0 : w == q - s ? 1 : w == q - h ? 2 : w == q ? 3
              : w == q + h ? 4 : w == q + s ? 5 : w == 2 * q ? 6 : -1;
        break;
    }
    if (label < 0) throw std::logic_error("build_code_relations: unexpected Lee weight " + std::to_string(w));
    p.labels[x] = static_cast<std::uint16_t>(label);
  }
  return p;
}

ExactMatrix matrix_T(int m) { return matrix_T_symbolic().evaluate(s_value(m)); }
ExactMatrix frak_T(int m) { return character_table_symbolic().evaluate(q_value(m)); }
ExactMatrix reference_P(ReferenceScheme which, int m) { return reference_eigenmatrices(which).P.evaluate(s_value(m)); }
ExactMatrix reference_Q(ReferenceScheme which, int m) { return reference_eigenmatrices(which).Q.evaluate(s_value(m)); }

DgAnalysis::DgAnalysis(int m, Exec exec) : group(m, exec) {
  R = build_R_partition(group);
  E = build_E_partition(group);
  dual = dual_partition(group.shape(), R, exec);
  representatives.assign(10, 0);
  std::vector<bool> have(10, false);
  for (std::uint32_t h = 0; h < group.order(); ++h)
    if (!have[E.labels[h]]) {
      have[E.labels[h]] = true;
      representatives[E.labels[h]] = h;
    }
  if (!dual.is_scheme) {
    dual_match_certificate = {{"kind", "not_a_scheme"}, {"detail", dual.certificate}};
    return;
  }
  // Dual class k corresponds to E_j when every member of one lies in the other.
  std::vector<int> e_of(dual.dual.class_count, -1);
  for (std::uint32_t h = 0; h < group.order(); ++h) {
    const int k = dual.dual.labels[h], j = E.labels[h];
    if (e_of[k] < 0) e_of[k] = j;
    if (e_of[k] != j) {
      dual_match_certificate = {{"kind", "dual_class_splits_E"}, {"dual_class", k}, {"E_classes", {e_of[k], j}},
                                {"element", element_json(group.shape(), h)}};
      return;
    }
  }
  std::vector<int> order(10, -1);
  for (int k = 0; k < 10; ++k) {
    if (order[e_of[k]] >= 0) {
      dual_match_certificate = {{"kind", "E_class_splits"}, {"E_class", e_of[k]}};
      return;
    }
    order[e_of[k]] = k;
  }
  reorder_dual(dual, order);
  dual_matches_E = true;
  Q = second_eigenmatrix(dual.P, group.order());
}

ExactMatrix n_table_direct(const DgAnalysis& a) {
  ExactMatrix out(10, 10);
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) {
      const GaussianInteger v = n_column(a.group, i, a.representatives[j]);
      if (!v.is_real()) throw std::logic_error("n_table_direct: non-real column value");
      out(j, i) = v.re;
    }
  return out;
}

ExactMatrix character_rows_direct(const DgAnalysis& a) {
  ExactMatrix out(10, 10);
  for (int j = 0; j < 10; ++j) {
    const auto row = character_row(a.group.shape(), a.R, a.representatives[j]);
    for (int i = 0; i < 10; ++i) {
      if (!row[i].is_real()) throw std::logic_error("character_rows_direct: non-real character value");
      out(j, i) = row[i].re;
    }
  }
  return out;
}

GrayImage gray_image(const DgGroup& g, const Partition& R) {
  if (2 * g.q() > 64) throw std::invalid_argument("gray_image: word length above 64");
  GrayImage out;
  std::vector<std::uint64_t> word(g.order());
  std::unordered_map<std::uint64_t, std::uint32_t> index_of;
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const auto bits = gray_map(codeword(g.ring(), g.element(h)));
    std::uint64_t w = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) w |= static_cast<std::uint64_t>(bits[k]) << k;
    word[h] = w;
    index_of.emplace(w, h);
  }
  if (index_of.size() != g.order()) return out;  // Gray map not injective on the code; cannot happen
  out.linear = true;
  for (std::uint32_t x = 0; x < g.order() && out.linear; ++x)
    for (std::uint32_t y = x; y < g.order(); ++y)
      if (!index_of.count(word[x] ^ word[y])) {
        out.linear = false;
        break;
      }
  if (!out.linear) return out;
  // XOR basis, one pivot per leading bit.
  std::vector<std::uint64_t> basis;
  std::uint64_t pivot[64] = {};
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    std::uint64_t w = word[h];
    for (int bit = 63; bit >= 0 && w; --bit) {
      if (!(w >> bit & 1)) continue;
      if (!pivot[bit]) {
        pivot[bit] = w;
        basis.push_back(word[h]);
        break;
      }
      w ^= pivot[bit];
    }
  }
  out.dimension = static_cast<int>(basis.size());
  std::vector<Z4> w2(static_cast<std::size_t>(out.dimension) * out.dimension, 0);
  for (int k = 0; k < out.dimension; ++k) w2[k * out.dimension + k] = 2;
  out.shape.emplace(0, out.dimension, std::move(w2));
  out.partition.class_count = R.class_count;
  out.partition.labels.assign(out.shape->order(), 0);
  for (std::uint32_t x = 0; x < out.shape->order(); ++x) {
    std::uint64_t w = 0;
    for (int k = 0; k < out.dimension; ++k)
      if (x >> k & 1) w ^= basis[k];
    out.partition.labels[x] = R.labels[index_of.at(w)];
  }
  return out;
}

bool equal_up_to_permutation(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.cols() == 0) return false;
  const std::size_t n = a.cols();
  auto sorted_col = [](const ExactMatrix& m, std::size_t c) {
    std::vector<mpq_class> v;
    for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<std::size_t>> candidates(n);
  candidates[0] = {0};
  for (std::size_t ca = 1; ca < n; ++ca) {
    const auto va = sorted_col(a, ca);
    for (std::size_t cb = 1; cb < n; ++cb)
      if (sorted_col(b, cb) == va) candidates[ca].push_back(cb);
  }
  std::vector<std::size_t> perm(n, 0);
  std::vector<bool> used(n, false);
  used[0] = true;
  // Depth-first over column assignments; rows matched at the leaves.
  auto search = [&](auto&& self, std::size_t ca) -> bool {
    if (ca == n) {
      std::vector<std::size_t> inv(n);
      for (std::size_t c = 0; c < n; ++c) inv[perm[c]] = c;
      return match_rows(a.permute_cols(inv), b).has_value();
    }
    for (auto cb : candidates[ca]) {
      if (used[cb]) continue;
      used[cb] = true;
      perm[ca] = cb;
      if (self(self, ca + 1)) return true;
      used[cb] = false;
    }
    return false;
  };
  return search(search, 1);
}

}  // namespace dgscheme
