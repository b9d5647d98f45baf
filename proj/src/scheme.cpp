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

#include "dgscheme/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dgscheme/kernels.hpp"

namespace dgscheme {

std::vector<std::uint64_t> Partition::sizes() const {
  std::vector<std::uint64_t> s(class_count, 0);
  for (auto l : labels) ++s[l];
  return s;
}

std::vector<std::uint32_t> Partition::members(int j) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < labels.size(); ++g)
    if (labels[g] == j) out.push_back(g);
  return out;
}

Partition relabel(const Partition& p, std::span<const int> order) {
  std::vector<std::uint16_t> inv(p.class_count);
  for (std::size_t k = 0; k < order.size(); ++k) inv[order[k]] = static_cast<std::uint16_t>(k);
  Partition out{p.class_count, p.labels};
  for (auto& l : out.labels) l = inv[l];
  return out;
}

bool is_symmetric(const GroupShape& shape, const Partition& p) {
  for (std::uint32_t g = 0; g < shape.order(); ++g)
    if (p.labels[g] != p.labels[shape.neg(g)]) return false;
  return true;
}

std::optional<Json> validate_partition(const GroupShape& shape, const Partition& p) {
  if (p.labels.size() != shape.order()) return Json{{"kind", "label_count"}, {"expected", shape.order()}, {"found", p.labels.size()}};
  if (p.class_count < 1) return Json{{"kind", "class_count"}, {"found", p.class_count}};
  for (std::uint32_t g = 0; g < shape.order(); ++g) {
    if (p.labels[g] >= p.class_count) return Json{{"kind", "label_range"}, {"element", element_json(shape, g)}};
    if ((g == 0) != (p.labels[g] == 0)) return Json{{"kind", "identity_class"}, {"element", element_json(shape, g)}};
    if (p.labels[g] != p.labels[shape.neg(g)])
      return Json{{"kind", "not_symmetric"}, {"element", element_json(shape, g)}, {"label", p.labels[g]},
                  {"label_of_negative", p.labels[shape.neg(g)]}};
  }
  const auto s = p.sizes();
  for (int j = 0; j < p.class_count; ++j)
    if (s[j] == 0) return Json{{"kind", "empty_class"}, {"class", j}};
  return std::nullopt;
}

std::vector<GaussianInteger> character_row(const GroupShape& shape, const Partition& p, std::uint32_t g) {
  const int n = shape.coordinate_count();
  const auto& w = shape.pairing_matrix();
  const auto gd = shape.digits(g);
  // Coefficients of <g, .> in each coordinate.
  std::vector<int> lin(n, 0);
  for (int k = 0; k < n; ++k) {
    int acc = 0;
    for (int j = 0; j < n; ++j) acc += gd[j] * w[j * n + k];
    lin[k] = acc & 3;
  }
  std::vector<std::array<long, 4>> counts(p.class_count, {0, 0, 0, 0});
  std::vector<Z4> hd(n);
  for (std::uint32_t h = 0; h < shape.order(); ++h) {
    shape.digits_into(h, hd);
    int e = 0;
    for (int k = 0; k < n; ++k) e += lin[k] * hd[k];
    ++counts[p.labels[h]][e & 3];
  }
  std::vector<GaussianInteger> row;
  row.reserve(p.class_count);
  for (const auto& c : counts) row.emplace_back(c[0] - c[2], c[1] - c[3]);
  return row;
}

std::vector<Gauss64> character_sums(const GroupShape& shape, std::span<const Gauss64> f, Exec exec) {
  if (f.size() != shape.order()) throw std::invalid_argument("character_sums: input has wrong length");
  unsigned __int128 l1 = 0;
  for (const auto& z : f) l1 += static_cast<unsigned __int128>(z.re < 0 ? -z.re : z.re) + (z.im < 0 ? -z.im : z.im);
  if (l1 >= (static_cast<unsigned __int128>(1) << 62)) throw std::overflow_error("character_sums: input too large for the 64-bit kernel");
  std::vector<Gauss64> y(f.begin(), f.end());
  if (exec == Exec::parallel) kernels::transform_parallel(shape, y);
  else kernels::transform_serial(shape, y);
  std::vector<Gauss64> out(shape.order());
  for (std::uint32_t g = 0; g < shape.order(); ++g) out[g] = y[shape.dual_coordinates(g)];
  return out;
}

std::vector<Gauss64> character_sums(const GroupShape& shape, std::span<const std::int64_t> f, Exec exec) {
  std::vector<Gauss64> z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) z[i] = {f[i], 0};
  return character_sums(shape, z, exec);
}

DualResult dual_partition(const GroupShape& shape, const Partition& p, Exec exec) {
  DualResult r;
  if (auto bad = validate_partition(shape, p)) {
    r.certificate = {{"kind", "invalid_partition"}, {"detail", *bad}};
    return r;
  }
  const int c = p.class_count;
  const std::uint32_t n = shape.order();
  std::vector<std::vector<std::int64_t>> values(c);
  for (int j = 0; j < c; ++j) {
    std::vector<std::int64_t> ind(n, 0);
    for (std::uint32_t h = 0; h < n; ++h) ind[h] = p.labels[h] == j;
    const auto F = character_sums(shape, ind, exec);
    values[j].resize(n);
    for (std::uint32_t g = 0; g < n; ++g) {
      if (F[g].im != 0) {
        r.certificate = {{"kind", "non_real_character_sum"}, {"class", j}, {"character", element_json(shape, g)}};
        return r;
      }
      values[j][g] = F[g].re;
    }
  }
  std::map<std::vector<std::int64_t>, int> ids;
  std::vector<int> row_of(n);
  std::vector<std::uint32_t> first;
  std::vector<std::uint64_t> count;
  std::vector<std::int64_t> row(c);
  for (std::uint32_t g = 0; g < n; ++g) {
    for (int j = 0; j < c; ++j) row[j] = values[j][g];
    auto [it, inserted] = ids.try_emplace(row, static_cast<int>(first.size()));
    if (inserted) {
      first.push_back(g);
      count.push_back(0);
    }
    row_of[g] = it->second;
    ++count[it->second];
  }
  r.distinct_rows = static_cast<int>(first.size());
  if (r.distinct_rows != c) {
    // Two characters with different rows; the first class where they differ
    // is a column on which no consistent grouping of characters exists.
    Json rows = Json::array();
    std::uint32_t g2 = first.size() > 1 ? first[1] : 0;
    int col = 0;
    for (int j = 0; j < c; ++j)
      if (values[j][first[0]] != values[j][g2]) {
        col = j;
        break;
      }
    for (std::size_t k = 0; k < std::min<std::size_t>(first.size(), 32); ++k) {
      Json rj = Json::array();
      for (int j = 0; j < c; ++j) rj.push_back(values[j][first[k]]);
      rows.push_back({{"character", element_json(shape, first[k])}, {"multiplicity", count[k]}, {"row", rj}});
    }
    r.certificate = {{"kind", "dual_row_count"},
                     {"expected", c},
                     {"found", r.distinct_rows},
                     {"witness_characters", {element_json(shape, first[0]), element_json(shape, g2)}},
                     {"differing_class", col},
                     {"rows", rows}};
    return r;
  }
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  auto row_vec = [&](int id) {
    std::vector<std::int64_t> v(c);
    for (int j = 0; j < c; ++j) v[j] = values[j][first[id]];
    return v;
  };
  std::sort(order.begin() + 1, order.end(), [&](int a, int b) {
    if (count[a] != count[b]) return count[a] < count[b];
    return row_vec(a) < row_vec(b);
  });
  std::vector<std::uint16_t> rank(c);
  for (int k = 0; k < c; ++k) rank[order[k]] = static_cast<std::uint16_t>(k);
  r.is_scheme = true;
  r.dual.class_count = c;
  r.dual.labels.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) r.dual.labels[g] = rank[row_of[g]];
  r.P = ExactMatrix(c, c);
  r.representatives.resize(c);
  for (int k = 0; k < c; ++k) {
    r.representatives[k] = first[order[k]];
    for (int i = 0; i < c; ++i) r.P(k, i) = mpz_class(static_cast<long>(values[i][first[order[k]]]));
  }
  return r;
}

void reorder_dual(DualResult& r, std::span<const int> order) {
  std::vector<std::size_t> o(order.begin(), order.end());
  r.P = r.P.permute_rows(o);
  r.dual = relabel(r.dual, order);
  std::vector<std::uint32_t> reps(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) reps[k] = r.representatives[order[k]];
  r.representatives = reps;
}

std::optional<std::vector<int>> match_rows(const ExactMatrix& computed, const ExactMatrix& reference) {
  if (computed.rows() != reference.rows() || computed.cols() != reference.cols()) return std::nullopt;
  std::vector<int> order(reference.rows(), -1);
  std::vector<bool> used(computed.rows(), false);
  for (std::size_t k = 0; k < reference.rows(); ++k) {
    const auto want = reference.row(k);
    for (std::size_t r = 0; r < computed.rows(); ++r) {
      if (!used[r] && computed.row(r) == want) {
        order[k] = static_cast<int>(r);
        used[r] = true;
        break;
      }
    }
    if (order[k] < 0) return std::nullopt;
  }
  return order;
}

std::optional<ExactMatrix> second_eigenmatrix(const ExactMatrix& P, const mpz_class& points) {
  auto inv = P.inverse();
  if (!inv) return std::nullopt;
  return inv->scaled(mpq_class(points));
}

EigenChecks check_eigenmatrices(const ExactMatrix& P, const ExactMatrix& Q, const mpz_class& points,
                                std::span<const std::uint64_t> sizes, std::span<const std::uint64_t> dual_sizes) {
  EigenChecks c;
  if (!P.square() || !Q.square() || P.rows() != Q.rows()) return c;
  c.pq_is_scaled_identity = (P * Q) == ExactMatrix::identity(P.rows(), mpq_class(points));
  c.p_integral = P.is_integral();
  c.q_integral = Q.is_integral();
  auto row0 = [](const ExactMatrix& m, std::span<const std::uint64_t> want) {
    if (want.size() != m.cols()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
      if (m(0, i) != mpq_class(mpz_class(std::to_string(want[i])))) return false;
    return true;
  };
  c.p_row0_is_sizes = row0(P, sizes);
  c.q_row0_is_dual_sizes = row0(Q, dual_sizes);
  return c;
}

IntersectionResult intersection_numbers(const GroupShape& shape, const Partition& p, Exec exec) {
  if (shape.order() > kIntersectionGuard)
    throw std::length_error("intersection_numbers: group too large for the brute-force check; use the character criterion");
  const int c = p.class_count;
  const auto counts = exec == Exec::parallel ? kernels::intersection_counts_parallel(shape, p.labels, c)
                                             : kernels::intersection_counts_serial(shape, p.labels, c);
  IntersectionResult r;
  r.classes = c;
  r.p.assign(static_cast<std::size_t>(c) * c * c, 0);
  const std::size_t cc = static_cast<std::size_t>(c) * c;
  std::vector<std::int64_t> rep(c, -1);
  for (std::uint32_t g = 0; g < shape.order(); ++g) {
    const int k = p.labels[g];
    if (rep[k] < 0) {
      rep[k] = g;
      for (std::size_t ij = 0; ij < cc; ++ij) r.p[ij * c + k] = counts[g * cc + ij];
      continue;
    }
    const std::uint32_t* a = counts.data() + rep[k] * cc;
    const std::uint32_t* b = counts.data() + g * cc;
    for (std::size_t ij = 0; ij < cc; ++ij) {
      if (a[ij] != b[ij]) {
        r.certificate = {{"kind", "intersection_number"},
                         {"i", ij / c},
                         {"j", ij % c},
                         {"k", k},
                         {"element_1", element_json(shape, static_cast<std::uint32_t>(rep[k]))},
                         {"count_1", a[ij]},
                         {"element_2", element_json(shape, g)},
                         {"count_2", b[ij]}};
        return r;
      }
    }
  }
  r.constant = true;
  return r;
}

namespace {

bool valid_grouping(const Grouping& g, std::size_t n) {
  if (g.empty() || g[0] != std::vector<int>{0}) return false;
  std::vector<int> seen(n, 0);
  for (const auto& grp : g) {
    if (grp.empty()) return false;
    for (int i : grp) {
      if (i < 0 || static_cast<std::size_t>(i) >= n || seen[i]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

}  // namespace

FusionResult fusion_check(const ExactMatrix& P, const Grouping& columns) {
  FusionResult r;
  if (!valid_grouping(columns, P.cols())) throw std::invalid_argument("fusion_check: grouping must partition the columns with {0} first");
  const std::size_t k = columns.size();
  std::map<std::vector<mpq_class>, int> ids;
  std::vector<std::vector<mpq_class>> sums;
  for (std::size_t row = 0; row < P.rows(); ++row) {
    std::vector<mpq_class> v(k, 0);
    for (std::size_t g = 0; g < k; ++g)
      for (int i : columns[g]) v[g] += P(row, i);
    auto [it, inserted] = ids.try_emplace(v, static_cast<int>(r.row_groups.size()));
    if (inserted) {
      r.row_groups.emplace_back();
      sums.push_back(v);
    }
    r.row_groups[it->second].push_back(static_cast<int>(row));
  }
  if (r.row_groups.size() != k) {
    Json rows = Json::array();
    for (std::size_t a = 0; a < r.row_groups.size(); ++a) {
      Json v = Json::array();
      for (const auto& x : sums[a]) v.push_back(exact_json(x));
      rows.push_back({{"rows", r.row_groups[a]}, {"block_row_sums", v}});
    }
    r.violation = {{"kind", "fusion"}, {"column_groups", columns}, {"expected_row_classes", k},
                   {"found_row_classes", r.row_groups.size()}, {"row_classes", rows}};
    return r;
  }
  r.admissible = true;
  r.P = ExactMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t g = 0; g < k; ++g) r.P(a, g) = sums[a][g];
  return r;
}

std::vector<Grouping> all_admissible_fusions(const ExactMatrix& P) {
  const int d = static_cast<int>(P.cols()) - 1;
  std::vector<Grouping> out;
  if (d < 1) return out;
  // Integer copy for speed; the rational path confirms each hit.
  const bool prefilter = P.is_integral();
  std::vector<std::vector<mpz_class>> Z(P.rows(), std::vector<mpz_class>(d + 1));
  for (std::size_t r = 0; r < P.rows(); ++r)
    for (int i = 0; i <= d; ++i) Z[r][i] = P(r, i).get_num() / P(r, i).get_den();
  std::vector<int> a(d, 0);  // restricted growth string over columns 1..d
  while (true) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::map<std::vector<mpz_class>, int> ids;
    for (std::size_t r = 0; prefilter && r < P.rows() && static_cast<int>(ids.size()) <= blocks + 1; ++r) {
      std::vector<mpz_class> v(blocks + 1, 0);
      v[0] = Z[r][0];
      for (int i = 1; i <= d; ++i) v[a[i - 1] + 1] += Z[r][i];
      ids.emplace(std::move(v), 0);
    }
    if (!prefilter || static_cast<int>(ids.size()) == blocks + 1) {
      Grouping g(blocks + 1);
      g[0] = {0};
      for (int i = 1; i <= d; ++i) g[a[i - 1] + 1].push_back(i);
      if (fusion_check(P, g).admissible) out.push_back(g);
    }
    // Next restricted growth string.
    int i = d - 1;
    while (i > 0) {
      const int mx = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= mx) break;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

Partition fuse_partition(const Partition& p, const Grouping& columns) {
  std::vector<std::uint16_t> map(p.class_count, 0);
  for (std::size_t g = 0; g < columns.size(); ++g)
    for (int i : columns[g]) map[i] = static_cast<std::uint16_t>(g);
  Partition out{static_cast<int>(columns.size()), p.labels};
  for (auto& l : out.labels) l = map[l];
  return out;
}

QuotientResult quotient_scheme(const GroupShape& shape, const Partition& p, std::uint32_t z) {
  if (z == 0) {
    Grouping merged(p.class_count);
    for (int j = 0; j < p.class_count; ++j) merged[j] = {j};
    return {shape, p, merged, true, Json::object()};
  }
  const int r = shape.z4_count(), s = shape.z2_count(), n = r + s;
  int k = -1;
  for (int j = 0; j < r; ++j)
    if (z == (1u << (n + j))) k = j;
  if (k < 0) throw std::invalid_argument("quotient_scheme: generator must be 0 or twice a Z4 unit vector");
  const auto& w = shape.pairing_matrix();
  for (int j = 0; j < n; ++j)
    if (j != k && w[k * n + j] != 0) throw std::invalid_argument("quotient_scheme: coordinate is coupled to others by the pairing");

  // New coordinates: the other Z4 coordinates, then k as Z2, then old Z2.
  std::vector<int> old_of;
  for (int j = 0; j < r; ++j)
    if (j != k) old_of.push_back(j);
  old_of.push_back(k);
  for (int j = r; j < n; ++j) old_of.push_back(j);
  std::vector<Z4> w2(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) w2[a * n + b] = w[old_of[a] * n + old_of[b]];
  w2[(r - 1) * n + (r - 1)] = static_cast<Z4>((2 * w[k * n + k]) & 3);
  GroupShape qshape(r - 1, s + 1, w2);

  // Union-find on labels along g ~ g + z.
  std::vector<int> parent(p.class_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> partner(p.class_count, -1);
  QuotientResult out{qshape, {}, {}, true, Json::object()};
  for (std::uint32_t g = 0; g < shape.order(); ++g) {
    const int a = p.labels[g], b = p.labels[shape.add(g, z)];
    if (partner[a] < 0) partner[a] = b;
    else if (partner[a] != b && out.clean) {
      out.clean = false;
      out.certificate = {{"kind", "inconsistent_push_forward"}, {"class", a}, {"partners", {partner[a], b}},
                         {"element", element_json(shape, g)}};
    }
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> comp(p.class_count, -1);
  for (int j = 0; j < p.class_count; ++j) {
    const int root = find(j);
    if (comp[root] < 0) {
      comp[root] = static_cast<int>(out.merged.size());
      out.merged.emplace_back();
    }
    comp[j] = comp[root];
    out.merged[comp[j]].push_back(j);
  }
  out.partition.class_count = static_cast<int>(out.merged.size());
  out.partition.labels.resize(qshape.order());
  std::vector<Z4> nd(n), od(n);
  for (std::uint32_t x = 0; x < qshape.order(); ++x) {
    qshape.digits_into(x, nd);
    for (int a = 0; a < n; ++a) od[old_of[a]] = nd[a];
    out.partition.labels[x] = static_cast<std::uint16_t>(comp[p.labels[shape.index(od)]]);
  }
  return out;
}

Json exact_json(const mpz_class& v) {
  static const mpz_class limit = mpz_class(1) << 53;
  if (abs(v) < limit) return v.get_si();
  return v.get_str();
}

Json exact_json(const mpq_class& v) {
  if (v.get_den() == 1) return exact_json(mpz_class(v.get_num()));
  return v.get_str();
}

Json shape_json(const GroupShape& shape) {
  const int n = shape.coordinate_count();
  Json w = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(shape.pairing_matrix()[a * n + b]);
    w.push_back(row);
  }
  return {{"z4", shape.z4_count()}, {"z2", shape.z2_count()}, {"order", shape.order()}, {"pairing", w}};
}

Json matrix_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exact_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json element_json(const GroupShape& shape, std::uint32_t g) {
  Json d = Json::array();
  for (auto x : shape.digits(g)) d.push_back(x);
  return d;
}

}  // namespace dgscheme
