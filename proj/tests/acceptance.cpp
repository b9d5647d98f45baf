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

// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dgscheme/codes.hpp"
#include "dgscheme/exp_sums.hpp"
#include "dgscheme/report.hpp"

using namespace dgscheme;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  int id;
  std::string text;
  double limit;  // seconds
  std::function<std::string()> body;  // empty string on success
};

std::string need(bool cond, const std::string& what) { return cond ? "" : what; }

std::string all_of(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts)
    if (!p.empty()) s += (s.empty() ? "" : "; ") + p;
  return s;
}

// Lemma entries in a check's detail, by id.
const Json* lemma_json(const CheckResult& c, const std::string& id) {
  for (const auto& l : c.detail["lemmas"])
    if (l["lemma_id"] == id) return &l;
  return nullptr;
}

}  // namespace

int main() {
  std::unique_ptr<DgAnalysis> a3, a5;
  double a5_seconds = 0;
  auto A3 = [&]() -> const DgAnalysis& {
    if (!a3) a3 = std::make_unique<DgAnalysis>(3);
    return *a3;
  };
  auto A5 = [&]() -> const DgAnalysis& {
    if (!a5) {
      const auto t = Clock::now();
      a5 = std::make_unique<DgAnalysis>(5);
      a5_seconds = since(t);
    }
    return *a5;
  };

  std::vector<Criterion> criteria{
      {1, "Kerdock Lee weights at m=3 and m=5", 1.0,
       [] {
         const WeightDistribution m3{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
         const auto w3 = weight_distribution(GaloisRing(3), CodeFamily::kerdock);
         const auto w5 = weight_distribution(GaloisRing(5), CodeFamily::kerdock);
         const WeightDistribution m5{{0, 1}, {28, 1984}, {32, 126}, {36, 1984}, {64, 1}};
         return all_of({need(w3 == m3, "m=3 table"), need(w5 == m5, "m=5 table"),
                        need(w5 == kerdock_formula(5), "m=5 formula")});
       }},
      {2, "DG Lee weights, printed mid-weight count flagged, denominator 3 at m=3 and m=5", 30.0,
       [] {
         const auto t = Clock::now();
         const auto w3 = weight_distribution(GaloisRing(3), CodeFamily::delsarte_goethals);
         const WeightDistribution want{{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}};
         const double t3 = since(t);
         const auto c3 = check_dg_weights(3), c5 = check_dg_weights(5);
         const auto& pf = c3.detail["printed_formula"];
         return all_of({need(w3 == want, "m=3 table"), need(t3 < 1.0, "m=3 over 1 s"), need(c3.passed, "m=3 check"),
                        need(c5.passed, "m=5 check"), need(pf["value"] == 672 && pf["enumerated"] == 448, "672 vs 448"),
                        need(c5.detail["total"] == 131072, "m=5 total")});
       }},
      {3, "Ten-class scheme: 100 intersection pairs at m=3, ten dual classes, P and Q at s=4 and s=8", 300.0,
       [&] {
         const auto c3 = check_ten_class_scheme(A3(), Depth::exhaustive);
         const auto t = Clock::now();
         const auto c5 = check_ten_class_scheme(A5(), Depth::fast);
         const double e2e = a5_seconds + since(t);
         const auto ok = [](const CheckResult& c) {
           return c.passed && c.detail["distinct_rows"] == 10 && c.detail["P_equals_reference"] == true &&
                  c.detail["Q_equals_reference"] == true &&
                  c.detail["eigenmatrix_checks"]["pq_is_scaled_identity"] == true;
         };
         return all_of({need(ok(c3), "m=3"), need(c3.detail["intersection_numbers"] == "constant for all 100 pairs", "m=3 pairs"),
                        need(ok(c5), "m=5"), need(e2e < 300.0, "m=5 over 5 min")});
       }},
      {4, "E_0..E_9 equal the dual classes at m=3 and m=5", 300.0,
       [&] {
         const auto c3 = check_dual_sets(A3()), c5 = check_dual_sets(A5());
         const std::vector<std::uint64_t> sizes{1, 7, 16, 112, 120, 840, 560, 336, 35, 21};
         return all_of({need(c3.passed && c5.passed, "set equality"), need(A3().E.sizes() == sizes, "m=3 sizes")});
       }},
      {5, "Character table cells, N = chi T, det T at s=4,8,16", 300.0,
       [&] {
         const auto c3 = check_character_table(A3(), Depth::exhaustive), c5 = check_character_table(A5(), Depth::fast);
         return all_of({need(c3.passed, "m=3"), need(c5.passed, "m=5"), need(c3.detail["det_T"].size() == 3, "det count")});
       }},
      {6, "Seven-class fusion, quotient by <(2,0,0)>, four-class fusion of the quotient", 300.0,
       [&] {
         const auto f3 = check_fusions(A3()), q3 = check_quotients(A3());
         const auto f5 = check_fusions(A5()), q5 = check_quotients(A5());
         return all_of({need(f3.passed && f3.detail["unique"] == true, "m=3 fusion"), need(f5.passed, "m=5 fusion"),
                        need(q3.passed && q3.detail["quotient_order"] == 1024, "m=3 quotient"),
                        need(q3.detail["scheme"]["P"].size() == 6, "6x6 P"), need(q5.passed, "m=5 quotient")});
       }},
      {7, "Kerdock four-class scheme on 256 and 4096 elements", 300.0,
       [&] {
         const auto c3 = check_kerdock_scheme(A3()), c5 = check_kerdock_scheme(A5());
         return all_of({need(c3.passed && c3.detail["elements"] == 256, "m=3"),
                        need(c5.passed && c5.detail["elements"] == 4096, "m=5")});
       }},
      {8, "Counting lemmas exhaustive at m=3 and m=5", 300.0,
       [] {
         std::string err;
         for (int m : {3, 5}) {
           const auto c = check_counting_lemmas(m);
           const std::uint64_t q = 1u << m;
           const Json census{(q + 1) / 3, q / 2 - 1, (q - 2) / 6};
           err += all_of({need(c.passed, "m=" + std::to_string(m)), need(c.detail["census"] == census, "census")});
           for (auto p : all_multiset_patterns()) {
             const auto* l = lemma_json(c, "multiset " + pattern_name(p));
             err += need(l && (*l)["passed"] == true, "pattern " + pattern_name(p));
           }
         }
         return err;
       }},
      {9, "xi, eta, E and F oracles; brute force at every (c, d) for m=3", 300.0,
       [&] {
         const auto c3 = check_sum_lemmas(A3(), Depth::exhaustive), c5 = check_sum_lemmas(A5(), Depth::fast);
         const auto* e3 = lemma_json(c3, "eta_identities");
         const auto* e5 = lemma_json(c5, "eta_identities");
         const auto* b3 = lemma_json(c3, "E_F_brute_force");
         return all_of({need(c3.passed, "m=3"), need(c5.passed, "m=5"),
                        need(e3 && (*e3)["cases_checked"] == 64, "64 eta cases"),
                        need(e5 && (*e5)["cases_checked"] == 1024, "1024 eta cases"),
                        need(b3 && (*b3)["cases_checked"] == 64 * 8, "every (c, d)")});
       }},
      {10, "Gray image at m=3 is a scheme with a different P", 10.0,
       [&] {
         const auto c = check_gray_image(A3());
         return need(c.passed && c.detail["P_differs_from_ten_class_P"] == true, "gray");
       }},
      {11, "Fourier inversion, row 0, integrality, symmetric partitions", 300.0,
       [&] {
         const auto c3 = check_properties(A3()), c5 = check_properties(A5());
         return all_of({need(c3.passed, "m=3"), need(c5.passed, "m=5")});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t = Clock::now();
    std::string err;
    try {
      err = c.body();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double s = since(t);
    if (err.empty() && s > c.limit) err = "over time limit";
    if (!err.empty()) ++failed;
    std::printf("criterion %2d: %s (%.2f s) %s%s%s\n", c.id, err.empty() ? "PASS" : "FAIL", s, c.text.c_str(),
                err.empty() ? "" : " -- ", err.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
