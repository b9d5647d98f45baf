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

#include <optional>
#include <string>
#include <vector>

#include "dgscheme/dg_constructions.hpp"
#include "dgscheme/scheme.hpp"

namespace dgscheme {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

enum class Depth { fast, exhaustive };

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  double seconds = 0;
  Json detail = Json::object();
  /// Timings break byte-identical output, so they are opt-in.
  Json to_json(bool timings = false) const;
};

struct Report {
  int m = 0;
  Depth depth = Depth::fast;
  std::vector<CheckResult> checks;
  bool passed() const;
  Json to_json(bool timings = false) const;
};

/// Throws std::invalid_argument unless m is 3 or 5; exhaustive
/// depth only for m = 3.
void validate_run(int m, Depth depth);

CheckResult check_kerdock_weights(int m);
CheckResult check_dg_weights(int m);
/// Intersection numbers (when the group is small enough), ten dual classes,
/// P and Q against the reference tables, P Q = |G| I.
CheckResult check_ten_class_scheme(const DgAnalysis& a, Depth depth);
CheckResult check_dual_sets(const DgAnalysis& a);
CheckResult check_character_table(const DgAnalysis& a, Depth depth);
CheckResult check_fusions(const DgAnalysis& a);
CheckResult check_quotients(const DgAnalysis& a);
CheckResult check_kerdock_scheme(const DgAnalysis& a);
CheckResult check_counting_lemmas(int m);
CheckResult check_sum_lemmas(const DgAnalysis& a, Depth depth);
CheckResult check_gray_image(const DgAnalysis& a);
CheckResult check_properties(const DgAnalysis& a);

/// The 7-class fused P of the ten-class scheme, rows in reference order.
ExactMatrix seven_class_P(const DgAnalysis& a);
/// Every admissible grouping of the quotient scheme's columns, with the
/// groupings whose fused P reproduces the 4-class reference.
struct QuotientFusionSearch {
  std::vector<Grouping> admissible;
  std::vector<Grouping> matching;
};
QuotientFusionSearch search_quotient_fusions(const DgAnalysis& a);

Report full_report(const DgAnalysis& a, Depth depth);

/// Schemes selectable by name: nine (ten-class), seven (its fusion),
/// kerdock, quotient, quotient-fusion, gray (m = 3), lee.
const std::vector<std::string>& scheme_names();

struct SchemeSelection {
  std::string name;
  GroupShape shape;
  Partition partition;
  std::optional<ReferenceScheme> reference;
  bool compare_Q = true;  // false where the printed Q is known to be garbled
  int m = 0;
};
/// Throws std::invalid_argument on an unknown name or gray at m != 3.
SchemeSelection select_scheme(const DgAnalysis& a, const std::string& name);

/// Intersection numbers (small groups only), dual classes, P with rows in
/// reference order where one exists, Q, eigenmatrix checks.
struct SchemeVerification {
  CheckResult result;
  DualResult dual;
  std::optional<ExactMatrix> Q;
};
SchemeVerification verify_scheme(const SchemeSelection& s);

}  // namespace dgscheme
