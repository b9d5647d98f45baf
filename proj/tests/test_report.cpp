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

#include "doctest.h"

#include <stdexcept>

#include "dgscheme/report.hpp"

using namespace dgscheme;

TEST_CASE("run validation") {
  CHECK_NOTHROW(validate_run(3, Depth::exhaustive));
  CHECK_NOTHROW(validate_run(5, Depth::fast));
  for (int m : {1, 2, 4, 6, 7, 8, 9}) CHECK_THROWS_AS(validate_run(m, Depth::fast), std::invalid_argument);
  CHECK_THROWS_AS(validate_run(5, Depth::exhaustive), std::invalid_argument);
}

TEST_CASE("named schemes at m = 3") {
  const DgAnalysis a(3);
  CHECK_THROWS_AS(select_scheme(a, "ten"), std::invalid_argument);
  for (const auto& name : scheme_names()) {
    CAPTURE(name);
    const auto v = verify_scheme(select_scheme(a, name));
    // The Lee weights alone give 8 distinct rows for 7 classes.
    CHECK(v.result.passed == (name != "lee"));
    if (name == "lee") {
      CHECK(!v.dual.is_scheme);
      CHECK(!v.result.detail["scheme"]["certificates"].empty());
    }
  }
  const auto nine = verify_scheme(select_scheme(a, "nine"));
  CHECK(nine.dual.P == reference_P(ReferenceScheme::B, 3));
  CHECK(nine.result.detail["reference"]["Q_matches_reference"] == true);
  const auto seven = verify_scheme(select_scheme(a, "seven"));
  CHECK(seven.dual.P == seven_class_P(a));
  CHECK(seven.result.detail["reference"]["Q_matches_reference"].is_string());
}

TEST_CASE("gray scheme only at m = 3") {
  const DgAnalysis a(5);
  CHECK_THROWS_AS(select_scheme(a, "gray"), std::invalid_argument);
}

TEST_CASE("report json omits timings unless asked") {
  CheckResult c{"x", "y", true, 1.5};
  CHECK(!c.to_json().contains("seconds"));
  CHECK(c.to_json(true)["seconds"] == 1.5);
  Report r{3, Depth::fast, {c}};
  CHECK(r.passed());
  r.checks.push_back({"z", "w", false});
  CHECK(!r.passed());
  CHECK(r.to_json()["schema_version"] == kReportSchemaVersion);
}
