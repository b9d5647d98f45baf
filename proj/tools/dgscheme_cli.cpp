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

// Command-line front end: weight tables, scheme checks, eigenmatrix exports,
// fusion searches, character table and lemma oracles, full report.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dgscheme/codes.hpp"
#include "dgscheme/report.hpp"

namespace {

using namespace dgscheme;

enum class Format { json, csv, pretty };

struct RunConfig {
  std::string command;
  int m = 3;
  std::string scheme = "nine";
  std::string code = "kerdock";
  std::optional<Format> format;
  std::string out;
  int threads = 0;
  Depth depth = Depth::fast;
  bool timings = false;
};

struct Output {
  Json json;
  std::vector<CheckResult> checks;
  std::string csv;
  std::string pretty_extra;
};

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

std::string pretty_matrix(const std::string& title, const ExactMatrix& M) {
  std::size_t w = 1;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) w = std::max(w, M(r, c).get_str().size());
  std::ostringstream os;
  os << title << "\n";
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) os << (c ? " " : "  ") << pad(M(r, c).get_str(), w);
    os << "\n";
  }
  return os.str();
}

std::string checks_csv(const std::vector<CheckResult>& checks) {
  std::string s = "id,passed\n";
  for (const auto& c : checks) s += c.id + "," + (c.passed ? "true" : "false") + "\n";
  return s;
}

std::string eigen_csv(const std::string& name, const DualResult& d, const std::optional<ExactMatrix>& Q) {
  std::string s;
  if (!d.is_scheme) return s;
  s += "# " + name + " P\n" + d.P.to_csv();
  if (Q) s += "# " + name + " Q\n" + Q->to_csv();
  return s;
}

Json checks_json(const std::vector<CheckResult>& checks, bool timings) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c.to_json(timings));
  return arr;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Output run_wdist(const RunConfig& cfg) {
  Output o;
  const GaloisRing ring(cfg.m);
  if (cfg.code == "kerdock") {
    o.checks.push_back(check_kerdock_weights(cfg.m));
    o.csv = weight_distribution_csv(weight_distribution(ring, CodeFamily::kerdock));
  } else {
    o.checks.push_back(check_dg_weights(cfg.m));
    o.csv = weight_distribution_csv(weight_distribution(ring, CodeFamily::delsarte_goethals));
  }
  o.pretty_extra = o.csv;
  return o;
}

Output run_scheme_command(const RunConfig& cfg, const DgAnalysis& a) {
  Output o;
  const auto sel = select_scheme(a, cfg.scheme);
  auto v = verify_scheme(sel);
  o.checks.push_back(v.result);
  if (cfg.command == "dual" && cfg.scheme == "nine") o.checks.push_back(check_dual_sets(a));
  if (cfg.command == "fusion") {
    Json found = Json::array();
    if (v.dual.is_scheme)
      for (const auto& g : all_admissible_fusions(v.dual.P)) found.push_back(g);
    o.json["admissible_fusions"] = found;
    if (cfg.scheme == "nine") o.checks.push_back(check_fusions(a));
    if (cfg.scheme == "quotient") o.checks.push_back(check_quotients(a));
    o.pretty_extra = "admissible fusions: " + std::to_string(found.size()) + "\n";
    for (const auto& g : found) o.pretty_extra += "  " + g.dump() + "\n";
  }
  o.csv = eigen_csv(cfg.scheme, v.dual, v.Q);
  if (cfg.command == "eigen" || cfg.command == "dual") {
    if (v.dual.is_scheme) o.pretty_extra += pretty_matrix("P", v.dual.P);
    if (v.Q) o.pretty_extra += pretty_matrix("Q", *v.Q);
  }
  return o;
}

Output run_report(const RunConfig& cfg, const DgAnalysis& a) {
  Output o;
  const Report rep = full_report(a, cfg.depth);
  o.checks = rep.checks;
  o.json = rep.to_json(cfg.timings);
  // CSV: every evaluated eigenmatrix.
  for (const auto& name : scheme_names()) {
    if (name == "gray" && cfg.m != 3) continue;
    const auto v = verify_scheme(select_scheme(a, name));
    o.csv += eigen_csv(name, v.dual, v.Q);
  }
  return o;
}

int emit(const RunConfig& cfg, Output& o) {
  const bool ok = all_passed(o.checks);
  const Format fmt = cfg.format.value_or(cfg.command == "wdist" ? Format::csv : Format::json);
  std::string text;
  if (fmt == Format::json) {
    if (cfg.command != "report") {
      Json j{{"schema_version", kReportSchemaVersion}, {"command", cfg.command}, {"m", cfg.m}};
      if (cfg.command == "verify" || cfg.command == "eigen" || cfg.command == "dual" || cfg.command == "fusion")
        j["scheme"] = cfg.scheme;
      if (cfg.command == "wdist") j["code"] = cfg.code;
      j["passed"] = ok;
      for (auto& [k, v] : o.json.items()) j[k] = v;
      j["checks"] = checks_json(o.checks, cfg.timings);
      o.json = std::move(j);
    }
    text = o.json.dump(2) + "\n";
  } else if (fmt == Format::csv) {
    text = o.csv.empty() ? checks_csv(o.checks) : o.csv;
  } else {
    for (const auto& c : o.checks) text += std::string(c.passed ? "PASS  " : "FAIL  ") + c.id + "  " + c.description + "\n";
    text += o.pretty_extra;
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << cfg.out << "\n";
      return 2;
    }
    f << text;
    // Witnesses still go to stdout.
    if (!ok) {
      Json w = Json::array();
      for (const auto& c : o.checks)
        if (!c.passed) w.push_back(c.to_json());
      std::cout << w.dump(2) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of translation schemes built from Z4-linear codes"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format, depth = "fast";

  auto common = [&](CLI::App* sub, bool scheme) {
    sub->add_option("--m", cfg.m, "odd extension degree, 3 or 5")->default_val(3);
    sub->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", cfg.out, "write output to a file");
    sub->add_option("--threads", cfg.threads, "worker threads (default: DGSCHEME_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--depth", depth, "fast | exhaustive")->check(CLI::IsMember({"fast", "exhaustive"}));
    sub->add_flag("--timings", cfg.timings, "include wall-clock seconds per check in JSON");
    if (scheme) sub->add_option("--scheme", cfg.scheme, "scheme name")->check(CLI::IsMember(scheme_names()));
  };
  auto* wdist = app.add_subcommand("wdist", "Lee weight distribution of a code");
  common(wdist, false);
  wdist->add_option("--code", cfg.code, "kerdock | dg")->check(CLI::IsMember({"kerdock", "dg"}));
  common(app.add_subcommand("verify", "Schemehood certificate for a partition"), true);
  common(app.add_subcommand("eigen", "First and second eigenmatrices"), true);
  common(app.add_subcommand("dual", "Dual classes and eigenmatrices"), true);
  common(app.add_subcommand("fusion", "Admissible fusions of a scheme"), true);
  common(app.add_subcommand("charsums", "Closed-form character table against direct evaluation"), false);
  common(app.add_subcommand("lemmas", "Counting and exponential-sum lemma oracles"), false);
  common(app.add_subcommand("report", "Every check"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (format == "json") cfg.format = Format::json;
  if (format == "csv") cfg.format = Format::csv;
  if (format == "pretty") cfg.format = Format::pretty;
  cfg.depth = depth == "exhaustive" ? Depth::exhaustive : Depth::fast;

  if (cfg.threads == 0)
    if (const char* env = std::getenv("DGSCHEME_THREADS")) {
      try {
        cfg.threads = std::stoi(env);
      } catch (const std::exception&) {
        cfg.threads = -1;
      }
      if (cfg.threads <= 0) {
        std::cerr << "DGSCHEME_THREADS must be a positive integer\n";
        return 2;
      }
    }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    validate_run(cfg.m, cfg.depth);
    if (cfg.scheme == "gray" && cfg.m != 3) throw std::invalid_argument("the gray scheme is available only for m = 3");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Output o;
  if (cfg.command == "wdist") {
    o = run_wdist(cfg);
  } else if (cfg.command == "lemmas") {
    const DgAnalysis a(cfg.m);
    o.checks = {check_counting_lemmas(cfg.m), check_sum_lemmas(a, cfg.depth)};
  } else {
    const DgAnalysis a(cfg.m);
    if (cfg.command == "charsums")
      o.checks = {check_character_table(a, cfg.depth)};
    else if (cfg.command == "report")
      o = run_report(cfg, a);
    else
      o = run_scheme_command(cfg, a);
  }
  return emit(cfg, o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
