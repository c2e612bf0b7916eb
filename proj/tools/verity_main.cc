// Copyright 2026 The Verity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   verity --schema restaurant.schema classify INPUT OUTPUT [--legacy]
//   verity --schema restaurant.schema check entails A B
//   verity --schema restaurant.schema report corpus.jsonl --format csv
//   verity bdi hurricane.json
//
// Exit status: 0 success, 2 unreadable or malformed input, 3 resource
// limit, 4 unknown report format, 5 oracle divergence (--oracle).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "verity/bdi.h"
#include "verity/entail.h"
#include "verity/error.h"
#include "verity/model.h"
#include "verity/oracle.h"
#include "verity/report.h"
#include "verity/syntax.h"
#include "verity/taxonomy.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitFormat = 4;
constexpr int kExitDivergence = 5;

struct Divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string schema_path;
  std::optional<std::uint64_t> limit;
  std::string format = "text";
  bool legacy = false;
  bool oracle = false;
  bool verbose = false;

  std::string input;
  std::string output;
  std::string relation;
  std::vector<std::string> formulas;
  std::string corpus_path;
  unsigned jobs = 1;
  std::string scenario_path;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

verity::EntailOptions entail_options(const CliConfig& cfg) {
  verity::EntailOptions opts;
  if (cfg.limit) {
    opts.max_assignments = *cfg.limit;
  } else if (const char* env = std::getenv("VERITY_LIMIT")) {
    try {
      std::size_t used = 0;
      opts.max_assignments = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw verity::Error(verity::ErrorCode::kSyntax,
                          std::string("VERITY_LIMIT is not a number: ") + env);
    }
  }
  return opts;
}

verity::Schema require_schema(const CliConfig& cfg) {
  if (cfg.schema_path.empty()) {
    throw verity::Error(verity::ErrorCode::kSyntax, "--schema is required");
  }
  return verity::load_schema(cfg.schema_path);
}

verity::EntailmentFacts oracle_facts(const verity::Schema& schema,
                                     const verity::Formula& in,
                                     const verity::Formula& out) {
  namespace oracle = verity::oracle;
  verity::EntailmentFacts f;
  f.input_consistent = oracle::satisfiable(schema, in);
  f.input_entails_output = oracle::entails(schema, in, out);
  f.output_entails_input = oracle::entails(schema, out, in);
  f.output_tautology = oracle::is_tautology(schema, out);
  f.output_contradiction = oracle::is_contradiction(schema, out);
  f.input_entails_negated_output =
      oracle::entails(schema, in, verity::negate(out));
  return f;
}

void print_legacy(verity::Verdict verdict) {
  if (verdict == verity::Verdict::kInconsistentInput) {
    std::cout << "dusek: n/a\nji: n/a\n";
    return;
  }
  verity::LegacyLabels labels = verity::legacy_labels(verdict);
  std::cout << "dusek: " << verity::dusek_name(labels) << "\n"
            << "ji: " << verity::ji_name(labels.ji) << "\n";
}

int cmd_classify(const CliConfig& cfg) {
  verity::Schema schema = require_schema(cfg);
  verity::Formula in = verity::parse_formula(cfg.input, schema);
  verity::Formula out = verity::parse_formula(cfg.output, schema);
  auto opts = entail_options(cfg);
  verity::Verdict verdict = verity::classify(schema, in, out, opts);
  if (cfg.oracle) {
    verity::Verdict expected =
        verity::verdict_from_facts(oracle_facts(schema, in, out));
    if (expected != verdict) {
      throw Divergence("classify returned " +
                       std::string(verity::verdict_name(verdict)) +
                       ", oracle says " +
                       std::string(verity::verdict_name(expected)));
    }
  }
  std::cout << verity::verdict_name(verdict) << "\n";
  if (cfg.verbose) {
    auto f = verity::entailment_facts(schema, in, out, opts);
    std::cout << "input consistent: " << yes_no(f.input_consistent) << "\n"
              << "input |= output: " << yes_no(f.input_entails_output) << "\n"
              << "output |= input: " << yes_no(f.output_entails_input) << "\n"
              << "|= output: " << yes_no(f.output_tautology) << "\n"
              << "|= !output: " << yes_no(f.output_contradiction) << "\n"
              << "input |= !output: "
              << yes_no(f.input_entails_negated_output) << "\n";
  }
  if (cfg.legacy || cfg.verbose) print_legacy(verdict);
  return kExitOk;
}

int cmd_check(const CliConfig& cfg) {
  verity::Schema schema = require_schema(cfg);
  const bool binary = cfg.relation == "entails";
  if (cfg.formulas.size() != (binary ? 2u : 1u)) {
    throw verity::Error(verity::ErrorCode::kSyntax,
                        "check " + cfg.relation + " takes " +
                            (binary ? "two formulas" : "one formula"));
  }
  std::vector<verity::Formula> fs;
  for (const auto& text : cfg.formulas) {
    fs.push_back(verity::parse_formula(text, schema));
  }
  auto opts = entail_options(cfg);

  bool answer = false;
  bool reference = false;
  std::optional<verity::Model> witness;
  std::string witness_label;
  if (binary) {
    auto r = verity::entails(schema, fs[0], fs[1], opts);
    answer = r.holds;
    witness = r.witness;
    witness_label = "countermodel";
    if (cfg.oracle) reference = verity::oracle::entails(schema, fs[0], fs[1]);
  } else if (cfg.relation == "sat") {
    auto r = verity::satisfiable(schema, fs[0], opts);
    answer = r.holds;
    witness = r.witness;
    witness_label = "witness";
    if (cfg.oracle) reference = verity::oracle::satisfiable(schema, fs[0]);
  } else if (cfg.relation == "taut") {
    answer = verity::is_tautology(schema, fs[0], opts);
    if (cfg.oracle) reference = verity::oracle::is_tautology(schema, fs[0]);
  } else {
    answer = verity::is_contradiction(schema, fs[0], opts);
    if (cfg.oracle) reference = verity::oracle::is_contradiction(schema, fs[0]);
  }
  if (cfg.oracle && reference != answer) {
    throw Divergence("check " + cfg.relation + " returned " + yes_no(answer) +
                     ", oracle says " + yes_no(reference));
  }
  std::cout << yes_no(answer) << "\n";
  if (cfg.verbose && witness) {
    std::cout << witness_label << ": " << verity::format_model(*witness)
              << "\n";
  }
  return kExitOk;
}

int cmd_report(const CliConfig& cfg) {
  auto format = verity::report_format_from_name(cfg.format);
  verity::Schema schema = require_schema(cfg);
  std::ifstream in(cfg.corpus_path);
  if (!in) {
    throw verity::Error(verity::ErrorCode::kIo,
                        "cannot read corpus '" + cfg.corpus_path + "'");
  }
  verity::Corpus corpus = verity::ingest_corpus(in, schema);
  for (const auto& err : corpus.errors) {
    std::cerr << cfg.corpus_path << ":" << err.line_no << ": " << err.message
              << "\n";
  }
  auto opts = entail_options(cfg);
  verity::CategoryCounts counts =
      verity::tally(schema, corpus, opts, cfg.jobs);
  if (cfg.oracle) {
    for (const auto& r : corpus.records) {
      verity::Verdict got = verity::classify(schema, r.input, r.output, opts);
      verity::Verdict expected =
          verity::verdict_from_facts(oracle_facts(schema, r.input, r.output));
      if (got != expected) {
        throw Divergence("record '" + r.id + "': classify returned " +
                         std::string(verity::verdict_name(got)) +
                         ", oracle says " +
                         std::string(verity::verdict_name(expected)));
      }
    }
  }
  std::cout << verity::render_report(counts, *format);
  return kExitOk;
}

// Recomputes every finding condition with the brute-force oracle.
void check_findings_with_oracle(
    const verity::Scenario& s,
    const std::vector<verity::MisleadingFinding>& findings) {
  namespace oracle = verity::oracle;
  std::vector<verity::Formula> pool = s.candidates().empty()
                                          ? verity::default_candidates(s)
                                          : s.candidates();
  std::vector<std::string> expected;
  const auto& schema = s.schema();
  for (const auto& q : pool) {
    bool norm = std::find(s.norms().begin(), s.norms().end(), q) !=
                s.norms().end();
    if (norm && verity::eval(s.world(), q) &&
        !oracle::entails(schema, s.communicated(), q)) {
      expected.push_back(verity::format_finding(
          {verity::FindingKind::kWithholding, q, std::nullopt}));
    }
  }
  for (const auto& p : pool) {
    for (const auto& r : pool) {
      if (oracle::entails(schema, s.communicated(), p) &&
          !oracle::entails(schema, s.communicated(), r) &&
          oracle::entails(schema, s.hearer_beliefs(), verity::implies(p, r)) &&
          verity::eval(s.world(), p) && !verity::eval(s.world(), r)) {
        expected.push_back(verity::format_finding(
            {verity::FindingKind::kHalfTruth, p, r}));
      }
    }
  }
  std::vector<std::string> got;
  for (const auto& f : findings) got.push_back(verity::format_finding(f));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected) {
    throw Divergence("bdi findings differ from the oracle's (" +
                     std::to_string(got.size()) + " vs " +
                     std::to_string(expected.size()) + ")");
  }
}

int cmd_bdi(const CliConfig& cfg) {
  std::optional<verity::Schema> override_schema;
  if (!cfg.schema_path.empty()) override_schema = require_schema(cfg);
  verity::Scenario scenario = verity::load_scenario(
      cfg.scenario_path, override_schema ? &*override_schema : nullptr,
      entail_options(cfg));
  auto findings = verity::scan_misleading(scenario);
  if (cfg.oracle) check_findings_with_oracle(scenario, findings);
  if (findings.empty()) std::cout << "no findings\n";
  for (const auto& f : findings) {
    std::cout << verity::format_finding(f) << "\n";
  }
  return kExitOk;
}

int exit_code_for(const verity::Error& e) {
  switch (e.code()) {
    case verity::ErrorCode::kResourceLimit: return kExitResource;
    case verity::ErrorCode::kUnknownFormat: return kExitFormat;
    default: return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifies input/output meaning-representation pairs by their "
               "entailment relation."};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--schema", cfg.schema_path, "Schema file");
  std::uint64_t limit = 0;
  auto* limit_opt = app.add_option("--limit", limit,
                 "Maximum assignments per decision (default $VERITY_LIMIT "
                 "or 1000000)");
  app.add_option("--format", cfg.format, "Report format: json, csv or text");
  app.add_flag("--legacy", cfg.legacy, "Also print the legacy labels");
  app.add_flag("--oracle", cfg.oracle,
               "Re-run every decision through the brute-force oracle");
  app.add_flag("-v,--verbose", cfg.verbose, "Print entailment facts");

  auto* classify = app.add_subcommand("classify", "Classify one pair");
  classify->add_option("input", cfg.input, "Input formula")->required();
  classify->add_option("output", cfg.output, "Output formula")->required();

  auto* check = app.add_subcommand("check", "Decide one logical relation");
  check->add_option("relation", cfg.relation, "entails, sat, taut or contra")
      ->required()
      ->check(CLI::IsMember({"entails", "sat", "taut", "contra"}));
  check->add_option("formulas", cfg.formulas, "Formula(s)")->required();

  auto* report = app.add_subcommand("report", "Tally a corpus");
  report->add_option("corpus", cfg.corpus_path, "JSON-lines corpus")
      ->required();
  report->add_option("-j,--jobs", cfg.jobs, "Classification threads")
      ->check(CLI::PositiveNumber);

  auto* bdi = app.add_subcommand("bdi", "Scan a scenario for misleading");
  bdi->add_option("scenario", cfg.scenario_path, "Scenario JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (limit_opt->count() > 0) cfg.limit = limit;
  if (!verity::report_format_from_name(cfg.format)) {
    std::cerr << "verity: unknown format '" << cfg.format << "'\n";
    return kExitFormat;
  }

  try {
    if (classify->parsed()) return cmd_classify(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (report->parsed()) return cmd_report(cfg);
    return cmd_bdi(cfg);
  } catch (const Divergence& e) {
    std::cerr << "verity: ORACLE DIVERGENCE: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const verity::Error& e) {
    std::cerr << "verity: " << verity::error_code_name(e.code()) << ": "
              << e.what() << "\n";
    return exit_code_for(e);
  }
}
