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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/random_formula.h"
#include "verity/bdi.h"
#include "verity/entail.h"
#include "verity/error.h"
#include "verity/oracle.h"
#include "verity/report.h"
#include "verity/syntax.h"
#include "verity/taxonomy.h"

namespace verity {
namespace {

const std::string kFixtures = VERITY_FIXTURE_DIR;
constexpr char kInput[] = "Type(x)=Restaurant & Food(x)=Italian & Price(x)=Low";

// Collects the first failure message of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void restaurant_example_table(Check& c) {
  auto start = std::chrono::steady_clock::now();
  Schema s = load_schema(kFixtures + "/restaurant.schema");
  Formula in = parse_formula(kInput, s);
  const std::pair<const char*, Verdict> rows[] = {
      {"Type(x)=Restaurant & Food(x)=Italian", Verdict::kTooWeak},
      {"Food(x)=Italian | !(Food(x)=Italian)", Verdict::kTautologous},
      {"Type(x)=Restaurant & Food(x)=Italian & Price(x)=Low & "
       "Style(x)=Vegetarian",
       Verdict::kTooStrong},
      {"Type(x)=Restaurant & Style(x)=Vegetarian & Style(x)=Steakhouse",
       Verdict::kSelfContradictory},
      {"Type(x)=Restaurant & Style(x)=Vegetarian", Verdict::kIndependent},
      {"Type(x)=Restaurant & Food(x)=Norwegian & Price(x)=Low",
       Verdict::kConflicting},
  };
  for (const auto& [out, want] : rows) {
    Verdict got = classify(s, in, parse_formula(out, s));
    c.expect(got == want, std::string(out) + ": got " +
                              std::string(verdict_name(got)));
  }
  double t = seconds_since(start);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s");
}

void legacy_table(Check& c) {
  Schema s = load_schema(kFixtures + "/restaurant.schema");
  Formula in = parse_formula(kInput, s);
  const struct {
    const char* output;
    const char* dusek;
    JiLabel ji;
  } rows[] = {
      {"Type(x)=Restaurant & Food(x)=Italian", "omission", JiLabel::kNone},
      {"Type(x)=Restaurant & Food(x)=Italian & Price(x)=Low & "
       "Style(x)=Vegetarian",
       "hallucination", JiLabel::kExtrinsic},
      {"Type(x)=Restaurant & Style(x)=Vegetarian", "hallucination+omission",
       JiLabel::kExtrinsic},
      {"Type(x)=Restaurant & Food(x)=Norwegian & Price(x)=Low",
       "hallucination+omission", JiLabel::kIntrinsic},
  };
  for (const auto& row : rows) {
    LegacyLabels labels =
        legacy_labels(classify(s, in, parse_formula(row.output, s)));
    c.expect(dusek_name(labels) == row.dusek && labels.ji == row.ji,
             std::string(row.output) + ": got " + dusek_name(labels) + "/" +
                 std::string(ji_name(labels.ji)));
  }
}

void temperature_quadruple(Check& c) {
  Schema s = load_schema(kFixtures + "/temperature.schema");
  auto run = [&](const char* in, const char* out, Verdict want) {
    Verdict got = classify(s, parse_formula(in, s), parse_formula(out, s));
    c.expect(got == want, std::string(in) + " vs " + out + ": got " +
                              std::string(verdict_name(got)));
  };
  run("Temperature(d) > 22", "Temperature(d) > 21", Verdict::kTooWeak);
  run("Temperature(d) > 22", "Temperature(d) > 23", Verdict::kTooStrong);
  run("Temperature(d) > 22", "Temperature(d) < 25", Verdict::kIndependent);
  run("Temperature(d) > 22", "Temperature(d) < 22", Verdict::kConflicting);
  run("Temperature(d) >= 20 & Temperature(d) <= 30",
      "Temperature(d) >= 25 & Temperature(d) <= 35", Verdict::kIndependent);
}

void oracle_equivalence(Check& c) {
  auto start = std::chrono::steady_clock::now();
  testing::GeneratorConfig whole;
  whole.entities = {"x", "y"};
  whole.max_depth = 3;
  testing::GeneratorConfig fractional;
  fractional.max_categorical = 2;
  fractional.max_numeric = 2;
  fractional.fractional_constants = true;
  testing::FormulaGenerator gens[] = {testing::FormulaGenerator(4001, whole),
                                     testing::FormulaGenerator(4002, fractional)};
  for (int i = 0; i < 1000 && c.ok(); ++i) {
    auto& gen = gens[i % 2];
    Schema s = gen.schema();
    Formula a = gen.formula(s);
    Formula b = gen.formula(s);
    std::string pair = print_formula(a) + " / " + print_formula(b);
    c.expect(entails(s, a, b).holds == oracle::entails(s, a, b),
             "entails: " + pair);
    c.expect(satisfiable(s, a).holds == oracle::satisfiable(s, a),
             "satisfiable: " + pair);
    c.expect(is_tautology(s, b) == oracle::is_tautology(s, b),
             "is_tautology: " + pair);
    c.expect(is_contradiction(s, b) == oracle::is_contradiction(s, b),
             "is_contradiction: " + pair);
  }
  double t = seconds_since(start);
  c.expect(t < 60.0, "took " + std::to_string(t) + " s");
}

// Each verdict's defining conditions, stated directly over the facts.
std::vector<Verdict> matching_definitions(const EntailmentFacts& f) {
  std::vector<Verdict> out;
  auto add = [&](bool cond, Verdict v) {
    if (cond) out.push_back(v);
  };
  bool in = f.input_consistent;
  bool fwd = f.input_entails_output;
  bool back = f.output_entails_input;
  add(!in, Verdict::kInconsistentInput);
  add(in && fwd && back, Verdict::kWellMatched);
  add(in && fwd && !back && !f.output_tautology, Verdict::kTooWeak);
  add(in && fwd && !back && f.output_tautology, Verdict::kTautologous);
  add(in && !fwd && back && !f.output_contradiction, Verdict::kTooStrong);
  add(in && !fwd && back && f.output_contradiction,
      Verdict::kSelfContradictory);
  add(in && !fwd && !back && !f.input_entails_negated_output,
      Verdict::kIndependent);
  add(in && !fwd && !back && f.input_entails_negated_output,
      Verdict::kConflicting);
  return out;
}

void taxonomy_properties(Check& c) {
  testing::GeneratorConfig config;
  config.entities = {"x", "y"};
  config.max_depth = 3;
  testing::FormulaGenerator gen(5001, config);
  auto weak = [](Verdict v) {
    return v == Verdict::kTooWeak || v == Verdict::kTautologous;
  };
  auto strong = [](Verdict v) {
    return v == Verdict::kTooStrong || v == Verdict::kSelfContradictory;
  };
  for (int i = 0; i < 10000 && c.ok(); ++i) {
    Schema s = gen.schema();
    Formula a = gen.formula(s);
    Formula b = gen.formula(s);
    std::string pair = print_formula(a) + " / " + print_formula(b);
    Verdict ab = classify(s, a, b);
    c.expect(std::find(kAllVerdicts.begin(), kAllVerdicts.end(), ab) !=
                 kAllVerdicts.end(),
             "totality: " + pair);
    EntailmentFacts facts = entailment_facts(s, a, b);
    auto defs = matching_definitions(facts);
    c.expect(defs.size() == 1 && defs[0] == ab, "exclusivity: " + pair);

    bool a_sat = facts.input_consistent;
    bool b_sat = !facts.output_contradiction;
    if (a_sat && b_sat) {
      Verdict ba = classify(s, b, a);
      bool dual = (ab == Verdict::kWellMatched) == (ba == Verdict::kWellMatched) &&
                  (ab == Verdict::kIndependent) == (ba == Verdict::kIndependent) &&
                  (ab == Verdict::kConflicting) == (ba == Verdict::kConflicting) &&
                  weak(ab) == strong(ba) && strong(ab) == weak(ba);
      c.expect(dual, "swap duality: " + pair);
    }
    // A consistent formula cannot entail both the other and its negation.
    if (a_sat) {
      c.expect(!(facts.input_entails_output &&
                 facts.input_entails_negated_output),
               "input entails output and its negation: " + pair);
    }
    if (b_sat) {
      c.expect(!(facts.output_entails_input &&
                 entails(s, b, negate(a)).holds),
               "output entails input and its negation: " + pair);
    }
    // A tautology follows from everything; everything follows from a
    // contradiction.
    if (facts.output_tautology && a_sat) {
      c.expect(facts.input_entails_output, "tautology lemma: " + pair);
    }
    if (!b_sat) {
      c.expect(facts.output_entails_input, "contradiction lemma: " + pair);
    }
  }
}

std::string scan_lines(const Scenario& s) {
  std::string out;
  for (const auto& f : scan_misleading(s)) out += format_finding(f) + "\n";
  return out;
}

Scenario with(const Scenario& s, const char* communicated,
              const std::pair<Key, std::string>* flip) {
  Formula k = communicated ? parse_formula(communicated, s.schema())
                           : s.communicated();
  Model world = s.world();
  if (flip) world.set(flip->first, flip->second);
  return Scenario(s.schema(), k, s.hearer_beliefs(), world, s.norms(),
                  s.candidates(), s.options());
}

void bdi_goldens(Check& c) {
  Scenario hurricane = load_scenario(kFixtures + "/hurricane.json");
  auto findings = scan_misleading(hurricane);
  c.expect(findings.size() == 1 &&
               findings[0].kind == FindingKind::kWithholding,
           "hurricane: " + scan_lines(hurricane));
  Scenario told =
      with(hurricane, "Sky(today)=Cloudy & Hurricane(today)=Yes", nullptr);
  c.expect(scan_misleading(told).empty(), "hurricane told: " + scan_lines(told));
  std::pair<Key, std::string> calm{Key{"Hurricane", "today"}, "No"};
  Scenario flipped = with(hurricane, nullptr, &calm);
  c.expect(scan_misleading(flipped).empty(),
           "hurricane flipped: " + scan_lines(flipped));

  Scenario employment = load_scenario(kFixtures + "/employment.json");
  findings = scan_misleading(employment);
  c.expect(findings.size() == 1 &&
               findings[0].kind == FindingKind::kHalfTruth,
           "employment: " + scan_lines(employment));
  Scenario stated = with(
      employment, "Position(s)=Permanent & Solvency(c)=Healthy", nullptr);
  c.expect(scan_misleading(stated).empty(),
           "employment stated: " + scan_lines(stated));
  std::pair<Key, std::string> solvent{Key{"Solvency", "c"}, "Healthy"};
  Scenario healthy = with(employment, nullptr, &solvent);
  c.expect(scan_misleading(healthy).empty(),
           "employment flipped: " + scan_lines(healthy));
}

std::vector<CorpusRecord> build_corpus(testing::FormulaGenerator& gen,
                                       const Schema& s, int n) {
  std::vector<CorpusRecord> records;
  for (int i = 0; i < n; ++i) {
    CorpusRecord r;
    r.id = "r" + std::to_string(i);
    r.input = gen.formula(s);
    r.output = gen.formula(s);
    records.push_back(std::move(r));
  }
  return records;
}

void report_pipeline(Check& c) {
  Schema s = load_schema(kFixtures + "/restaurant.schema");
  std::ifstream file(kFixtures + "/ex1_4.jsonl");
  Corpus corpus = ingest_corpus(file, s);
  CategoryCounts counts = tally(s, corpus);
  CategoryCounts want;
  want.counts[static_cast<std::size_t>(Verdict::kTooWeak)] = 1;
  want.counts[static_cast<std::size_t>(Verdict::kTooStrong)] = 1;
  want.counts[static_cast<std::size_t>(Verdict::kIndependent)] = 1;
  want.counts[static_cast<std::size_t>(Verdict::kConflicting)] = 1;
  want.total = 4;
  want.gold_total = 4;
  want.gold_matched = 4;
  c.expect(counts == want, "fixture counts:\n" + render_report(counts, "text"));

  testing::GeneratorConfig config;
  config.entities = {"x", "y"};
  testing::FormulaGenerator gen(7001, config);
  for (int split = 0; split < 100 && c.ok(); ++split) {
    Schema rs = gen.schema();
    auto records = build_corpus(gen, rs, 30);
    CategoryCounts whole = tally(rs, records);
    auto shuffled = records;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.rng());
    c.expect(tally(rs, shuffled) == whole, "permutation, split " +
                                               std::to_string(split));
    std::span<const CorpusRecord> all(shuffled);
    std::size_t a = gen.uniform(0, static_cast<int>(all.size()));
    std::size_t b = gen.uniform(static_cast<int>(a), static_cast<int>(all.size()));
    CategoryCounts merged = tally(rs, all.subspan(0, a)) +
                            tally(rs, all.subspan(a, b - a)) +
                            tally(rs, all.subspan(b));
    c.expect(merged == whole, "merge, split " + std::to_string(split));
  }

  for (ReportFormat f : {ReportFormat::kJson, ReportFormat::kCsv,
                         ReportFormat::kText}) {
    std::ifstream again(kFixtures + "/ex1_4.jsonl");
    CategoryCounts second = tally(s, ingest_corpus(again, s), {}, 3);
    c.expect(render_report(counts, f) == render_report(second, f),
             "render differs between runs");
  }
}

void parser_round_trip(Check& c) {
  testing::GeneratorConfig config;
  config.entities = {"x", "y", "z"};
  config.max_numeric = 2;
  config.fractional_constants = true;
  config.max_depth = 6;
  testing::FormulaGenerator gen(8001, config);
  for (int i = 0; i < 1000 && c.ok(); ++i) {
    Schema s = gen.schema();
    Formula f = gen.formula(s);
    std::string text = print_formula(f);
    Formula back = parse_formula(text, s);
    c.expect(back == f, "round trip: " + text);
    c.expect(print_formula(back) == text, "reprint: " + text);
  }
}

}  // namespace
}  // namespace verity

int main() {
  using verity::Check;
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"1 restaurant example table", verity::restaurant_example_table},
      {"2 legacy label table", verity::legacy_table},
      {"3 temperature examples", verity::temperature_quadruple},
      {"4 oracle equivalence (1000 instances)", verity::oracle_equivalence},
      {"5 taxonomy properties (10000 pairs)", verity::taxonomy_properties},
      {"6 withholding and half-truth goldens", verity::bdi_goldens},
      {"7 report pipeline", verity::report_pipeline},
      {"8 parser round trip (1000 formulas)", verity::parser_round_trip},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double t = verity::seconds_since(start);
    std::printf("[%s] %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", name, t);
    if (!check.ok()) {
      std::printf("       %s\n", check.failure().c_str());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
