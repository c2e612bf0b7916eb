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

#include "verity/report.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "verity/error.h"
#include "verity/syntax.h"

namespace verity {
namespace {

std::string required_string(const nlohmann::json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw Error(ErrorCode::kSyntax, std::string("missing field '") + name + "'");
  }
  if (!it->is_string()) {
    throw Error(ErrorCode::kSyntax,
                std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

Formula field_formula(const std::string& text, const char* name,
                      const Schema& schema) {
  try {
    return parse_formula(text, schema);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.what());
  }
}

CorpusRecord parse_record(const std::string& line, const Schema& schema,
                          const OutputAdapter* adapter) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) {
    throw Error(ErrorCode::kSyntax, "record must be a JSON object");
  }
  CorpusRecord record;
  record.id = required_string(obj, "id");
  record.input = field_formula(required_string(obj, "input"), "input", schema);
  if (obj.contains("output") || adapter == nullptr) {
    record.output =
        field_formula(required_string(obj, "output"), "output", schema);
  } else {
    record.output =
        adapter->to_formula(required_string(obj, "text"), schema);
    check_formula(schema, record.output);
  }
  if (obj.contains("gold")) {
    std::string gold = required_string(obj, "gold");
    record.gold = verdict_from_name(gold);
    if (!record.gold) {
      throw Error(ErrorCode::kSyntax, "unknown gold verdict '" + gold + "'");
    }
  }
  return record;
}

CategoryCounts tally_range(const Schema& schema,
                           std::span<const CorpusRecord> records,
                           const EntailOptions& options) {
  CategoryCounts counts;
  for (const CorpusRecord& record : records) {
    ++counts.total;
    Verdict verdict;
    try {
      verdict = classify(schema, record.input, record.output, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kResourceLimit) throw;
      ++counts.resource_limited;
      continue;
    }
    ++counts.counts[static_cast<std::size_t>(verdict)];
    if (record.gold) {
      ++counts.gold_total;
      if (*record.gold == verdict) ++counts.gold_matched;
    }
  }
  return counts;
}

// count / total rounded half up to four decimals, from integers only.
std::string fixed4(std::uint64_t count, std::uint64_t total) {
  std::uint64_t scaled = 0;
  if (total > 0) scaled = (count * 20000 / total + 1) / 2;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%04llu",
                static_cast<unsigned long long>(scaled / 10000),
                static_cast<unsigned long long>(scaled % 10000));
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t classified(const CategoryCounts& c) {
  return c.total - c.resource_limited;
}

std::string render_json(const CategoryCounts& c) {
  std::ostringstream out;
  out << "{\n  \"categories\": {\n";
  for (std::size_t i = 0; i < kAllVerdicts.size(); ++i) {
    Verdict v = kAllVerdicts[i];
    out << "    \"" << verdict_name(v) << "\": {\"count\": " << c.count(v)
        << ", \"frequency\": " << fixed4(c.count(v), c.total) << "}"
        << (i + 1 < kAllVerdicts.size() ? "," : "") << "\n";
  }
  out << "  },\n"
      << "  \"total\": " << c.total << ",\n"
      << "  \"classified_frequency\": " << fixed4(classified(c), c.total)
      << ",\n"
      << "  \"resource_limited\": " << c.resource_limited << ",\n"
      << "  \"parse_failures\": " << c.parse_failures << ",\n"
      << "  \"gold\": {\"matched\": " << c.gold_matched
      << ", \"total\": " << c.gold_total << "}\n"
      << "}\n";
  return out.str();
}

std::string render_csv(const CategoryCounts& c) {
  std::ostringstream out;
  out << "category,count,frequency\r\n";
  for (Verdict v : kAllVerdicts) {
    out << csv_field(verdict_name(v)) << "," << c.count(v) << ","
        << fixed4(c.count(v), c.total) << "\r\n";
  }
  out << "total," << c.total << "," << fixed4(classified(c), c.total)
      << "\r\n";
  out << "resource-limited," << c.resource_limited << ",\r\n";
  out << "parse-failures," << c.parse_failures << ",\r\n";
  if (c.gold_total > 0) {
    out << "gold-matched," << c.gold_matched << ","
        << fixed4(c.gold_matched, c.gold_total) << "\r\n";
  }
  return out.str();
}

std::string render_text(const CategoryCounts& c) {
  char buf[128];
  std::string out;
  auto row = [&](std::string_view name, std::uint64_t n,
                 const std::string& freq) {
    std::snprintf(buf, sizeof buf, "%-22.*s %8llu %10s\n",
                  static_cast<int>(name.size()), name.data(),
                  static_cast<unsigned long long>(n), freq.c_str());
    out += buf;
  };
  std::snprintf(buf, sizeof buf, "%-22s %8s %10s\n", "category", "count",
                "frequency");
  out += buf;
  for (Verdict v : kAllVerdicts) {
    row(verdict_name(v), c.count(v), fixed4(c.count(v), c.total));
  }
  row("total", c.total, fixed4(classified(c), c.total));
  row("resource-limited", c.resource_limited, "");
  row("parse-failures", c.parse_failures, "");
  if (c.gold_total > 0) {
    row("gold-matched", c.gold_matched, fixed4(c.gold_matched, c.gold_total));
  }
  return out;
}

}  // namespace

Corpus ingest_corpus(std::istream& in, const Schema& schema,
                     const OutputAdapter* adapter) {
  Corpus corpus;
  std::set<std::string> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      CorpusRecord record = parse_record(line, schema, adapter);
      record.source_line = line_no;
      if (!ids.insert(record.id).second) {
        throw Error(ErrorCode::kSyntax, "duplicate id '" + record.id + "'");
      }
      corpus.records.push_back(std::move(record));
    } catch (const Error& e) {
      corpus.errors.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading corpus stream");
  return corpus;
}

double CategoryCounts::frequency(Verdict v) const {
  return total == 0 ? 0.0
                    : static_cast<double>(count(v)) / static_cast<double>(total);
}

CategoryCounts& CategoryCounts::operator+=(const CategoryCounts& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  resource_limited += other.resource_limited;
  total += other.total;
  parse_failures += other.parse_failures;
  gold_total += other.gold_total;
  gold_matched += other.gold_matched;
  return *this;
}

CategoryCounts operator+(CategoryCounts a, const CategoryCounts& b) {
  a += b;
  return a;
}

CategoryCounts tally(const Schema& schema,
                     std::span<const CorpusRecord> records,
                     const EntailOptions& options, unsigned jobs) {
  jobs = std::max(1u, std::min<unsigned>(jobs, records.size()));
  if (jobs <= 1) return tally_range(schema, records, options);

  std::vector<CategoryCounts> partial(jobs);
  std::vector<std::exception_ptr> failures(jobs);
  std::vector<std::thread> workers;
  const std::size_t chunk = (records.size() + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    std::size_t begin = std::min(records.size(), j * chunk);
    std::size_t end = std::min(records.size(), begin + chunk);
    workers.emplace_back([&, j, begin, end] {
      try {
        partial[j] =
            tally_range(schema, records.subspan(begin, end - begin), options);
      } catch (...) {
        failures[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  CategoryCounts total;
  for (unsigned j = 0; j < jobs; ++j) {
    if (failures[j]) std::rethrow_exception(failures[j]);
    total += partial[j];
  }
  return total;
}

CategoryCounts tally(const Schema& schema, const Corpus& corpus,
                     const EntailOptions& options, unsigned jobs) {
  CategoryCounts counts = tally(schema, corpus.records, options, jobs);
  counts.parse_failures = corpus.errors.size();
  return counts;
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

std::string render_report(const CategoryCounts& counts, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return render_json(counts);
    case ReportFormat::kCsv: return render_csv(counts);
    case ReportFormat::kText: return render_text(counts);
  }
  return "";
}

std::string render_report(const CategoryCounts& counts,
                          std::string_view format) {
  auto parsed = report_format_from_name(format);
  if (!parsed) {
    throw Error(ErrorCode::kUnknownFormat,
                "unknown report format '" + std::string(format) + "'");
  }
  return render_report(counts, *parsed);
}

}  // namespace verity
