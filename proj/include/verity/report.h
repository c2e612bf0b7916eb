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

#ifndef VERITY_REPORT_H_
#define VERITY_REPORT_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verity/entail.h"
#include "verity/formula.h"
#include "verity/schema.h"
#include "verity/taxonomy.h"

namespace verity {

struct CorpusRecord {
  std::string id;
  Formula input;
  Formula output;
  int source_line = 0;
  std::optional<Verdict> gold;
};

struct LineError {
  int line_no = 0;
  std::string message;
};

struct Corpus {
  std::vector<CorpusRecord> records;
  std::vector<LineError> errors;
};

// Turns generated text into an output formula. Lets a corpus carry raw text
// in a "text" field instead of an annotated "output" formula.
class OutputAdapter {
 public:
  virtual ~OutputAdapter() = default;
  // Throws verity::Error when the text cannot be mapped.
  virtual Formula to_formula(std::string_view text,
                             const Schema& schema) const = 0;
};

// One JSON object per line with string fields "id", "input", "output" and
// an optional "gold" verdict name. Blank lines are skipped. Malformed
// lines become LineErrors; the remaining lines are still read. When
// `adapter` is set, a record may give "text" instead of "output".
//
// Throws kIo when the stream goes bad.
Corpus ingest_corpus(std::istream& in, const Schema& schema,
                     const OutputAdapter* adapter = nullptr);

// Per-verdict counts. Records whose classification hit the resource limit
// are counted in `resource_limited`; counts plus resource_limited equals
// total.
struct CategoryCounts {
  std::array<std::uint64_t, kAllVerdicts.size()> counts{};
  std::uint64_t resource_limited = 0;
  std::uint64_t total = 0;
  std::uint64_t parse_failures = 0;
  std::uint64_t gold_total = 0;
  std::uint64_t gold_matched = 0;

  std::uint64_t count(Verdict v) const {
    return counts[static_cast<std::size_t>(v)];
  }
  // count / total, 0 when the corpus is empty.
  double frequency(Verdict v) const;

  CategoryCounts& operator+=(const CategoryCounts& other);
  bool operator==(const CategoryCounts&) const = default;
};

CategoryCounts operator+(CategoryCounts a, const CategoryCounts& b);

// Classifies every record. With jobs > 1 the records are split into
// contiguous chunks classified on separate threads and the partial counts
// summed; the result does not depend on `jobs`.
CategoryCounts tally(const Schema& schema,
                     std::span<const CorpusRecord> records,
                     const EntailOptions& options = {}, unsigned jobs = 1);

// Same, with parse_failures taken from the corpus errors.
CategoryCounts tally(const Schema& schema, const Corpus& corpus,
                     const EntailOptions& options = {}, unsigned jobs = 1);

enum class ReportFormat { kJson, kCsv, kText };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

// Verdict rows in serialization-name order with counts and frequencies
// printed to four decimals. Output depends only on `counts`.
std::string render_report(const CategoryCounts& counts, ReportFormat format);
// Throws kUnknownFormat.
std::string render_report(const CategoryCounts& counts,
                          std::string_view format);

}  // namespace verity

#endif  // VERITY_REPORT_H_
