// Copyright 2026 The subselect Authors.
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

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <utility>

#include "subselect/error.h"
#include "subselect/matrix.h"
#include "subselect/selector.h"

namespace subselect::cli {
namespace {

// Diagnostic for bad input; already carries file and line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Where(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double ParseReal(std::string_view field, const std::string& path,
                 std::size_t line) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw InputError(Where(path, line) + ": cannot parse '" +
                     std::string(field) + "' as a number");
  }
  return value;
}

std::size_t ParseIndex(std::string_view field, const std::string& path,
                       std::size_t line) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw InputError(Where(path, line) + ": cannot parse '" +
                     std::string(field) + "' as an index");
  }
  return value;
}

// Non-blank lines of a file with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> ReadLines(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!Trim(line).empty()) lines.emplace_back(number, line);
  }
  if (in.bad()) throw InputError("error reading '" + path + "'");
  return lines;
}

struct CsvTable {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> lines;
};

CsvTable ReadCsv(const std::string& path, bool header) {
  auto lines = ReadLines(path);
  if (header && !lines.empty()) lines.erase(lines.begin());
  if (lines.empty()) throw InputError(path + ": empty dataset");
  CsvTable table;
  std::size_t width = 0;
  for (const auto& [number, text] : lines) {
    const auto fields = SplitCommas(text);
    if (table.rows.empty()) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw InputError(Where(path, number) + ": expected " +
                       std::to_string(width) + " values, found " +
                       std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto field : fields) row.push_back(ParseReal(field, path, number));
    table.rows.push_back(std::move(row));
    table.lines.push_back(number);
  }
  return table;
}

void RejectNegative(const CsvTable& table, const std::string& path,
                    const char* what) {
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      if (table.rows[r][c] < 0.0) {
        std::ostringstream out;
        out << Where(path, table.lines[r]) << ": negative " << what << " "
            << table.rows[r][c] << " in column " << c;
        throw InputError(out.str());
      }
    }
  }
}

SimilarityMatrix ReadTriples(const std::string& path) {
  const auto lines = ReadLines(path);
  if (lines.empty()) throw InputError(path + ": empty dataset");
  const auto& [first_line, first] = lines.front();
  const std::string_view head = Trim(first);
  if (head.substr(0, 2) != "n=") {
    throw InputError(Where(path, first_line) +
                     ": expected 'n=<count>' as the first line");
  }
  const std::size_t n = ParseIndex(Trim(head.substr(2)), path, first_line);
  if (n == 0) throw InputError(path + ": empty dataset");

  std::vector<Triple> triples;
  triples.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    const auto fields = SplitCommas(text);
    if (fields.size() != 3) {
      throw InputError(Where(path, number) + ": expected 'i,j,value', found " +
                       std::to_string(fields.size()) + " fields");
    }
    Triple t{ParseIndex(fields[0], path, number),
             ParseIndex(fields[1], path, number),
             ParseReal(fields[2], path, number)};
    if (t.value < 0.0) {
      std::ostringstream out;
      out << Where(path, number) << ": negative similarity " << t.value;
      throw InputError(out.str());
    }
    if (t.row >= n || t.col >= n) {
      throw InputError(Where(path, number) + ": index outside [0, " +
                       std::to_string(n) + ")");
    }
    triples.push_back(t);
  }
  try {
    return SimilarityMatrix::FromTriples(n, triples);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::size_t> ReadIndices(const std::string& path) {
  std::vector<std::size_t> indices;
  for (const auto& [number, text] : ReadLines(path)) {
    for (const auto field : SplitCommas(text)) {
      if (!field.empty()) indices.push_back(ParseIndex(field, path, number));
    }
  }
  return indices;
}

void Validate(const CliInvocation& inv) {
  if (inv.function != "facility-location" && inv.function != "feature-based") {
    throw InputError("--function must be facility-location or feature-based");
  }
  if (inv.k < 1) throw InputError("--k must be at least 1");
  if (inv.format != "csv" && inv.format != "triples") {
    throw InputError("--format must be csv or triples");
  }
  const bool facility = inv.function == "facility-location";
  if (inv.concave && facility) {
    throw InputError("--concave is only valid with --function feature-based");
  }
  if (inv.concave && *inv.concave != "sqrt" && *inv.concave != "log") {
    throw InputError("--concave must be sqrt or log");
  }
  if (inv.similarity && !facility) {
    throw InputError(
        "--similarity is only valid with --function facility-location");
  }
  const std::string similarity = inv.similarity.value_or("precomputed");
  if (similarity != "precomputed" && similarity != "squared-correlation" &&
      similarity != "cosine") {
    throw InputError(
        "--similarity must be precomputed, squared-correlation or cosine");
  }
  if (inv.format == "triples" && (!facility || similarity != "precomputed")) {
    throw InputError(
        "--format triples requires --function facility-location with "
        "precomputed similarity");
  }
  if (inv.parallelism < 1) throw InputError("--parallelism must be at least 1");
}

FittedSelector Select(const CliInvocation& inv, std::ostream& err) {
  SelectorConfig config;
  config.k = static_cast<std::size_t>(inv.k);
  config.naive_rounds = inv.naive_rounds;
  config.parallelism = inv.parallelism;
  if (inv.initial) config.initial = ReadIndices(*inv.initial);
  if (inv.verbose) {
    config.verbose = true;
    config.progress = [&err](const ProgressRecord& r) {
      err << "step " << r.step << " index " << r.index << " gain "
          << FormatGain(r.gain) << " objective "
          << FormatGain(r.objective_value) << " evaluations " << r.evaluations
          << "\n";
    };
  }

  if (inv.function == "feature-based") {
    config.objective = ObjectiveKind::kFeatureBased;
    config.saturator = ParseSaturator(inv.concave.value_or("sqrt"));
    const CsvTable table = ReadCsv(inv.input, inv.header);
    RejectNegative(table, inv.input, "feature value");
    return Selector(std::move(config)).Fit(FeatureMatrix::FromRows(table.rows));
  }

  config.objective = ObjectiveKind::kFacilityLocation;
  if (inv.format == "triples") {
    return Selector(std::move(config)).Fit(ReadTriples(inv.input));
  }
  const std::string similarity = inv.similarity.value_or("precomputed");
  const CsvTable table = ReadCsv(inv.input, inv.header);
  if (similarity == "precomputed") {
    RejectNegative(table, inv.input, "similarity");
    if (table.rows.size() != table.rows.front().size()) {
      throw InputError(inv.input + ": precomputed similarity must be square; "
                       "got " + std::to_string(table.rows.size()) + " rows of " +
                       std::to_string(table.rows.front().size()) + " values");
    }
    return Selector(std::move(config))
        .Fit(SimilarityMatrix::DenseFromRows(table.rows));
  }
  config.similarity = similarity == "cosine"
                          ? SimilarityKind::kCosine
                          : SimilarityKind::kSquaredCorrelation;
  return Selector(std::move(config)).Fit(RealMatrix::FromRows(table.rows));
}

}  // namespace

std::string FormatGain(double gain) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", gain);
  std::string text(buffer);
  if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
  return text;
}

std::optional<CliInvocation> ParseArgs(const std::vector<std::string>& args,
                                       std::ostream& out, std::ostream& err,
                                       int* exit_status) {
  CliInvocation inv;
  std::string concave;
  std::string similarity;
  std::string initial;

  CLI::App app{"Select a representative subset by greedy submodular "
               "maximization."};
  app.add_option("--function", inv.function,
                 "Objective: facility-location or feature-based")
      ->required();
  app.add_option("--k", inv.k, "Number of examples to select")->required();
  app.add_option("--concave", concave,
                 "Concave function for feature-based: sqrt (default) or log");
  app.add_option("--similarity", similarity,
                 "Facility location similarity: precomputed (default), "
                 "squared-correlation or cosine");
  app.add_option("--input", inv.input, "Input file")->required();
  app.add_option("--format", inv.format, "Input format: csv or triples");
  app.add_flag("--header", inv.header, "Skip the first CSV line");
  app.add_option("--naive-rounds", inv.naive_rounds,
                 "Naive greedy rounds before switching to lazy greedy. "
                 "Dataset specific; roughly 50-500 suits feature-based and "
                 "1-50 facility location");
  app.add_option("--initial", initial,
                 "File of indices to select first, in order");
  app.add_option("--output", inv.output, "Output CSV (rank,index,gain)")
      ->required();
  app.add_option("--parallelism", inv.parallelism,
                 "Threads for naive-round gain evaluation");
  app.add_flag("--verbose", inv.verbose, "Report each step on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    *exit_status = e.get_exit_code() == 0 ? kExitOk : kExitUsageError;
    app.exit(e, out, err);
    return std::nullopt;
  }
  if (app.count("--concave") > 0) inv.concave = concave;
  if (app.count("--similarity") > 0) inv.similarity = similarity;
  if (app.count("--initial") > 0) inv.initial = initial;
  *exit_status = kExitOk;
  return inv;
}

int RunCli(const CliInvocation& invocation, std::ostream& err) {
  std::string rendered;
  try {
    Validate(invocation);
    const FittedSelector fitted = Select(invocation, err);
    std::ostringstream out;
    out << "rank,index,gain\n";
    for (std::size_t r = 0; r < fitted.ranking().size(); ++r) {
      out << r << "," << fitted.ranking()[r] << ","
          << FormatGain(fitted.gains()[r]) << "\n";
    }
    rendered = out.str();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << invocation.input << ": " << e.what() << "\n";
    return kExitInputError;
  }

  std::ofstream file(invocation.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << invocation.output << "'\n";
    return kExitInputError;
  }
  file << rendered;
  file.close();
  if (!file) {
    err << "error: failed writing '" << invocation.output << "'\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace subselect::cli
