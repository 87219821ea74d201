// Copyright 2026 The qkrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkrt/records.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qkrt/error.hpp"

namespace qkrt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.emplace_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? npos : static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::MalformedCsv, fmt::format("CSV line {}: expected {} fields, found {}", line_no,
                                                       table.header.size(), fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.lines.push_back(line_no);
  }
  return table;
}

double parse_double_field(std::string_view field, std::size_t line, std::string_view column) {
  double value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::MalformedCsv,
                fmt::format("CSV line {}: column {} has unparsable value '{}'", line, column, field));
  }
  return value;
}

std::uint64_t parse_count_field(std::string_view field, std::size_t line, std::string_view column) {
  std::uint64_t value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::MalformedCsv,
                fmt::format("CSV line {}: column {} needs a nonnegative integer, got '{}'", line, column, field));
  }
  return value;
}

RuntimeRecords parse_runtime_records(std::string_view text) {
  RuntimeRecords out;
  const CsvTable table = parse_csv(text);
  if (table.header.empty()) {
    out.warnings.emplace_back("runtime record file is empty");
    return out;
  }
  constexpr std::array<std::string_view, 6> kColumns{"backend", "M", "S", "K", "deff", "T_seconds"};
  std::array<std::size_t, 6> idx{};
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    idx[c] = table.column(kColumns[c]);
    if (idx[c] == CsvTable::npos) {
      throw Error(ErrorCode::MalformedCsv, fmt::format("runtime records: missing column '{}'", kColumns[c]));
    }
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.lines[r];
    RuntimeRecord rec;
    rec.backend = row[idx[0]];
    rec.job.circuits = parse_count_field(row[idx[1]], line, "M");
    rec.job.shots = parse_count_field(row[idx[2]], line, "S");
    rec.job.updates = parse_count_field(row[idx[3]], line, "K");
    rec.job.d_eff = parse_double_field(row[idx[4]], line, "deff");
    rec.seconds = parse_double_field(row[idx[5]], line, "T_seconds");
    if (rec.backend.empty()) throw Error(ErrorCode::MalformedCsv, fmt::format("CSV line {}: empty backend", line));
    if (!(rec.seconds > 0.0)) {
      throw Error(ErrorCode::MalformedCsv, fmt::format("CSV line {}: T_seconds must be positive", line));
    }
    try {
      rec.job.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedCsv, fmt::format("CSV line {}: {}", line, e.what()));
    }
    out.records.push_back(std::move(rec));
  }
  if (out.records.empty()) out.warnings.emplace_back("runtime record file has no data rows");
  return out;
}

RuntimeRecords load_runtime_records(const std::filesystem::path& path) {
  return parse_runtime_records(read_file(path));
}

std::vector<FeatureVector> parse_dataset(std::string_view text) {
  const CsvTable table = parse_csv(text);
  std::vector<FeatureVector> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    FeatureVector v;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      v.push_back(parse_double_field(table.rows[r][c], table.lines[r], table.header[c]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, fmt::format("cannot open '{}' for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, fmt::format("failed writing '{}'", path.string()));
}

}  // namespace qkrt
