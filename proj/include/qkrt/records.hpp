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

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qkrt/generators.hpp"
#include "qkrt/model.hpp"

namespace qkrt {

/// Comma-separated, header row required, '.' decimal point, no quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based source line of each row.
  std::vector<std::size_t> lines;

  /// Column index by name, or npos.
  std::size_t column(std::string_view name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

CsvTable parse_csv(std::string_view text);

double parse_double_field(std::string_view field, std::size_t line, std::string_view column);
std::uint64_t parse_count_field(std::string_view field, std::size_t line, std::string_view column);

struct RuntimeRecord {
  std::string backend;
  JobSpec job;
  double seconds{0.0};
};

struct RuntimeRecords {
  std::vector<RuntimeRecord> records;
  std::vector<std::string> warnings;
};

/// Columns backend,M,S,K,deff,T_seconds (any order). Throws
/// Error{MalformedCsv} naming the missing column or the offending line.
RuntimeRecords parse_runtime_records(std::string_view text);
RuntimeRecords load_runtime_records(const std::filesystem::path& path);

/// One feature vector per row; the header names the components.
std::vector<FeatureVector> parse_dataset(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace qkrt
