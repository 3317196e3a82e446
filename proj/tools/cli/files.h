// Copyright 2026 The greenbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENBP_TOOLS_CLI_FILES_H_
#define GREENBP_TOOLS_CLI_FILES_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenbp/model.h"
#include "json.hpp"

namespace greenbp::cli {

// Malformed file content; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceFile {
  std::string name;
  Instance instance;
};

// Parses {"name"?, "beta", "G", "U"?, "sizes": [...], "empty"?}. Numbers are
// decimal or "p/q" strings (plain JSON numbers are accepted when integral).
// Throws ParseError for malformed or out-of-range fields and InfeasibleBudget
// when U is below the singleton-packing energy.
InstanceFile parse_instance(const nlohmann::json& doc);
InstanceFile read_instance(const std::filesystem::path& path);

// Canonical JSON form: exact strings, sizes in the caller's original order.
nlohmann::json instance_to_json(const InstanceFile& file);
void write_instance(const std::filesystem::path& path, const InstanceFile& file);

// SHA-256 (hex) of the canonical JSON form.
std::string instance_hash(const InstanceFile& file);

struct SolutionFile {
  std::string instance_name;
  std::string instance_hash;
  std::string algo;
  std::map<std::string, std::string> params;
  // Bins of 0-based positions in the instance file's size list.
  std::vector<std::vector<std::size_t>> bins;
  PackingStats stats;
};

nlohmann::json solution_to_json(const SolutionFile& solution);
SolutionFile parse_solution(const nlohmann::json& doc);
SolutionFile read_solution(const std::filesystem::path& path);
void write_solution(const std::filesystem::path& path,
                    const SolutionFile& solution);

// Bins of original positions, each sorted, bins in lexicographic order.
std::vector<std::vector<std::size_t>> to_original_bins(const Instance& instance,
                                                       const Packing& packing);

// Maps original positions back to item ids. Throws ParseError for positions
// out of range; duplicates and omissions are left for the feasibility check.
Packing from_original_bins(const Instance& instance,
                           const std::vector<std::vector<std::size_t>>& bins);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace greenbp::cli

#endif  // GREENBP_TOOLS_CLI_FILES_H_
