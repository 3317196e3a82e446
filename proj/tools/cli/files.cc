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

#include "cli/files.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "greenbp/errors.h"
#include "greenbp/rational.h"

namespace greenbp::cli {
namespace {

using nlohmann::json;

Rational parse_number(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ContractViolation& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return Rational(value.dump());
  }
  if (value.is_number()) {
    throw ParseError(where + ": floating-point literal " + value.dump() +
                     "; write it as a string such as \"0.25\" or \"1/4\"");
  }
  throw ParseError(where + ": expected a number string, got " +
                   std::string(value.type_name()));
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": malformed JSON: " + e.what());
  }
}

std::string hex(const unsigned char* data, unsigned length) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned i = 0; i < length; ++i) {
    out.push_back(kDigits[data[i] >> 4]);
    out.push_back(kDigits[data[i] & 0xf]);
  }
  return out;
}

std::string sha256_hex(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  return hex(digest.data(), length);
}

std::size_t parse_count(const json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() &&
                                       value.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

InstanceFile parse_instance(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  InstanceFile file;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name: expected a string");
    file.name = it->get<std::string>();
  }
  Rational beta = parse_number(require(doc, "beta"), "beta");
  if (beta < 0) throw ParseError("beta: " + to_exact_string(beta) + " is negative");
  Rational green = parse_number(require(doc, "G"), "G");
  if (green < 0 || green > 1) {
    throw ParseError("G: " + to_exact_string(green) + " is outside [0, 1]");
  }
  std::optional<Rational> budget;
  if (auto it = doc.find("U"); it != doc.end() && !it->is_null()) {
    budget = parse_number(*it, "U");
    if (*budget < 0) throw ParseError("U: " + to_exact_string(*budget) + " is negative");
  }
  const json& sizes_doc = require(doc, "sizes");
  if (!sizes_doc.is_array()) throw ParseError("sizes: expected an array");
  bool marked_empty = false;
  if (auto it = doc.find("empty"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("empty: expected true or false");
    marked_empty = it->get<bool>();
  }
  if (sizes_doc.empty() && !marked_empty) {
    throw ParseError("sizes: empty list; set \"empty\": true for an empty instance");
  }
  if (!sizes_doc.empty() && marked_empty) {
    throw ParseError("empty: marked empty but sizes has " +
                     std::to_string(sizes_doc.size()) + " entries");
  }
  std::vector<Rational> sizes;
  sizes.reserve(sizes_doc.size());
  for (std::size_t i = 0; i < sizes_doc.size(); ++i) {
    std::string where = "sizes[" + std::to_string(i) + "]";
    Rational s = parse_number(sizes_doc[i], where);
    if (s <= 0 || s > 1) {
      throw ParseError(where + ": " + to_exact_string(s) + " is outside (0, 1]");
    }
    sizes.push_back(std::move(s));
  }
  try {
    file.instance = Instance(std::move(sizes), beta, green, budget);
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
  return file;
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::string text = read_text(path);
  json doc = parse_json_text(text, path.string());
  try {
    return parse_instance(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json instance_to_json(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json doc = json::object();
  doc["name"] = file.name;
  doc["beta"] = to_exact_string(inst.beta());
  doc["G"] = to_exact_string(inst.green());
  if (inst.budget()) doc["U"] = to_exact_string(*inst.budget());
  std::vector<std::string> sizes(inst.item_count());
  for (ItemId i = 0; i < inst.item_count(); ++i) {
    sizes[inst.original_index(i)] = to_exact_string(inst.size(i));
  }
  doc["sizes"] = sizes;
  if (inst.empty()) doc["empty"] = true;
  return doc;
}

void write_instance(const std::filesystem::path& path, const InstanceFile& file) {
  write_text(path, instance_to_json(file).dump(2) + "\n");
}

std::string instance_hash(const InstanceFile& file) {
  return sha256_hex(instance_to_json(file).dump());
}

json solution_to_json(const SolutionFile& solution) {
  json doc = json::object();
  doc["instance"] = {{"name", solution.instance_name},
                     {"hash", solution.instance_hash}};
  doc["algo"] = solution.algo;
  doc["params"] = solution.params;
  doc["bins"] = solution.bins;
  const PackingStats& s = solution.stats;
  doc["stats"] = {{"bins_used", s.bins_used},
                  {"large_item_bins", s.large_item_bins},
                  {"heavy_bins", s.heavy_bins},
                  {"light_bins", s.light_bins},
                  {"energy", to_exact_string(s.energy)},
                  {"objective", to_exact_string(s.objective)}};
  return doc;
}

SolutionFile parse_solution(const json& doc) {
  if (!doc.is_object()) throw ParseError("solution: expected a JSON object");
  SolutionFile solution;
  const json& instance = require(doc, "instance");
  if (!instance.is_object()) throw ParseError("instance: expected an object");
  const json& name = require(instance, "name");
  const json& hash = require(instance, "hash");
  if (!name.is_string()) throw ParseError("instance.name: expected a string");
  if (!hash.is_string()) throw ParseError("instance.hash: expected a string");
  solution.instance_name = name.get<std::string>();
  solution.instance_hash = hash.get<std::string>();
  const json& algo = require(doc, "algo");
  if (!algo.is_string()) throw ParseError("algo: expected a string");
  solution.algo = algo.get<std::string>();
  if (auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("params: expected an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) throw ParseError("params." + key + ": expected a string");
      solution.params[key] = value.get<std::string>();
    }
  }
  const json& bins = require(doc, "bins");
  if (!bins.is_array()) throw ParseError("bins: expected an array");
  for (std::size_t b = 0; b < bins.size(); ++b) {
    std::string where = "bins[" + std::to_string(b) + "]";
    if (!bins[b].is_array()) throw ParseError(where + ": expected an array");
    std::vector<std::size_t> bin;
    for (std::size_t k = 0; k < bins[b].size(); ++k) {
      bin.push_back(parse_count(bins[b][k], where + "[" + std::to_string(k) + "]"));
    }
    solution.bins.push_back(std::move(bin));
  }
  const json& stats = require(doc, "stats");
  if (!stats.is_object()) throw ParseError("stats: expected an object");
  PackingStats& s = solution.stats;
  s.bins_used = parse_count(require(stats, "bins_used"), "stats.bins_used");
  s.large_item_bins =
      parse_count(require(stats, "large_item_bins"), "stats.large_item_bins");
  s.heavy_bins = parse_count(require(stats, "heavy_bins"), "stats.heavy_bins");
  s.light_bins = parse_count(require(stats, "light_bins"), "stats.light_bins");
  s.energy = parse_number(require(stats, "energy"), "stats.energy");
  s.objective = parse_number(require(stats, "objective"), "stats.objective");
  return solution;
}

SolutionFile read_solution(const std::filesystem::path& path) {
  std::string text = read_text(path);
  json doc = parse_json_text(text, path.string());
  try {
    return parse_solution(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_solution(const std::filesystem::path& path,
                    const SolutionFile& solution) {
  write_text(path, solution_to_json(solution).dump(2) + "\n");
}

std::vector<std::vector<std::size_t>> to_original_bins(const Instance& instance,
                                                       const Packing& packing) {
  std::vector<std::vector<std::size_t>> bins;
  bins.reserve(packing.bins.size());
  for (const auto& bin : packing.bins) {
    std::vector<std::size_t> out;
    out.reserve(bin.size());
    for (ItemId item : bin) out.push_back(instance.original_index(item));
    std::sort(out.begin(), out.end());
    bins.push_back(std::move(out));
  }
  std::sort(bins.begin(), bins.end());
  return bins;
}

Packing from_original_bins(const Instance& instance,
                           const std::vector<std::vector<std::size_t>>& bins) {
  std::vector<ItemId> item_of(instance.item_count());
  for (ItemId i = 0; i < instance.item_count(); ++i) {
    item_of[instance.original_index(i)] = i;
  }
  Packing packing;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    std::vector<ItemId> bin;
    for (std::size_t position : bins[b]) {
      if (position >= instance.item_count()) {
        throw ParseError("bins[" + std::to_string(b) + "]: item " +
                         std::to_string(position) + " does not exist (" +
                         std::to_string(instance.item_count()) + " items)");
      }
      bin.push_back(item_of[position]);
    }
    packing.bins.push_back(std::move(bin));
  }
  return packing;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace greenbp::cli
