// Copyright 2026 The Incentive Policy Authors
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

#include "incentive/instance_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "incentive/errors.h"
#include "json.hpp"

namespace incentive {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

template <typename Int>
Int parse_int(std::string_view text, const char* what, std::size_t line) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

// Accepts "inf"/"nan" so that non-finite values are reported as such rather
// than as syntax errors.
double parse_real(std::string_view text, const char* what, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw InputError("non-finite " + std::string(what), line);
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" +
                         std::string(text) + "'",
                     line);
  }
  if (!std::isfinite(value)) {
    throw InputError("non-finite " + std::string(what), line);
  }
  return value;
}

}  // namespace

FileFormat parse_format(std::string_view name) {
  if (name == "csv") return FileFormat::kCsv;
  if (name == "json") return FileFormat::kJson;
  throw InputError("unknown format '" + std::string(name) +
                   "' (expected csv or json)");
}

FileFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? FileFormat::kJson : FileFormat::kCsv;
}

Instance read_instance_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool has_label = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto header = split_fields(line);
    const std::vector<std::string_view> base = {"ind_id", "alt_id", "utility",
                                                "social"};
    if (header.size() < 4 || header.size() > 5 ||
        !std::equal(base.begin(), base.end(), header.begin()) ||
        (header.size() == 5 && header[4] != "label")) {
      throw InputError(
          "expected header 'ind_id,alt_id,utility,social[,label]'", line_no);
    }
    has_label = header.size() == 5;
    break;
  }
  if (line_no == 0) throw InputError("empty instance file");

  std::map<IndividualId, std::size_t> index;
  std::set<std::pair<IndividualId, AlternativeId>> seen;
  std::vector<Individual> individuals;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 4 && !(has_label && fields.size() == 5)) {
      throw InputError("expected " + std::string(has_label ? "4 or 5" : "4") +
                           " fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    Alternative alt;
    const auto ind_id = parse_int<IndividualId>(fields[0], "ind_id", line_no);
    alt.alt_id = parse_int<AlternativeId>(fields[1], "alt_id", line_no);
    alt.utility = parse_real(fields[2], "utility", line_no);
    alt.social = parse_real(fields[3], "social", line_no);
    if (fields.size() == 5) alt.label = std::string(fields[4]);
    if (!seen.emplace(ind_id, alt.alt_id).second) {
      throw InputError("duplicate alternative (ind " + std::to_string(ind_id) +
                           ", alt " + std::to_string(alt.alt_id) + ")",
                       line_no);
    }
    auto [it, inserted] = index.emplace(ind_id, individuals.size());
    if (inserted) individuals.push_back(Individual{ind_id, {}});
    individuals[it->second].alternatives.push_back(std::move(alt));
  }
  return Instance::create(std::move(individuals));
}

Instance read_instance_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  try {
    std::vector<Individual> individuals;
    for (const json& jind : doc.at("individuals")) {
      Individual ind;
      ind.ind_id = jind.at("id").get<IndividualId>();
      for (const json& jalt : jind.at("alternatives")) {
        Alternative alt;
        alt.alt_id = jalt.at("id").get<AlternativeId>();
        if (!jalt.at("utility").is_number() || !jalt.at("social").is_number()) {
          throw InputError("non-finite or non-numeric utility/social (ind " +
                           std::to_string(ind.ind_id) + ", alt " +
                           std::to_string(alt.alt_id) + ")");
        }
        alt.utility = jalt.at("utility").get<double>();
        alt.social = jalt.at("social").get<double>();
        if (jalt.contains("label") && !jalt.at("label").is_null()) {
          alt.label = jalt.at("label").get<std::string>();
        }
        ind.alternatives.push_back(std::move(alt));
      }
      individuals.push_back(std::move(ind));
    }
    Metadata metadata;
    if (doc.contains("metadata")) {
      for (const auto& [key, value] : doc.at("metadata").items()) {
        metadata[key] = value.is_string() ? value.get<std::string>()
                                          : value.dump();
      }
    }
    return Instance::create(std::move(individuals), std::move(metadata));
  } catch (const json::exception& e) {
    throw InputError(std::string("JSON schema error: ") + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path, FileFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path.string());
  return format == FileFormat::kJson ? read_instance_json(in)
                                     : read_instance_csv(in);
}

std::string format_exact(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_instance_csv(std::ostream& out, const Instance& instance) {
  bool has_label = false;
  for (const Individual& ind : instance.individuals()) {
    for (const Alternative& alt : ind.alternatives) {
      has_label = has_label || !alt.label.empty();
    }
  }
  out << (has_label ? "ind_id,alt_id,utility,social,label\n"
                    : "ind_id,alt_id,utility,social\n");
  for (const Individual& ind : instance.individuals()) {
    for (const Alternative& alt : ind.alternatives) {
      out << ind.ind_id << ',' << alt.alt_id << ',' << format_exact(alt.utility)
          << ',' << format_exact(alt.social);
      if (has_label) out << ',' << alt.label;
      out << '\n';
    }
  }
}

void write_instance_json(std::ostream& out, const Instance& instance) {
  json doc;
  doc["individuals"] = json::array();
  for (const Individual& ind : instance.individuals()) {
    json jind;
    jind["id"] = ind.ind_id;
    jind["alternatives"] = json::array();
    for (const Alternative& alt : ind.alternatives) {
      json jalt = {{"id", alt.alt_id},
                   {"utility", alt.utility},
                   {"social", alt.social}};
      if (!alt.label.empty()) jalt["label"] = alt.label;
      jind["alternatives"].push_back(std::move(jalt));
    }
    doc["individuals"].push_back(std::move(jind));
  }
  doc["metadata"] = json::object();
  for (const auto& [key, value] : instance.metadata()) {
    doc["metadata"][key] = value;
  }
  out << doc.dump() << '\n';
}

void save_instance(const std::filesystem::path& path, const Instance& instance,
                   FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  if (format == FileFormat::kJson) {
    write_instance_json(out, instance);
  } else {
    write_instance_csv(out, instance);
  }
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace incentive
