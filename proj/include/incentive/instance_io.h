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

#ifndef INCENTIVE_INSTANCE_IO_H_
#define INCENTIVE_INSTANCE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "incentive/instance.h"

namespace incentive {

enum class FileFormat { kCsv, kJson };

// "csv" or "json" (case-sensitive). Throws InputError otherwise.
FileFormat parse_format(std::string_view name);
// From the file extension; defaults to CSV for anything but ".json".
FileFormat format_from_path(const std::filesystem::path& path);

// CSV: header `ind_id,alt_id,utility,social[,label]`, one row per
// alternative. JSON: {"individuals":[{"id":..,"alternatives":[{"id":..,
// "utility":..,"social":..,"label":..}]}],"metadata":{..}}.
Instance read_instance_csv(std::istream& in);
Instance read_instance_json(std::istream& in);
Instance load_instance(const std::filesystem::path& path, FileFormat format);

// Numbers are written in shortest round-trip form, so loading a saved
// instance gives back an equal Instance.
void write_instance_csv(std::ostream& out, const Instance& instance);
void write_instance_json(std::ostream& out, const Instance& instance);
void save_instance(const std::filesystem::path& path, const Instance& instance,
                   FileFormat format);

// Shortest decimal text that parses back to exactly `value`.
std::string format_exact(double value);

}  // namespace incentive

#endif  // INCENTIVE_INSTANCE_IO_H_
