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

#ifndef INCENTIVE_ERRORS_H_
#define INCENTIVE_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace incentive {

// Malformed or inconsistent input data (instance files, generator configs).
// Carries the 1-based line number when the error comes from a text file.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message,
                      std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " +
                                      message
                                : message),
        line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

// A computation would exceed a configured size cap (oracle state tables,
// enumeration products).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace incentive

#endif  // INCENTIVE_ERRORS_H_
