/* Copyright 2026 The ufc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef UFC_CLI_HPP_
#define UFC_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ufc/environment.hpp"

namespace ufc::cli {

enum class Command { Check, Norm, Trace, Axioms };

enum ExitCode : int {
  kOk = 0,
  kTypeError = 1,
  kParseError = 2,
  kUsageError = 3,
  kFuelExhausted = 4,
};

inline constexpr std::size_t kTraceCap = 10'000;

struct CliConfig {
  Command command = Command::Check;
  std::vector<std::string> files;
  std::optional<std::string> def_name;
  std::uint32_t max_level = kDefaultMaxLevel;
  std::uint64_t fuel = kDefaultFuel;
  bool color = true;
};

/// Runs one command. Results go to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors map to kUsageError.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ufc::cli

#endif  // UFC_CLI_HPP_
