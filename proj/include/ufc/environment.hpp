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

#ifndef UFC_ENVIRONMENT_HPP_
#define UFC_ENVIRONMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/span.hpp"
#include "ufc/term.hpp"

namespace ufc {

inline constexpr std::uint32_t kDefaultMaxLevel = 4;
inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

struct KernelConfig {
  std::uint32_t max_level = kDefaultMaxLevel;  // largest usable universe index K
  std::uint64_t fuel = kDefaultFuel;           // reduction steps per top-level query
};

/// A named global: a definition (type + body) or a postulate (type only).
struct Declaration {
  std::string name;
  Term type;
  std::optional<Term> body;
  std::set<std::string> axioms;  // transitive postulate dependencies
  std::string file;
  Span span;

  bool is_postulate() const { return !body.has_value(); }
};

/// Ordered global declarations. Every Global inside a declaration refers to an
/// earlier entry; treat an Environment as immutable once it is shared.
class Environment {
 public:
  Environment() = default;
  explicit Environment(KernelConfig config) : config_(config) {}

  const KernelConfig& config() const { return config_; }

  const Declaration* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const std::vector<Declaration>& decls() const { return decls_; }
  std::size_t size() const { return decls_.size(); }

  /// Appends without checking; check_decl is the validating entry point.
  void add(Declaration decl);

 private:
  KernelConfig config_;
  std::vector<Declaration> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace ufc

#endif  // UFC_ENVIRONMENT_HPP_
