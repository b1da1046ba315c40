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

#ifndef UFC_DIAGNOSTIC_HPP_
#define UFC_DIAGNOSTIC_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ufc/span.hpp"

namespace ufc {

enum class DiagnosticKind {
  TypeMismatch,
  UnboundName,
  NotAFunction,
  NotAUniverse,
  IdCarrierMismatch,
  UniverseOverflow,
  MotiveShape,
  Parse,
  FuelExhausted,
  DuplicateDefinition,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::Parse;
  std::string file;
  Span span;
  std::optional<std::string> expected;  // printed term
  std::optional<std::string> actual;    // printed term
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// `file:line:col: Kind: expected E, got A` for mismatches, otherwise
/// `file:line:col: Kind: message`. With `color`, the kind is highlighted.
std::string render(const Diagnostic& d, bool color = false);

/// Thrown by the front end and the checker; carries a finished Diagnostic.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d) : std::runtime_error(render(d)), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }
  Diagnostic& diagnostic() { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

[[noreturn]] inline void fail(DiagnosticKind kind, Span span, std::string message) {
  Diagnostic d;
  d.kind = kind;
  d.span = span;
  d.message = std::move(message);
  throw Error(std::move(d));
}

}  // namespace ufc

#endif  // UFC_DIAGNOSTIC_HPP_
