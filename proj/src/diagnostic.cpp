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

#include "ufc/diagnostic.hpp"

namespace ufc {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::TypeMismatch: return "TypeMismatch";
    case DiagnosticKind::UnboundName: return "UnboundName";
    case DiagnosticKind::NotAFunction: return "NotAFunction";
    case DiagnosticKind::NotAUniverse: return "NotAUniverse";
    case DiagnosticKind::IdCarrierMismatch: return "IdCarrierMismatch";
    case DiagnosticKind::UniverseOverflow: return "UniverseOverflow";
    case DiagnosticKind::MotiveShape: return "MotiveShape";
    case DiagnosticKind::Parse: return "Parse";
    case DiagnosticKind::FuelExhausted: return "FuelExhausted";
    case DiagnosticKind::DuplicateDefinition: return "DuplicateDefinition";
  }
  return "Unknown";
}

std::string render(const Diagnostic& d, bool color) {
  std::string out = d.file.empty() ? std::string("<input>") : d.file;
  out += ':' + std::to_string(d.span.line) + ':' + std::to_string(d.span.column) + ": ";
  if (color) out += "\x1b[1;31m";
  out += to_string(d.kind);
  if (color) out += "\x1b[0m";
  out += ": ";
  if (d.expected && d.actual) {
    out += "expected " + *d.expected + ", got " + *d.actual;
  } else {
    out += d.message;
  }
  return out;
}

}  // namespace ufc
