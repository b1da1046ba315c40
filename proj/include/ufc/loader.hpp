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

#ifndef UFC_LOADER_HPP_
#define UFC_LOADER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ufc/diagnostic.hpp"
#include "ufc/environment.hpp"

namespace ufc {

struct Source {
  std::string path;
  std::string text;
};

struct DeclOutcome {
  enum class State { Checked, Failed, Skipped };

  std::string name;
  std::string file;
  State state = State::Checked;
  std::optional<Diagnostic> diagnostic;  // Failed only
  std::string skipped_because;           // Skipped only: the failed dependency
};

/// Result of loading a list of files into one flat namespace.
struct LoadResult {
  Environment env;
  std::vector<Diagnostic> diagnostics;
  std::vector<DeclOutcome> outcomes;
  std::vector<std::string> io_errors;

  bool ok() const { return diagnostics.empty() && io_errors.empty(); }
  bool has(DiagnosticKind kind) const;
};

/// Parses, elaborates, and checks every declaration in order. A failing
/// declaration is reported and left out; later declarations that mention it
/// are skipped silently.
LoadResult load_sources(const std::vector<Source>& sources, KernelConfig config = {});

/// Reads the files, then behaves like load_sources. Unreadable files are
/// reported in io_errors and contribute no declarations.
LoadResult load_files(const std::vector<std::string>& paths, KernelConfig config = {});

}  // namespace ufc

#endif  // UFC_LOADER_HPP_
