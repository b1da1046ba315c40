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

#include "ufc/loader.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ufc/checker.hpp"
#include "ufc/lexer.hpp"
#include "ufc/surface.hpp"

namespace ufc {

bool LoadResult::has(DiagnosticKind kind) const {
  for (const Diagnostic& d : diagnostics) {
    if (d.kind == kind) return true;
  }
  return false;
}

namespace {

// Name of a previously failed declaration mentioned in `decl`, if any.
std::optional<std::string> failed_dependency(const SurfaceTerm& t,
                                             const std::set<std::string>& failed,
                                             std::vector<std::string>& bound) {
  using Tag = SurfaceTerm::Tag;
  if (t.tag == Tag::Name && failed.count(t.text) &&
      std::find(bound.begin(), bound.end(), t.text) == bound.end()) {
    return t.text;
  }
  bool binder = t.tag == Tag::Fun || t.tag == Tag::Pi || t.tag == Tag::Sig;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    bool push = binder && i == 1;
    if (push) bound.push_back(t.text);
    auto hit = failed_dependency(t.args[i], failed, bound);
    if (push) bound.pop_back();
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<std::string> failed_dependency(const SurfaceDecl& d,
                                             const std::set<std::string>& failed) {
  std::vector<std::string> bound;
  if (auto hit = failed_dependency(d.type, failed, bound)) return hit;
  if (d.body) return failed_dependency(*d.body, failed, bound);
  return std::nullopt;
}

}  // namespace

LoadResult load_sources(const std::vector<Source>& sources, KernelConfig config) {
  LoadResult result;
  result.env = Environment(config);
  std::set<std::string> failed;

  for (const Source& src : sources) {
    ParseResult parsed;
    try {
      parsed = parse_module_recovering(tokenize(src.text));
    } catch (Error& e) {
      e.diagnostic().file = src.path;
      result.diagnostics.push_back(e.diagnostic());
      continue;
    }
    for (Diagnostic& d : parsed.diagnostics) {
      d.file = src.path;
      result.diagnostics.push_back(std::move(d));
    }

    for (const SurfaceDecl& sd : parsed.decls) {
      DeclOutcome outcome;
      outcome.name = sd.name;
      outcome.file = src.path;

      if (std::optional<std::string> dep = failed_dependency(sd, failed)) {
        outcome.state = DeclOutcome::State::Skipped;
        outcome.skipped_because = *dep;
        failed.insert(sd.name);
        result.outcomes.push_back(std::move(outcome));
        continue;
      }

      try {
        Declaration decl = elaborate(sd, result.env);
        decl.file = src.path;
        result.env = check_decl(result.env, std::move(decl));
      } catch (Error& e) {
        Diagnostic& d = e.diagnostic();
        d.file = src.path;
        if (!d.span.known()) d.span = sd.span;
        outcome.state = DeclOutcome::State::Failed;
        outcome.diagnostic = d;
        result.diagnostics.push_back(d);
        if (d.kind != DiagnosticKind::DuplicateDefinition) failed.insert(sd.name);
      }
      result.outcomes.push_back(std::move(outcome));
    }
  }
  return result;
}

LoadResult load_files(const std::vector<std::string>& paths, KernelConfig config) {
  std::vector<Source> sources;
  std::vector<std::string> io_errors;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      io_errors.push_back(path + ": cannot open file");
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.push_back(Source{path, buf.str()});
  }
  LoadResult result = load_sources(sources, config);
  result.io_errors = std::move(io_errors);
  return result;
}

}  // namespace ufc
