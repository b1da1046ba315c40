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

#ifndef UFC_SURFACE_HPP_
#define UFC_SURFACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/diagnostic.hpp"
#include "ufc/environment.hpp"
#include "ufc/lexer.hpp"
#include "ufc/term.hpp"

namespace ufc {

inline constexpr std::uint32_t kMaxNumeral = 999;

/// Parsed term with named variables. Builtins are atoms; whether they are
/// applied to enough arguments is decided during elaboration.
struct SurfaceTerm {
  enum class Tag { Name, Numeral, Builtin, Universe, App, Fun, Pi, Arrow, Sig };

  Tag tag = Tag::Name;
  std::string text;          // Name/Builtin text, binder name for Fun/Pi/Sig
  std::uint32_t number = 0;  // Numeral value or Universe level
  std::vector<SurfaceTerm> args;  // App: fn,arg; Fun/Pi/Sig: domain,body; Arrow: from,to
  Span span;
};

struct SurfaceDecl {
  enum class Kind { Def, Postulate };

  Kind kind = Kind::Def;
  std::string name;
  Span name_span;
  SurfaceTerm type;
  std::optional<SurfaceTerm> body;
  Span span;
};

struct ParseResult {
  std::vector<SurfaceDecl> decls;
  std::vector<Diagnostic> diagnostics;
};

/// Parses a whole token stream, throwing on the first error.
std::vector<SurfaceDecl> parse_module(const std::vector<Token>& tokens);

/// Parses with per-declaration recovery: a malformed declaration is skipped
/// up to the next `;` and reported.
ParseResult parse_module_recovering(const std::vector<Token>& tokens);

/// Parses a single term (used by tests and the printer round trip).
SurfaceTerm parse_term(const std::vector<Token>& tokens);

/// Resolves names against binders (innermost wins) and then `env`.
Declaration elaborate(const SurfaceDecl& decl, const Environment& env);

/// Elaborates a term in a scope of named binders (outermost first).
Term elaborate_term(const SurfaceTerm& t, const Environment& env,
                    std::vector<std::string> scope = {});

/// Pretty-prints a core term. `names` gives display names for the free
/// variables, outermost first. Output re-parses to an alpha_eq term.
std::string print(const Term& t, const std::vector<std::string>& names = {});

/// Picks `base`, `base'`, `base''`, ... avoiding `taken` and keywords.
std::string fresh_name(std::string base, const std::vector<std::string>& taken);

/// Base display name for a binder over `domain` ("A" for universes, "f" for
/// functions, "e" for identities, otherwise "x").
std::string binder_base_name(const Term& domain);

}  // namespace ufc

#endif  // UFC_SURFACE_HPP_
