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

#ifndef UFC_CHECKER_HPP_
#define UFC_CHECKER_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/diagnostic.hpp"
#include "ufc/environment.hpp"
#include "ufc/evaluator.hpp"
#include "ufc/term.hpp"

namespace ufc {

/// Local typing assumptions, outermost first. Entry k from the end is the
/// variable with index k; its type is stored relative to its own prefix.
class Context {
 public:
  struct Entry {
    std::string name;
    Term type;
  };

  std::size_t depth() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Type of Var `index`, shifted to be valid in the whole context.
  Term lookup(std::size_t index) const;

  /// Extends with a fresh display name derived from `type`.
  Context extend(Term type) const;
  Context extend(std::string name, Term type) const;

  std::vector<std::string> names() const;

 private:
  std::vector<Entry> entries_;
};

/// Bidirectional checker over a frozen environment. Errors are thrown as
/// ufc::Error; FuelExhausted propagates from conversion.
class Checker {
 public:
  explicit Checker(const Environment& env) : env_(env), eval_(env) {}

  Term infer(const Context& ctx, const Term& t);
  void check(const Context& ctx, const Term& t, const Term& expected);

  /// Level i such that `type : U i`; NotAUniverse otherwise.
  std::uint32_t universe_of(const Context& ctx, const Term& type);

  Evaluator& evaluator() { return eval_; }

 private:
  Term infer_app(const Context& ctx, const Term& t);
  std::uint32_t check_motive(const Context& ctx, const Term& motive, const Term& domain,
                             Span where);
  std::uint32_t check_id_motive(const Context& ctx, const Term& motive, const Term& carrier,
                                const Term& base);
  void check_endpoint(const Context& ctx, const Term& point, const Term& carrier);
  std::uint32_t require_level(std::uint32_t level, Span where);

  [[noreturn]] void mismatch(const Context& ctx, DiagnosticKind kind, Span where,
                             const Term& expected, const Term& actual, std::string message);
  Span span_of(const Term& t) const;

  const Environment& env_;
  Evaluator eval_;
  std::vector<Span> spans_;  // enclosing source spans, innermost last
};

Term infer(const Environment& env, const Context& ctx, const Term& t);
void check(const Environment& env, const Context& ctx, const Term& t, const Term& expected);

/// Checks `decl` against `env` and returns the extended environment. The
/// declaration's axiom set is recomputed from the globals it references.
Environment check_decl(Environment env, Declaration decl);

/// Transitive postulate dependencies of a declared name. Throws ufc::Error
/// (UnboundName) if the name is unknown.
const std::set<std::string>& axioms_of(const Environment& env, std::string_view name);

}  // namespace ufc

#endif  // UFC_CHECKER_HPP_
