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

#ifndef UFC_TERM_HPP_
#define UFC_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/span.hpp"

namespace ufc {

// Core term language. Variables are binding-distance indices (innermost
// binder is 0); names survive only in the surface layer.
enum class Kind : std::uint8_t {
  Var,
  Global,
  Universe,
  Pi,        // domain, codomain[binds 1]
  Lambda,    // domain, body[binds 1]
  App,       // fn, arg
  Sigma,     // first, second[binds 1]
  Mk,        // first, second
  SigElim,   // first, family[binds 1], motive, branch, scrutinee
  Nat,
  Zero,
  Suc,       // pred
  NatElim,   // motive, base, step, scrutinee
  Id,        // carrier, lhs, rhs
  Refl,      // carrier, point
  J,         // carrier, base-point, motive, base-case, endpoint, path
  Empty,
  EmptyElim, // motive, scrutinee
  Unit,
  Triv,
  UnitElim,  // motive, base, scrutinee
  Bool,
  Yes,
  No,
  BoolElim,  // motive, yes-branch, no-branch, scrutinee
  SumTy,     // left, right
  Inl,       // left, right, payload
  Inr,       // left, right, payload
  SumElim,   // left, right, motive, left-branch, right-branch, scrutinee
};

inline constexpr std::size_t kKindCount = static_cast<std::size_t>(Kind::SumElim) + 1;

/// Number of children a node of this kind carries (Var/Global/Universe: 0).
std::size_t arity(Kind kind);

/// Number of variables bound by the binder at `child` (0 or 1).
unsigned binds(Kind kind, std::size_t child);

/// Index of the scrutinee child for eliminators, or -1.
int scrutinee_index(Kind kind);

/// Surface keyword for built-in forms ("natElim", "refl", ...). Empty for
/// Var/Global/Universe/Pi/Lambda/App/Sigma.
std::string_view keyword(Kind kind);

bool is_eliminator(Kind kind);
bool is_constructor(Kind kind);

class Term;

namespace detail {
struct Node;
}  // namespace detail

/// Immutable, shared core term. Copying a Term is cheap.
class Term {
 public:
  Term();  // Zero; a default exists only so containers can hold Terms.

  static Term var(std::size_t index, Span span = {});
  static Term global(std::string name, Span span = {});
  static Term universe(std::uint32_t level, Span span = {});
  static Term make(Kind kind, std::vector<Term> children, Span span = {});
  static Term make(Kind kind, std::initializer_list<Term> children) {
    return make(kind, std::vector<Term>(children));
  }
  static Term constant(Kind kind, Span span = {}) { return make(kind, std::vector<Term>{}, span); }

  Kind kind() const;
  std::size_t index() const;
  std::uint32_t level() const;
  const std::string& name() const;
  std::span<const Term> children() const;
  const Term& operator[](std::size_t i) const { return children()[i]; }
  Span span() const;

  /// One more than the largest free variable index, 0 for closed terms.
  std::size_t free_bound() const;
  std::size_t size() const;

  bool is(Kind k) const { return kind() == k; }
  bool same_node(const Term& other) const { return node_ == other.node_; }

  /// Copy with children replaced (same kind, scalar, and span).
  Term with_children(std::vector<Term> children) const;
  Term with_span(Span span) const;

 private:
  explicit Term(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<detail::Node> build(Kind kind, std::vector<Term> children, Span span);
  std::shared_ptr<const detail::Node> node_;
};

// Convenience constructors used by tests, the elaborator, and the checker.
Term app(Term fn, Term arg);
Term app(Term fn, std::initializer_list<Term> args);
Term pi(Term domain, Term codomain);
Term lam(Term domain, Term body);
Term sigma(Term first, Term second);
Term suc(Term pred);
Term numeral(std::uint64_t n);

/// Adds `amount` to every variable with index >= cutoff. Throws
/// std::logic_error if an index would become negative.
Term shift(const Term& t, std::int64_t amount, std::size_t cutoff = 0);

/// Instantiates the outermost binder of `scope` with `replacement`.
Term subst(const Term& scope, const Term& replacement);

/// Structural equality ignoring spans; α-equivalence under indices.
bool alpha_eq(const Term& a, const Term& b);

/// True when Var `index` (relative to t's top level) occurs in t.
bool mentions_var(const Term& t, std::size_t index);

/// Returns n when t is suc^n(zero), or -1.
std::int64_t as_numeral(const Term& t);

void collect_globals(const Term& t, std::set<std::string>& out);

/// Debug rendering of the raw tree, e.g. "Lambda(Nat, Var 0)".
std::string debug_string(const Term& t);

}  // namespace ufc

#endif  // UFC_TERM_HPP_
