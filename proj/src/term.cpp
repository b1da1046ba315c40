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

#include "ufc/term.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ufc {

namespace detail {

struct Node {
  Kind kind = Kind::Zero;
  std::uint32_t scalar = 0;  // Var index or Universe level
  std::string name;          // Global name
  std::vector<Term> children;
  Span span;
  std::size_t free_bound = 0;
  std::size_t size = 1;
};

}  // namespace detail

namespace {

struct KindInfo {
  std::size_t arity;
  int binder_child;  // child that binds one variable, or -1
  int scrutinee;     // eliminator scrutinee child, or -1
  std::string_view keyword;
};

constexpr std::array<KindInfo, kKindCount> kKindTable = {{
    {0, -1, -1, ""},           // Var
    {0, -1, -1, ""},           // Global
    {0, -1, -1, ""},           // Universe
    {2, 1, -1, ""},            // Pi
    {2, 1, -1, ""},            // Lambda
    {2, -1, -1, ""},           // App
    {2, 1, -1, ""},            // Sigma
    {2, -1, -1, "mk"},         // Mk
    {5, 1, 4, "sigElim"},      // SigElim
    {0, -1, -1, "Nat"},        // Nat
    {0, -1, -1, "zero"},       // Zero
    {1, -1, -1, "suc"},        // Suc
    {4, -1, 3, "natElim"},     // NatElim
    {3, -1, -1, "Id"},         // Id
    {2, -1, -1, "refl"},       // Refl
    {6, -1, 5, "J"},           // J
    {0, -1, -1, "Empty"},      // Empty
    {2, -1, 1, "emptyElim"},   // EmptyElim
    {0, -1, -1, "Unit"},       // Unit
    {0, -1, -1, "triv"},       // Triv
    {3, -1, 2, "unitElim"},    // UnitElim
    {0, -1, -1, "Bool"},       // Bool
    {0, -1, -1, "yes"},        // Yes
    {0, -1, -1, "no"},         // No
    {4, -1, 3, "boolElim"},    // BoolElim
    {2, -1, -1, "Sum"},        // SumTy
    {3, -1, -1, "inl"},        // Inl
    {3, -1, -1, "inr"},        // Inr
    {6, -1, 5, "sumElim"},     // SumElim
}};

const KindInfo& info(Kind kind) { return kKindTable[static_cast<std::size_t>(kind)]; }

const std::shared_ptr<const detail::Node>& zero_node() {
  static const auto node = [] {
    auto n = std::make_shared<detail::Node>();
    n->kind = Kind::Zero;
    return std::shared_ptr<const detail::Node>(std::move(n));
  }();
  return node;
}

}  // namespace

std::size_t arity(Kind kind) { return info(kind).arity; }

unsigned binds(Kind kind, std::size_t child) {
  return info(kind).binder_child == static_cast<int>(child) ? 1u : 0u;
}

int scrutinee_index(Kind kind) { return info(kind).scrutinee; }

std::string_view keyword(Kind kind) { return info(kind).keyword; }

bool is_eliminator(Kind kind) { return info(kind).scrutinee >= 0; }

bool is_constructor(Kind kind) {
  switch (kind) {
    case Kind::Lambda:
    case Kind::Mk:
    case Kind::Zero:
    case Kind::Suc:
    case Kind::Refl:
    case Kind::Triv:
    case Kind::Yes:
    case Kind::No:
    case Kind::Inl:
    case Kind::Inr:
      return true;
    default:
      return false;
  }
}

Term::Term() : node_(zero_node()) {}

Term Term::var(std::size_t index, Span span) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Var;
  n->scalar = static_cast<std::uint32_t>(index);
  n->span = span;
  n->free_bound = index + 1;
  return Term(std::move(n));
}

Term Term::global(std::string name, Span span) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Global;
  n->name = std::move(name);
  n->span = span;
  return Term(std::move(n));
}

Term Term::universe(std::uint32_t level, Span span) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Universe;
  n->scalar = level;
  n->span = span;
  return Term(std::move(n));
}

Term Term::make(Kind kind, std::vector<Term> children, Span span) {
  if (kind == Kind::Var || kind == Kind::Global || kind == Kind::Universe ||
      children.size() != arity(kind)) {
    throw std::logic_error("Term::make: wrong arity for " + std::string(keyword(kind)));
  }
  if (children.empty() && !span.known() && kind == Kind::Zero) return Term();
  return Term(build(kind, std::move(children), span));
}

std::shared_ptr<detail::Node> Term::build(Kind kind, std::vector<Term> children, Span span) {
  auto n = std::make_shared<detail::Node>();
  n->kind = kind;
  n->span = span;
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::size_t fb = children[i].free_bound();
    unsigned b = binds(kind, i);
    fb = fb > b ? fb - b : 0;
    n->free_bound = std::max(n->free_bound, fb);
    n->size += children[i].size();
  }
  n->children = std::move(children);
  return n;
}

Kind Term::kind() const { return node_->kind; }
std::size_t Term::index() const { return node_->scalar; }
std::uint32_t Term::level() const { return node_->scalar; }
const std::string& Term::name() const { return node_->name; }
std::span<const Term> Term::children() const { return node_->children; }
Span Term::span() const { return node_->span; }
std::size_t Term::free_bound() const { return node_->free_bound; }
std::size_t Term::size() const { return node_->size; }

Term Term::with_children(std::vector<Term> children) const {
  return make(kind(), std::move(children), span());
}

Term Term::with_span(Span span) const {
  auto n = std::make_shared<detail::Node>(*node_);
  n->span = span;
  return Term(std::move(n));
}

Term app(Term fn, Term arg) { return Term::make(Kind::App, {std::move(fn), std::move(arg)}); }

Term app(Term fn, std::initializer_list<Term> args) {
  for (const Term& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term pi(Term domain, Term codomain) {
  return Term::make(Kind::Pi, {std::move(domain), std::move(codomain)});
}

Term lam(Term domain, Term body) {
  return Term::make(Kind::Lambda, {std::move(domain), std::move(body)});
}

Term sigma(Term first, Term second) {
  return Term::make(Kind::Sigma, {std::move(first), std::move(second)});
}

Term suc(Term pred) { return Term::make(Kind::Suc, {std::move(pred)}); }

Term numeral(std::uint64_t n) {
  Term t = Term::constant(Kind::Zero);
  for (std::uint64_t i = 0; i < n; ++i) t = suc(t);
  return t;
}

namespace {

Term shift_rec(const Term& t, std::int64_t amount, std::size_t cutoff) {
  if (t.free_bound() <= cutoff) return t;
  if (t.kind() == Kind::Var) {
    auto shifted = static_cast<std::int64_t>(t.index()) + amount;
    if (shifted < 0) throw std::logic_error("shift: variable index underflow");
    return Term::var(static_cast<std::size_t>(shifted), t.span());
  }
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    kids.push_back(shift_rec(t[i], amount, cutoff + binds(t.kind(), i)));
  }
  return t.with_children(std::move(kids));
}

Term subst_rec(const Term& t, std::size_t depth, const Term& replacement) {
  if (t.free_bound() <= depth) return t;
  if (t.kind() == Kind::Var) {
    if (t.index() == depth) return shift_rec(replacement, static_cast<std::int64_t>(depth), 0);
    return Term::var(t.index() - 1, t.span());
  }
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    kids.push_back(subst_rec(t[i], depth + binds(t.kind(), i), replacement));
  }
  return t.with_children(std::move(kids));
}

bool mentions_rec(const Term& t, std::size_t index) {
  if (t.free_bound() <= index) return false;
  if (t.kind() == Kind::Var) return t.index() == index;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (mentions_rec(t[i], index + binds(t.kind(), i))) return true;
  }
  return false;
}

}  // namespace

Term shift(const Term& t, std::int64_t amount, std::size_t cutoff) {
  if (amount == 0) return t;
  return shift_rec(t, amount, cutoff);
}

Term subst(const Term& scope, const Term& replacement) { return subst_rec(scope, 0, replacement); }

bool alpha_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Kind::Var:
      return a.index() == b.index();
    case Kind::Universe:
      return a.level() == b.level();
    case Kind::Global:
      return a.name() == b.name();
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!alpha_eq(a[i], b[i])) return false;
  }
  return true;
}

bool mentions_var(const Term& t, std::size_t index) { return mentions_rec(t, index); }

std::int64_t as_numeral(const Term& t) {
  std::int64_t n = 0;
  const Term* cur = &t;
  while (cur->kind() == Kind::Suc) {
    ++n;
    cur = &(*cur)[0];
  }
  return cur->kind() == Kind::Zero ? n : -1;
}

void collect_globals(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Kind::Global) {
    out.insert(t.name());
    return;
  }
  for (const Term& c : t.children()) collect_globals(c, out);
}

namespace {

std::string_view debug_name(Kind kind) {
  switch (kind) {
    case Kind::Pi: return "Pi";
    case Kind::Lambda: return "Lambda";
    case Kind::App: return "App";
    case Kind::Sigma: return "Sigma";
    case Kind::Mk: return "Mk";
    case Kind::SigElim: return "SigElim";
    case Kind::Nat: return "Nat";
    case Kind::Zero: return "Zero";
    case Kind::Suc: return "Suc";
    case Kind::NatElim: return "NatElim";
    case Kind::Id: return "Id";
    case Kind::Refl: return "Refl";
    case Kind::J: return "J";
    case Kind::Empty: return "Empty";
    case Kind::EmptyElim: return "EmptyElim";
    case Kind::Unit: return "Unit";
    case Kind::Triv: return "Triv";
    case Kind::UnitElim: return "UnitElim";
    case Kind::Bool: return "Bool";
    case Kind::Yes: return "Yes";
    case Kind::No: return "No";
    case Kind::BoolElim: return "BoolElim";
    case Kind::SumTy: return "SumTy";
    case Kind::Inl: return "Inl";
    case Kind::Inr: return "Inr";
    case Kind::SumElim: return "SumElim";
    default: return "?";
  }
}

}  // namespace

std::string debug_string(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return "Var " + std::to_string(t.index());
    case Kind::Global:
      return "Global \"" + t.name() + "\"";
    case Kind::Universe:
      return "Universe " + std::to_string(t.level());
    default:
      break;
  }
  std::string out(debug_name(t.kind()));
  if (t.children().empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ", ";
    out += debug_string(t[i]);
  }
  out += ')';
  return out;
}

}  // namespace ufc
