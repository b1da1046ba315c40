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

#include <algorithm>
#include <array>
#include <utility>

#include "ufc/surface.hpp"

namespace ufc {

namespace {

using Tag = SurfaceTerm::Tag;

struct BuiltinInfo {
  std::string_view keyword;
  Kind kind;
};

constexpr std::array<BuiltinInfo, 22> kBuiltins = {{
    {"Nat", Kind::Nat},         {"zero", Kind::Zero},         {"suc", Kind::Suc},
    {"natElim", Kind::NatElim}, {"Id", Kind::Id},             {"refl", Kind::Refl},
    {"J", Kind::J},             {"Empty", Kind::Empty},       {"emptyElim", Kind::EmptyElim},
    {"Unit", Kind::Unit},       {"triv", Kind::Triv},         {"unitElim", Kind::UnitElim},
    {"Bool", Kind::Bool},       {"yes", Kind::Yes},           {"no", Kind::No},
    {"boolElim", Kind::BoolElim}, {"mk", Kind::Mk},           {"sigElim", Kind::SigElim},
    {"Sum", Kind::SumTy},       {"inl", Kind::Inl},           {"inr", Kind::Inr},
    {"sumElim", Kind::SumElim},
}};

Kind builtin_kind(std::string_view text) {
  for (const BuiltinInfo& b : kBuiltins) {
    if (b.keyword == text) return b.kind;
  }
  return Kind::Var;
}

class Elaborator {
 public:
  Elaborator(const Environment& env, std::vector<std::string> scope)
      : env_(env), scope_(std::move(scope)) {}

  Term elab(const SurfaceTerm& t) {
    switch (t.tag) {
      case Tag::Name:
        return resolve(t);
      case Tag::Numeral: {
        Term out = Term::constant(Kind::Zero, t.span);
        for (std::uint32_t i = 0; i < t.number; ++i) out = Term::make(Kind::Suc, {out}, t.span);
        return out;
      }
      case Tag::Universe:
        return Term::universe(t.number, t.span);
      case Tag::Builtin:
      case Tag::App:
        return spine(t);
      case Tag::Fun:
        return binder(Kind::Lambda, t, t.text);
      case Tag::Pi:
        return binder(Kind::Pi, t, t.text);
      case Tag::Sig:
        return binder(Kind::Sigma, t, t.text);
      case Tag::Arrow:
        // The empty name can never be referenced from source.
        return binder(Kind::Pi, t, "");
    }
    fail(DiagnosticKind::Parse, t.span, "unknown surface form");
  }

 private:
  Term resolve(const SurfaceTerm& t) {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == t.text) return Term::var(scope_.size() - 1 - i, t.span);
    }
    if (env_.contains(t.text)) return Term::global(t.text, t.span);
    fail(DiagnosticKind::UnboundName, t.span, "unbound name '" + t.text + "'");
  }

  Term binder(Kind kind, const SurfaceTerm& t, const std::string& name) {
    Term domain = elab(t.args[0]);
    scope_.push_back(name);
    Term body = elab(t.args[1]);
    scope_.pop_back();
    return Term::make(kind, {std::move(domain), std::move(body)}, t.span);
  }

  // Elaborates a family over `first` into a body binding one variable.
  Term family(const SurfaceTerm& s, const Term& first) {
    if (s.tag == Tag::Fun) {
      Term annotated = elab(s.args[0]);
      if (alpha_eq(annotated, first)) {
        scope_.push_back(s.text);
        Term body = elab(s.args[1]);
        scope_.pop_back();
        return body;
      }
    }
    Term fn = elab(s);
    return Term::make(Kind::App, {shift(fn, 1, 0), Term::var(0, s.span)}, s.span);
  }

  Term spine(const SurfaceTerm& t) {
    std::vector<const SurfaceTerm*> args;
    const SurfaceTerm* head = &t;
    while (head->tag == Tag::App) {
      args.push_back(&head->args[1]);
      head = &head->args[0];
    }
    std::reverse(args.begin(), args.end());

    Term out;
    std::size_t used = 0;
    if (head->tag == Tag::Builtin) {
      Kind kind = builtin_kind(head->text);
      std::size_t n = arity(kind);
      if (args.size() < n) {
        fail(DiagnosticKind::Parse, t.span,
             "'" + head->text + "' expects " + std::to_string(n) + " argument" +
                 (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
      }
      std::vector<Term> kids;
      Span span = head->span;
      for (std::size_t i = 0; i < n; ++i) {
        if (kind == Kind::SigElim && i == 1) {
          kids.push_back(family(*args[i], kids[0]));
        } else {
          kids.push_back(elab(*args[i]));
        }
        span = cover(span, args[i]->span);
      }
      out = Term::make(kind, std::move(kids), span);
      used = n;
    } else {
      out = elab(*head);
    }
    Span span = out.span();
    for (std::size_t i = used; i < args.size(); ++i) {
      span = cover(span, args[i]->span);
      out = Term::make(Kind::App, {out, elab(*args[i])}, span);
    }
    return out;
  }

  const Environment& env_;
  std::vector<std::string> scope_;
};

}  // namespace

Term elaborate_term(const SurfaceTerm& t, const Environment& env, std::vector<std::string> scope) {
  return Elaborator(env, std::move(scope)).elab(t);
}

Declaration elaborate(const SurfaceDecl& decl, const Environment& env) {
  if (env.contains(decl.name)) {
    fail(DiagnosticKind::DuplicateDefinition, decl.name_span,
         "'" + decl.name + "' is already defined");
  }
  Declaration out;
  out.name = decl.name;
  out.span = decl.span;
  out.type = elaborate_term(decl.type, env);
  if (decl.body) out.body = elaborate_term(*decl.body, env);
  return out;
}

}  // namespace ufc
