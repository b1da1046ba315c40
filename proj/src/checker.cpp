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

#include "ufc/checker.hpp"

#include <algorithm>

#include "ufc/surface.hpp"

namespace ufc {

Term Context::lookup(std::size_t index) const {
  const Entry& e = entries_[entries_.size() - 1 - index];
  return shift(e.type, static_cast<std::int64_t>(index + 1), 0);
}

Context Context::extend(Term type) const {
  std::string name = fresh_name(binder_base_name(type), names());
  return extend(std::move(name), std::move(type));
}

Context Context::extend(std::string name, Term type) const {
  Context out = *this;
  out.entries_.push_back(Entry{std::move(name), std::move(type)});
  return out;
}

std::vector<std::string> Context::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.name);
  return out;
}

namespace {

class SpanGuard {
 public:
  SpanGuard(std::vector<Span>& stack, Span span) : stack_(stack), pushed_(span.known()) {
    if (pushed_) stack_.push_back(span);
  }
  ~SpanGuard() {
    if (pushed_) stack_.pop_back();
  }
  SpanGuard(const SpanGuard&) = delete;
  SpanGuard& operator=(const SpanGuard&) = delete;

 private:
  std::vector<Span>& stack_;
  bool pushed_;
};

}  // namespace

Span Checker::span_of(const Term& t) const {
  if (t.span().known()) return t.span();
  return spans_.empty() ? Span{} : spans_.back();
}

void Checker::mismatch(const Context& ctx, DiagnosticKind kind, Span where, const Term& expected,
                       const Term& actual, std::string message) {
  Diagnostic d;
  d.kind = kind;
  d.span = where;
  d.expected = print(expected, ctx.names());
  d.actual = print(actual, ctx.names());
  d.message = std::move(message);
  throw Error(std::move(d));
}

std::uint32_t Checker::require_level(std::uint32_t level, Span where) {
  std::uint32_t max = env_.config().max_level;
  if (level > max) {
    fail(DiagnosticKind::UniverseOverflow, where,
         "universe U" + std::to_string(level) + " exceeds the maximum level U" +
             std::to_string(max));
  }
  return level;
}

std::uint32_t Checker::universe_of(const Context& ctx, const Term& type) {
  SpanGuard guard(spans_, type.span());
  Term sort = eval_.whnf(infer(ctx, type));
  if (!sort.is(Kind::Universe)) {
    Diagnostic d;
    d.kind = DiagnosticKind::NotAUniverse;
    d.span = span_of(type);
    d.message = "'" + print(type, ctx.names()) + "' is not a type; its type is " +
                print(sort, ctx.names());
    throw Error(std::move(d));
  }
  return sort.level();
}

std::uint32_t Checker::check_motive(const Context& ctx, const Term& motive, const Term& domain,
                                    Span where) {
  SpanGuard guard(spans_, motive.span());
  Term mt = eval_.whnf(infer(ctx, motive));
  auto bad = [&](const std::string& why) {
    Diagnostic d;
    d.kind = DiagnosticKind::MotiveShape;
    d.span = span_of(motive).known() ? span_of(motive) : where;
    d.expected = print(domain, ctx.names()) + " -> U_i";
    d.actual = print(mt, ctx.names());
    d.message = why;
    throw Error(std::move(d));
  };
  if (!mt.is(Kind::Pi)) bad("motive is not a function");
  if (!eval_.equal(mt[0], domain)) bad("motive has the wrong domain");
  Term cod = eval_.whnf(mt[1]);
  if (!cod.is(Kind::Universe)) bad("motive does not land in a universe");
  return cod.level();
}

std::uint32_t Checker::check_id_motive(const Context& ctx, const Term& motive,
                                       const Term& carrier, const Term& base) {
  SpanGuard guard(spans_, motive.span());
  Term mt = eval_.whnf(infer(ctx, motive));
  Term path_ty = Term::make(Kind::Id, {shift(carrier, 1, 0), shift(base, 1, 0), Term::var(0)});
  auto bad = [&](const std::string& why) {
    Diagnostic d;
    d.kind = DiagnosticKind::MotiveShape;
    d.span = span_of(motive);
    Context inner = ctx.extend(carrier);
    d.expected = print(carrier, ctx.names()) + " -> ... -> U_i with second domain " +
                 print(path_ty, inner.names());
    d.actual = print(mt, ctx.names());
    d.message = why;
    throw Error(std::move(d));
  };
  if (!mt.is(Kind::Pi)) bad("motive is not a function");
  if (!eval_.equal(mt[0], carrier)) bad("motive's first domain is not the carrier");
  Term inner = eval_.whnf(mt[1]);
  if (!inner.is(Kind::Pi)) bad("motive does not take a path argument");
  if (!eval_.equal(inner[0], path_ty)) bad("motive's second domain is not the path type");
  Term cod = eval_.whnf(inner[1]);
  if (!cod.is(Kind::Universe)) bad("motive does not land in a universe");
  return cod.level();
}

void Checker::check_endpoint(const Context& ctx, const Term& point, const Term& carrier) {
  try {
    check(ctx, point, carrier);
  } catch (Error& e) {
    if (e.diagnostic().kind == DiagnosticKind::TypeMismatch) {
      e.diagnostic().kind = DiagnosticKind::IdCarrierMismatch;
      e.diagnostic().message = "both endpoints of an identity type must inhabit its carrier";
    }
    throw;
  }
}

Term Checker::infer_app(const Context& ctx, const Term& t) {
  Term fn_ty = eval_.whnf(infer(ctx, t[0]));
  if (!fn_ty.is(Kind::Pi)) {
    Diagnostic d;
    d.kind = DiagnosticKind::NotAFunction;
    d.span = span_of(t[0]);
    d.message = "'" + print(t[0], ctx.names()) + "' has type " + print(fn_ty, ctx.names()) +
                " and cannot be applied";
    throw Error(std::move(d));
  }
  check(ctx, t[1], fn_ty[0]);
  return subst(fn_ty[1], t[1]);
}

Term Checker::infer(const Context& ctx, const Term& t) {
  SpanGuard guard(spans_, t.span());
  const Span where = span_of(t);
  auto U = [](std::uint32_t level) { return Term::universe(level); };
  auto motive_app = [](const Term& motive, const Term& arg) { return app(motive, arg); };

  switch (t.kind()) {
    case Kind::Var:
      if (t.index() >= ctx.depth()) {
        fail(DiagnosticKind::UnboundName, where, "variable index out of scope");
      }
      return ctx.lookup(t.index());
    case Kind::Global: {
      const Declaration* d = env_.find(t.name());
      if (d == nullptr) fail(DiagnosticKind::UnboundName, where, "unbound name '" + t.name() + "'");
      return d->type;
    }
    case Kind::Universe:
      return U(require_level(t.level() + 1, where));
    case Kind::Pi:
    case Kind::Sigma: {
      std::uint32_t i = universe_of(ctx, t[0]);
      std::uint32_t j = universe_of(ctx.extend(t[0]), t[1]);
      return U(std::max(i, j));
    }
    case Kind::Lambda: {
      universe_of(ctx, t[0]);
      Term body_ty = infer(ctx.extend(t[0]), t[1]);
      return pi(t[0], body_ty);
    }
    case Kind::App:
      return infer_app(ctx, t);
    case Kind::Mk: {
      // Only non-dependent pairs are inferable; dependent ones are checked.
      Term a = infer(ctx, t[0]);
      Term b = infer(ctx, t[1]);
      return sigma(a, shift(b, 1, 0));
    }
    case Kind::SigElim: {
      const Term& first = t[0];
      const Term& family = t[1];
      universe_of(ctx, first);
      universe_of(ctx.extend(first), family);
      Term total = sigma(first, family);
      check_motive(ctx, t[2], total, where);
      // branch : (x : first) -> (y : family x) -> motive (mk x y)
      Term branch_ty =
          pi(first, pi(family, app(shift(t[2], 2, 0),
                                   Term::make(Kind::Mk, {Term::var(1), Term::var(0)}))));
      check(ctx, t[3], branch_ty);
      check(ctx, t[4], total);
      return motive_app(t[2], t[4]);
    }
    case Kind::Nat:
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Bool:
      return U(0);
    case Kind::Zero:
      return Term::constant(Kind::Nat);
    case Kind::Suc:
      check(ctx, t[0], Term::constant(Kind::Nat));
      return Term::constant(Kind::Nat);
    case Kind::NatElim: {
      Term nat = Term::constant(Kind::Nat);
      check_motive(ctx, t[0], nat, where);
      check(ctx, t[1], motive_app(t[0], Term::constant(Kind::Zero)));
      // step : (m : Nat) -> motive m -> motive (suc m)
      Term step_ty = pi(nat, pi(app(shift(t[0], 1, 0), Term::var(0)),
                                app(shift(t[0], 2, 0), suc(Term::var(1)))));
      check(ctx, t[2], step_ty);
      check(ctx, t[3], nat);
      return motive_app(t[0], t[3]);
    }
    case Kind::Id: {
      std::uint32_t i = universe_of(ctx, t[0]);
      check_endpoint(ctx, t[1], t[0]);
      check_endpoint(ctx, t[2], t[0]);
      return U(i);
    }
    case Kind::Refl:
      universe_of(ctx, t[0]);
      check(ctx, t[1], t[0]);
      return Term::make(Kind::Id, {t[0], t[1], t[1]});
    case Kind::J: {
      const Term& carrier = t[0];
      const Term& base = t[1];
      universe_of(ctx, carrier);
      check(ctx, base, carrier);
      check_id_motive(ctx, t[2], carrier, base);
      check(ctx, t[3], app(app(t[2], base), Term::make(Kind::Refl, {carrier, base})));
      check(ctx, t[4], carrier);
      check(ctx, t[5], Term::make(Kind::Id, {carrier, base, t[4]}));
      return app(app(t[2], t[4]), t[5]);
    }
    case Kind::EmptyElim:
      check_motive(ctx, t[0], Term::constant(Kind::Empty), where);
      check(ctx, t[1], Term::constant(Kind::Empty));
      return motive_app(t[0], t[1]);
    case Kind::Triv:
      return Term::constant(Kind::Unit);
    case Kind::UnitElim:
      check_motive(ctx, t[0], Term::constant(Kind::Unit), where);
      check(ctx, t[1], motive_app(t[0], Term::constant(Kind::Triv)));
      check(ctx, t[2], Term::constant(Kind::Unit));
      return motive_app(t[0], t[2]);
    case Kind::Yes:
    case Kind::No:
      return Term::constant(Kind::Bool);
    case Kind::BoolElim:
      check_motive(ctx, t[0], Term::constant(Kind::Bool), where);
      check(ctx, t[1], motive_app(t[0], Term::constant(Kind::Yes)));
      check(ctx, t[2], motive_app(t[0], Term::constant(Kind::No)));
      check(ctx, t[3], Term::constant(Kind::Bool));
      return motive_app(t[0], t[3]);
    case Kind::SumTy: {
      std::uint32_t i = universe_of(ctx, t[0]);
      std::uint32_t j = universe_of(ctx, t[1]);
      return U(std::max(i, j));
    }
    case Kind::Inl:
    case Kind::Inr: {
      universe_of(ctx, t[0]);
      universe_of(ctx, t[1]);
      check(ctx, t[2], t.is(Kind::Inl) ? t[0] : t[1]);
      return Term::make(Kind::SumTy, {t[0], t[1]});
    }
    case Kind::SumElim: {
      const Term& left = t[0];
      const Term& right = t[1];
      universe_of(ctx, left);
      universe_of(ctx, right);
      Term sum = Term::make(Kind::SumTy, {left, right});
      check_motive(ctx, t[2], sum, where);
      auto branch = [&](Kind ctor, const Term& side) {
        Term sl = shift(left, 1, 0);
        Term sr = shift(right, 1, 0);
        return pi(side, app(shift(t[2], 1, 0), Term::make(ctor, {sl, sr, Term::var(0)})));
      };
      check(ctx, t[3], branch(Kind::Inl, left));
      check(ctx, t[4], branch(Kind::Inr, right));
      check(ctx, t[5], sum);
      return motive_app(t[2], t[5]);
    }
  }
  fail(DiagnosticKind::Parse, where, "unknown term form");
}

void Checker::check(const Context& ctx, const Term& t, const Term& expected) {
  SpanGuard guard(spans_, t.span());
  if (t.is(Kind::Lambda) || t.is(Kind::Mk)) {
    Term want = eval_.whnf(expected);
    if (t.is(Kind::Lambda) && want.is(Kind::Pi)) {
      universe_of(ctx, t[0]);
      if (eval_.equal(t[0], want[0])) {
        check(ctx.extend(t[0]), t[1], want[1]);
        return;
      }
    } else if (t.is(Kind::Mk) && want.is(Kind::Sigma)) {
      check(ctx, t[0], want[0]);
      check(ctx, t[1], subst(want[1], t[0]));
      return;
    }
  }
  Term actual = infer(ctx, t);
  if (!eval_.equal(actual, expected)) {
    mismatch(ctx, DiagnosticKind::TypeMismatch, span_of(t), expected, actual,
             "type mismatch");
  }
}

Term infer(const Environment& env, const Context& ctx, const Term& t) {
  return Checker(env).infer(ctx, t);
}

void check(const Environment& env, const Context& ctx, const Term& t, const Term& expected) {
  Checker(env).check(ctx, t, expected);
}

Environment check_decl(Environment env, Declaration decl) {
  auto attribute = [&](Diagnostic& d) {
    d.file = decl.file;
    if (!d.span.known() || !decl.span.contains(d.span)) d.span = decl.span;
  };
  try {
    if (env.contains(decl.name)) {
      fail(DiagnosticKind::DuplicateDefinition, decl.span,
           "'" + decl.name + "' is already defined");
    }
    Checker checker(env);
    Context empty;
    checker.universe_of(empty, decl.type);
    if (decl.body) checker.check(empty, *decl.body, decl.type);
  } catch (Error& e) {
    attribute(e.diagnostic());
    throw;
  } catch (const FuelExhausted& f) {
    Diagnostic d;
    d.kind = DiagnosticKind::FuelExhausted;
    d.message = std::string("while checking '") + decl.name + "': " + f.what();
    attribute(d);
    throw Error(std::move(d));
  }

  std::set<std::string> refs;
  collect_globals(decl.type, refs);
  if (decl.body) collect_globals(*decl.body, refs);
  decl.axioms.clear();
  for (const std::string& r : refs) {
    const Declaration* dep = env.find(r);
    if (dep) decl.axioms.insert(dep->axioms.begin(), dep->axioms.end());
  }
  if (decl.is_postulate()) decl.axioms.insert(decl.name);
  env.add(std::move(decl));
  return env;
}

const std::set<std::string>& axioms_of(const Environment& env, std::string_view name) {
  const Declaration* d = env.find(name);
  if (d == nullptr) {
    fail(DiagnosticKind::UnboundName, Span{}, "unknown name '" + std::string(name) + "'");
  }
  return d->axioms;
}

}  // namespace ufc
