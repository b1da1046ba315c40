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

#include "ufc/evaluator.hpp"

namespace ufc {

void Evaluator::tick() {
  if (steps_ >= fuel_) throw FuelExhausted(fuel_);
  ++steps_;
}

std::optional<Term> Evaluator::contract(const Term& t) {
  switch (t.kind()) {
    case Kind::Global: {
      const Declaration* d = env_.find(t.name());
      if (d == nullptr || d->is_postulate()) return std::nullopt;
      return *d->body;
    }
    case Kind::App:
      if (t[0].is(Kind::Lambda)) return subst(t[0][1], t[1]);
      return std::nullopt;
    case Kind::NatElim: {
      const Term& n = t[3];
      if (n.is(Kind::Zero)) return t[1];
      if (n.is(Kind::Suc)) {
        Term rec = Term::make(Kind::NatElim, {t[0], t[1], t[2], n[0]}, t.span());
        return app(app(t[2], n[0]), rec);
      }
      return std::nullopt;
    }
    case Kind::J:
      if (t[5].is(Kind::Refl)) return t[3];
      return std::nullopt;
    case Kind::SigElim:
      if (t[4].is(Kind::Mk)) return app(app(t[3], t[4][0]), t[4][1]);
      return std::nullopt;
    case Kind::UnitElim:
      if (t[2].is(Kind::Triv)) return t[1];
      return std::nullopt;
    case Kind::BoolElim:
      if (t[3].is(Kind::Yes)) return t[1];
      if (t[3].is(Kind::No)) return t[2];
      return std::nullopt;
    case Kind::SumElim:
      if (t[5].is(Kind::Inl)) return app(t[3], t[5][2]);
      if (t[5].is(Kind::Inr)) return app(t[4], t[5][2]);
      return std::nullopt;
    default:
      // EmptyElim has no constructor to fire on.
      return std::nullopt;
  }
}

Term Evaluator::whnf(const Term& input) {
  Term t = input;
  for (;;) {
    switch (t.kind()) {
      case Kind::App: {
        Term fn = whnf(t[0]);
        if (fn.is(Kind::Lambda)) {
          tick();
          t = subst(fn[1], t[1]);
          continue;
        }
        if (fn.same_node(t[0])) return t;
        return Term::make(Kind::App, {fn, t[1]}, t.span());
      }
      case Kind::Global: {
        std::optional<Term> body = contract(t);
        if (!body) return t;
        tick();
        t = *body;
        continue;
      }
      default:
        break;
    }
    int s = scrutinee_index(t.kind());
    if (s < 0) return t;
    Term scrutinee = whnf(t[s]);
    if (!scrutinee.same_node(t[s])) {
      std::vector<Term> kids(t.children().begin(), t.children().end());
      kids[s] = scrutinee;
      t = t.with_children(std::move(kids));
    }
    std::optional<Term> fired = contract(t);
    if (!fired) return t;
    tick();
    t = *fired;
  }
}

Term Evaluator::normalize(const Term& t) {
  Term head = whnf(t);
  if (head.children().empty()) return head;
  std::vector<Term> kids;
  kids.reserve(head.children().size());
  bool changed = false;
  for (const Term& c : head.children()) {
    kids.push_back(normalize(c));
    changed = changed || !kids.back().same_node(c);
  }
  return changed ? head.with_children(std::move(kids)) : head;
}

std::optional<Term> Evaluator::step(const Term& t) {
  if (std::optional<Term> r = contract(t)) return r;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (std::optional<Term> r = step(t[i])) {
      std::vector<Term> kids(t.children().begin(), t.children().end());
      kids[i] = std::move(*r);
      return t.with_children(std::move(kids));
    }
  }
  return std::nullopt;
}

bool Evaluator::equal(const Term& a, const Term& b) { return conv(a, b); }

bool Evaluator::conv(const Term& a, const Term& b) {
  if (alpha_eq(a, b)) return true;
  Term x = whnf(a);
  Term y = whnf(b);
  bool lx = x.is(Kind::Lambda);
  bool ly = y.is(Kind::Lambda);
  // Function η: compare the body against the other side applied to the bound
  // variable.
  if (lx && !ly) return conv(x[1], app(shift(y, 1, 0), Term::var(0)));
  if (ly && !lx) return conv(app(shift(x, 1, 0), Term::var(0)), y[1]);
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Kind::Var:
      return x.index() == y.index();
    case Kind::Global:
      return x.name() == y.name();
    case Kind::Universe:
      return x.level() == y.level();
    default:
      break;
  }
  for (std::size_t i = 0; i < x.children().size(); ++i) {
    if (!conv(x[i], y[i])) return false;
  }
  return true;
}

Term whnf(const Environment& env, const Term& t) { return Evaluator(env).whnf(t); }

Term normalize(const Environment& env, const Term& t) { return Evaluator(env).normalize(t); }

std::optional<Term> step(const Environment& env, const Term& t) { return Evaluator(env).step(t); }

bool equal(const Environment& env, const Term& a, const Term& b) {
  return Evaluator(env).equal(a, b);
}

}  // namespace ufc
