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

#include <gtest/gtest.h>

#include <functional>

#include "test_util.hpp"
#include "ufc/checker.hpp"

namespace ufc {
namespace {

using test::env;
using test::parse;

Diagnostic diagnostic_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "expected a diagnostic";
  return {};
}

LoadResult load_text(const std::string& text, KernelConfig config = {}) {
  return load_sources({Source{"t.uf", text}}, config);
}

TEST(Infer, Examples) {
  Context ctx;
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("refl Nat 4")), parse("Id Nat 4 4")));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("U0")), Term::universe(1)));
  Diagnostic d = diagnostic_of([] { infer(env(), Context{}, parse("Id Nat zero yes")); });
  EXPECT_EQ(d.kind, DiagnosticKind::IdCarrierMismatch);
}

TEST(Infer, UniverseLevelsOfFormers) {
  Context ctx;
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("Nat -> Nat")), Term::universe(0)));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("(X : U0) -> X")), Term::universe(1)));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("Sig (X : U1), X")), Term::universe(2)));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("Sum Nat U0")), Term::universe(1)));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("Id U0 Nat Nat")), Term::universe(1)));
}

TEST(Infer, OpenTermsUseTheContext) {
  Context ctx = Context{}.extend("X", Term::universe(0)).extend("x", Term::var(0));
  EXPECT_EQ(ctx.depth(), 2u);
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, Term::var(0)), Term::var(1)));
  EXPECT_TRUE(alpha_eq(infer(env(), ctx, parse("refl X x", env(), {"X", "x"})),
                       parse("Id X x x", env(), {"X", "x"})));
}

TEST(Check, Examples) {
  Context ctx;
  EXPECT_NO_THROW(check(env(), ctx, parse("refl Nat 4"), parse("Id Nat (add 2 2) 4")));
  EXPECT_NO_THROW(check(env(), ctx, parse("triv"), parse("Unit")));
  Diagnostic d = diagnostic_of([] { check(env(), Context{}, parse("zero"), parse("Bool")); });
  EXPECT_EQ(d.kind, DiagnosticKind::TypeMismatch);
  ASSERT_TRUE(d.expected && d.actual);
  EXPECT_EQ(*d.expected, "Bool");
  EXPECT_EQ(*d.actual, "Nat");
}

TEST(Check, ReflAtEachOfTwoPlusTwoAndFour) {
  Context ctx;
  Term goal = parse("Id Nat (add 2 2) 4");
  for (const char* proof : {"refl Nat 4", "refl Nat (add 2 2)", "refl Nat (suc (suc (suc (suc zero))))"}) {
    EXPECT_NO_THROW(check(env(), ctx, parse(proof), goal)) << proof;
  }
}

TEST(Check, PairsAgainstDependentSums) {
  Context ctx;
  EXPECT_NO_THROW(check(env(), ctx, parse("mk 2 (refl Nat 2)"), parse("Sig (n : Nat), Id Nat n 2")));
  Diagnostic d = diagnostic_of(
      [] { check(env(), Context{}, parse("mk 3 (refl Nat 3)"), parse("Sig (n : Nat), Id Nat n 2")); });
  EXPECT_EQ(d.kind, DiagnosticKind::TypeMismatch);
}

TEST(Check, UniversesAreNotCumulative) {
  Diagnostic d = diagnostic_of([] { check(env(), Context{}, parse("Nat"), Term::universe(1)); });
  EXPECT_EQ(d.kind, DiagnosticKind::TypeMismatch);
}

TEST(Check, EtaIsUsedByConversion) {
  Context ctx;
  EXPECT_NO_THROW(check(env(), ctx, parse("refl (Nat -> Nat) factorial"),
                        parse("Id (Nat -> Nat) (fun (n : Nat) => factorial n) factorial")));
}

TEST(Diagnostics, DesignatedKinds) {
  struct Case {
    const char* text;
    DiagnosticKind kind;
  };
  const Case cases[] = {
      {"def a : Id Nat 0 yes := refl Nat 0;", DiagnosticKind::IdCarrierMismatch},
      {"def a : U4 := U4;", DiagnosticKind::UniverseOverflow},
      {"def a : Nat := 0 1;", DiagnosticKind::NotAFunction},
      {"def a : Nat := natElim (fun (b : Bool) => Nat) 0 (fun (k : Nat) => fun (r : Nat) => r) 3;",
       DiagnosticKind::MotiveShape},
      {"def a : Nat := natElim (fun (k : Nat) => k) 0 (fun (k : Nat) => fun (r : Nat) => r) 3;",
       DiagnosticKind::MotiveShape},
      {"def a : Nat := J Nat 0 (fun (y : Nat) => Nat) 0 0 (refl Nat 0);", DiagnosticKind::MotiveShape},
      {"def a : Nat := yes;", DiagnosticKind::TypeMismatch},
      {"def a : zero := zero;", DiagnosticKind::NotAUniverse},
      {"def a : Nat := b;", DiagnosticKind::UnboundName},
      {"def a : Nat := ;", DiagnosticKind::Parse},
  };
  for (const Case& c : cases) {
    LoadResult r = load_text(c.text);
    ASSERT_EQ(r.diagnostics.size(), 1u) << c.text;
    EXPECT_EQ(r.diagnostics[0].kind, c.kind) << c.text << "\n" << render(r.diagnostics[0]);
  }
}

TEST(Diagnostics, UniverseCeilingFollowsMaxLevel) {
  EXPECT_EQ(load_text("def a : U4 := U4;").diagnostics.at(0).kind, DiagnosticKind::UniverseOverflow);
  EXPECT_TRUE(load_text("def a : U3 := U2;").ok());
  // U4 : U5 needs a ceiling of at least 5.
  EXPECT_EQ(load_text("def a : U4 := U3;").diagnostics.at(0).kind, DiagnosticKind::UniverseOverflow);
  EXPECT_TRUE(load_text("def a : U4 := U3;", KernelConfig{5, kDefaultFuel}).ok());
  EXPECT_EQ(load_text("def a : U1 := U0;", KernelConfig{0, kDefaultFuel}).diagnostics.at(0).kind,
            DiagnosticKind::UniverseOverflow);
}

TEST(Diagnostics, RenderingContract) {
  LoadResult r = load_sources({Source{"bad.uf", "def a : Bool :=\n  zero;"}});
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(render(r.diagnostics[0]), "bad.uf:2:3: TypeMismatch: expected Bool, got Nat");
}

TEST(Diagnostics, TypeMismatchCarriesBothPayloads) {
  for (const char* text : {"def a : Nat := yes;", "def a : Id Nat 1 2 := refl Nat 1;",
                           "def a : Nat -> Bool := fun (n : Nat) => n;"}) {
    LoadResult r = load_text(text);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].kind, DiagnosticKind::TypeMismatch);
    EXPECT_TRUE(r.diagnostics[0].expected.has_value());
    EXPECT_TRUE(r.diagnostics[0].actual.has_value());
  }
}

TEST(Diagnostics, SpansLieInsideTheirDeclaration) {
  const std::string text =
      "def a : Nat := 1;\n"
      "def b : Id Nat 1 yes := refl Nat 1;\n"
      "def c : Nat -> Nat := fun (n : Nat) => n 1;\n"
      "def d : Nat := natElim (fun (x : Bool) => Nat) 0 (fun (k : Nat) => fun (r : Nat) => r) 2;\n"
      "def e : U4 := U4;\n"
      "def f : Bool := add 1 1;\n";
  std::vector<SurfaceDecl> decls = parse_module(tokenize(text));
  LoadResult r = load_sources({Source{"t.uf", text}});
  ASSERT_EQ(r.diagnostics.size(), 5u);
  for (const Diagnostic& d : r.diagnostics) {
    bool inside = false;
    for (const SurfaceDecl& s : decls) inside = inside || s.span.contains(d.span);
    EXPECT_TRUE(inside) << render(d);
  }
}

TEST(CheckDecl, Examples) {
  std::vector<SurfaceDecl> decls = parse_module(tokenize(
      "def idfun : (A : U0) -> A -> A := fun (A : U0) => fun (a : A) => a;\n"
      "postulate funext : (X : U0) -> (P : X -> U0) -> (f : (x : X) -> P x) -> "
      "(g : (x : X) -> P x) -> ((x : X) -> Id (P x) (f x) (g x)) -> Id ((x : X) -> P x) f g;\n"
      "def uses : Nat := idfun Nat 0;\n"));
  Environment e;
  for (const SurfaceDecl& d : decls) e = check_decl(e, elaborate(d, e));
  EXPECT_TRUE(axioms_of(e, "idfun").empty());
  EXPECT_EQ(axioms_of(e, "funext"), (std::set<std::string>{"funext"}));
  EXPECT_TRUE(axioms_of(e, "uses").empty());
}

TEST(CheckDecl, ErrorsAreAttributedToTheFile) {
  std::vector<SurfaceDecl> decls = parse_module(tokenize("def a : Nat := yes;"));
  Environment e;
  Declaration d = elaborate(decls[0], e);
  d.file = "where.uf";
  Diagnostic diag = diagnostic_of([&] { check_decl(e, d); });
  EXPECT_EQ(diag.file, "where.uf");
  EXPECT_EQ(e.size(), 0u);
}

TEST(CheckDecl, FuelExhaustionBecomesADiagnostic) {
  std::vector<Source> sources = test::prelude_sources();
  sources.push_back(Source{"t.uf", "def big : Id Nat (factorial 5) 120 := refl Nat 120;"});
  LoadResult generous = load_sources(sources);
  EXPECT_TRUE(generous.ok());
  LoadResult starved = load_sources(sources, KernelConfig{kDefaultMaxLevel, 2000});
  EXPECT_TRUE(starved.has(DiagnosticKind::FuelExhausted));
}

TEST(AxiomsOf, CorpusExamples) {
  EXPECT_TRUE(axioms_of(env(), "trans").empty());
  EXPECT_TRUE(axioms_of(env(), "symm").empty());
  EXPECT_EQ(axioms_of(env(), "ua"), (std::set<std::string>{"ua"}));
  EXPECT_EQ(axioms_of(env(), "nat_eq_nonneg_int_demo"), (std::set<std::string>{"ua"}));
  EXPECT_EQ(diagnostic_of([] { axioms_of(env(), "no_such_name"); }).kind, DiagnosticKind::UnboundName);
}

TEST(AxiomsOf, MonotoneAlongReferences) {
  for (const Declaration& d : env().decls()) {
    std::set<std::string> refs;
    collect_globals(d.type, refs);
    if (d.body) collect_globals(*d.body, refs);
    for (const std::string& g : refs) {
      for (const std::string& a : axioms_of(env(), g)) {
        EXPECT_TRUE(d.axioms.count(a)) << d.name << " misses " << a << " from " << g;
      }
    }
  }
}

TEST(Loader, RecoverySkipsDependents) {
  LoadResult r = load_text(
      "def a : Nat := yes;\n"
      "def b : Nat := a;\n"
      "def c : Nat := fun (a : Nat) => a;\n"
      "def d : Nat := 3;\n");
  ASSERT_EQ(r.outcomes.size(), 4u);
  EXPECT_EQ(r.outcomes[0].state, DeclOutcome::State::Failed);
  EXPECT_EQ(r.outcomes[1].state, DeclOutcome::State::Skipped);
  EXPECT_EQ(r.outcomes[1].skipped_because, "a");
  // A bound variable named like the failed global is not a dependency.
  EXPECT_EQ(r.outcomes[2].state, DeclOutcome::State::Failed);
  EXPECT_EQ(r.outcomes[3].state, DeclOutcome::State::Checked);
  EXPECT_TRUE(r.env.contains("d"));
  EXPECT_FALSE(r.env.contains("a"));
}

TEST(Loader, FilesShareOneNamespaceInOrder) {
  LoadResult ok = load_sources({Source{"a.uf", "def x : Nat := 1;"}, Source{"b.uf", "def y : Nat := x;"}});
  EXPECT_TRUE(ok.ok());
  LoadResult bad = load_sources({Source{"b.uf", "def y : Nat := x;"}, Source{"a.uf", "def x : Nat := 1;"}});
  ASSERT_EQ(bad.diagnostics.size(), 1u);
  EXPECT_EQ(bad.diagnostics[0].kind, DiagnosticKind::UnboundName);
  EXPECT_EQ(bad.diagnostics[0].file, "b.uf");
}

TEST(Loader, DeterministicResults) {
  std::string text = test::slurp(test::golden_dir() + "/fail_mismatch.uf") +
                     "\n" + test::slurp(test::golden_dir() + "/pass_check.uf");
  LoadResult a = load_text(text);
  LoadResult b = load_text(text);
  ASSERT_EQ(a.diagnostics.size(), b.diagnostics.size());
  for (std::size_t i = 0; i < a.diagnostics.size(); ++i) {
    EXPECT_EQ(render(a.diagnostics[i]), render(b.diagnostics[i]));
  }
  ASSERT_EQ(a.env.size(), b.env.size());
  for (std::size_t i = 0; i < a.env.size(); ++i) {
    const Declaration& x = a.env.decls()[i];
    const Declaration& y = b.env.decls()[i];
    EXPECT_EQ(x.name, y.name);
    EXPECT_TRUE(alpha_eq(x.type, y.type));
    EXPECT_EQ(x.axioms, y.axioms);
  }
}

}  // namespace
}  // namespace ufc
