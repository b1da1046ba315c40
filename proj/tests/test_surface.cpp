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

using test::parse;

std::vector<std::pair<TokenKind, std::string>> lex(std::string_view text) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const Token& t : tokenize(text)) out.emplace_back(t.kind, t.text);
  return out;
}

DiagnosticKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.diagnostic().kind;
  }
  ADD_FAILURE() << "expected an error";
  return DiagnosticKind::Parse;
}

TEST(Lexer, DeclarationTokens) {
  using K = TokenKind;
  std::vector<std::pair<TokenKind, std::string>> want = {
      {K::Keyword, "def"}, {K::Ident, "x"},     {K::Symbol, ":"}, {K::Keyword, "Nat"},
      {K::Symbol, ":="},   {K::Keyword, "zero"}, {K::Symbol, ";"}, {K::Eof, ""}};
  EXPECT_EQ(lex("def x : Nat := zero;"), want);
}

TEST(Lexer, CommentsAndNumerals) {
  using K = TokenKind;
  EXPECT_EQ(lex("-- comment\nzero"),
            (std::vector<std::pair<TokenKind, std::string>>{{K::Keyword, "zero"}, {K::Eof, ""}}));
  EXPECT_EQ(lex("2"), (std::vector<std::pair<TokenKind, std::string>>{{K::Numeral, "2"}, {K::Eof, ""}}));
}

TEST(Lexer, SpansAreOneBased) {
  std::vector<Token> toks = tokenize("def\n  x");
  EXPECT_EQ(toks[1].span.line, 2u);
  EXPECT_EQ(toks[1].span.column, 3u);
}

TEST(Lexer, IllegalCharacter) {
  EXPECT_EQ(error_kind([] { tokenize("def x : Nat := @;"); }), DiagnosticKind::Parse);
}

TEST(Lexer, KeywordsIncludeUniverses) {
  EXPECT_TRUE(is_keyword("U0"));
  EXPECT_TRUE(is_keyword("U9"));
  EXPECT_TRUE(is_keyword("sumElim"));
  EXPECT_FALSE(is_keyword("U10"));
  EXPECT_FALSE(is_keyword("add"));
}

TEST(Parser, NumeralDefinition) {
  std::vector<SurfaceDecl> decls = parse_module(tokenize("def four : Nat := 4;"));
  ASSERT_EQ(decls.size(), 1u);
  Environment env;
  Declaration d = elaborate(decls[0], env);
  EXPECT_TRUE(alpha_eq(*d.body, test::suc_chain(4)));
}

TEST(Parser, Postulate) {
  std::vector<SurfaceDecl> decls = parse_module(tokenize("postulate ua_stub : U0;"));
  ASSERT_EQ(decls.size(), 1u);
  EXPECT_EQ(decls[0].kind, SurfaceDecl::Kind::Postulate);
  EXPECT_FALSE(decls[0].body.has_value());
}

TEST(Parser, UnexpectedTokenAtSemicolon) {
  try {
    parse_module(tokenize("def bad : Nat := ;"));
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.diagnostic().kind, DiagnosticKind::Parse);
    EXPECT_EQ(e.diagnostic().span.column, 18u);
    EXPECT_NE(e.diagnostic().message.find("unexpected token"), std::string::npos);
  }
}

TEST(Parser, UnterminatedDeclaration) {
  try {
    parse_module(tokenize("def x : Nat := (zero"));
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_NE(e.diagnostic().message.find("unterminated"), std::string::npos);
  }
}

TEST(Parser, NumeralLimit) {
  EXPECT_NO_THROW(parse_module(tokenize("def x : Nat := 999;")));
  EXPECT_EQ(error_kind([] { parse_module(tokenize("def x : Nat := 1000;")); }),
            DiagnosticKind::Parse);
}

TEST(Parser, ArrowIsRightAssociativeAndApplicationLeft) {
  Environment env;
  Term t = parse("Nat -> Nat -> Nat", env);
  ASSERT_TRUE(t.is(Kind::Pi));
  EXPECT_TRUE(t[1].is(Kind::Pi));
  Term a = parse("fun (f : Nat -> Nat -> Nat) => f 1 2", env);
  ASSERT_TRUE(a[1].is(Kind::App));
  EXPECT_TRUE(a[1][0].is(Kind::App));
}

TEST(Parser, RecoveryContinuesAfterBadDeclaration) {
  ParseResult r = parse_module_recovering(tokenize("def a : Nat := ; def b : Nat := 1;"));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  ASSERT_EQ(r.decls.size(), 1u);
  EXPECT_EQ(r.decls[0].name, "b");
}

TEST(Elaborate, Examples) {
  Environment env;
  Term nat = Term::constant(Kind::Nat);
  EXPECT_TRUE(alpha_eq(parse("fun (x : Nat) => x", env), lam(nat, Term::var(0))));
  EXPECT_TRUE(alpha_eq(parse("fun (x : Nat) => fun (y : Nat) => x", env),
                       lam(nat, lam(nat, Term::var(1)))));
  EXPECT_EQ(error_kind([&] { parse("foo", env); }), DiagnosticKind::UnboundName);
}

TEST(Elaborate, InnermostBinderWins) {
  Environment env;
  Term nat = Term::constant(Kind::Nat);
  EXPECT_TRUE(alpha_eq(parse("fun (x : Nat) => fun (x : Nat) => x", env),
                       lam(nat, lam(nat, Term::var(0)))));
}

TEST(Elaborate, BinderShadowsGlobal) {
  Term t = parse("fun (add : Nat) => add");
  EXPECT_TRUE(alpha_eq(t, lam(Term::constant(Kind::Nat), Term::var(0))));
}

TEST(Elaborate, BuiltinArityIsEnforced) {
  Environment env;
  EXPECT_EQ(error_kind([&] { parse("suc", env); }), DiagnosticKind::Parse);
  EXPECT_EQ(error_kind([&] { parse("refl Nat", env); }), DiagnosticKind::Parse);
  Term t = parse("J Nat 0 (fun (y : Nat) => fun (e : Id Nat 0 y) => Nat) 1 0 (refl Nat 0)", env);
  EXPECT_TRUE(t.is(Kind::J));
}

TEST(Elaborate, SigElimFamilyBindsItsVariable) {
  Environment env;
  Term t = parse(
      "fun (p : Sig (x : Nat), Id Nat x x) => "
      "sigElim Nat (fun (x : Nat) => Id Nat x x) (fun (q : Sig (x : Nat), Id Nat x x) => Nat) "
      "(fun (x : Nat) => fun (e : Id Nat x x) => x) p",
      env);
  const Term& elim = t[1];
  ASSERT_TRUE(elim.is(Kind::SigElim));
  EXPECT_TRUE(alpha_eq(elim[1], Term::make(Kind::Id, {Term::constant(Kind::Nat), Term::var(0),
                                                       Term::var(0)})));
}

TEST(Elaborate, DuplicateDefinition) {
  std::vector<SurfaceDecl> decls = parse_module(tokenize("def x : Nat := 0; def x : Nat := 1;"));
  Environment env;
  env = check_decl(env, elaborate(decls[0], env));
  EXPECT_EQ(error_kind([&] { elaborate(decls[1], env); }), DiagnosticKind::DuplicateDefinition);
}

TEST(Print, Examples) {
  Term nat = Term::constant(Kind::Nat);
  EXPECT_EQ(print(test::suc_chain(2)), "2");
  EXPECT_EQ(print(lam(nat, Term::var(0))), "fun (x : Nat) => x");
  EXPECT_EQ(print(pi(nat, nat)), "Nat -> Nat");
}

TEST(Print, CollisionsArePrimed) {
  Term nat = Term::constant(Kind::Nat);
  EXPECT_EQ(print(lam(nat, lam(nat, Term::var(1)))), "fun (x : Nat) => fun (x' : Nat) => x");
  // Globals in the term and keywords are avoided too.
  Term g = lam(nat, app(Term::global("x"), Term::var(0)));
  EXPECT_EQ(print(g), "fun (x' : Nat) => x x'");
}

TEST(Print, ContextNamesAndFreeVariables) {
  EXPECT_EQ(print(Term::var(0), {"a", "b"}), "b");
  EXPECT_EQ(print(Term::var(1), {"a", "b"}), "a");
  EXPECT_EQ(print(Term::var(2), {"a", "b"}), "free0");
}

TEST(Print, DependentFormsAndBuiltins) {
  Term t = parse("(X : U0) -> Sig (x : X), Id X x x");
  EXPECT_EQ(print(t), "(A : U0) -> Sig (x : A), Id A x x");
  EXPECT_EQ(print(parse("suc (suc zero)")), "2");
  EXPECT_EQ(print(parse("fun (n : Nat) => suc (suc n)")), "fun (x : Nat) => suc (suc x)");
}

TEST(Print, RoundTripOnHandPickedTerms) {
  const char* samples[] = {
      "fun (f : Nat -> Nat) => fun (x : Nat) => f (f x)",
      "(A : U0) -> (B : A -> U0) -> Sig (x : A), B x",
      "fun (X : U0) => fun (x : X) => fun (x1 : X) => Id X x x1",
      "sumElim Nat Bool (fun (s : Sum Nat Bool) => Nat) (fun (n : Nat) => n) (fun (b : Bool) => 0) "
      "(inl Nat Bool 3)",
      "(fun (x : Nat) => x) 999",
  };
  for (const char* s : samples) {
    std::string text = s;
    Term t = parse(text);
    EXPECT_TRUE(alpha_eq(parse(print(t)), t)) << text << " printed as " << print(t);
  }
}

TEST(Print, LargeNumeralsFallBackToSuc) {
  Term big = numeral(kMaxNumeral + 1);
  std::string text = print(big);
  EXPECT_EQ(text, "suc 999");
  EXPECT_TRUE(alpha_eq(parse(text), big));
}

}  // namespace
}  // namespace ufc
