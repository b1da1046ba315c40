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

#include <charconv>
#include <string>

#include "ufc/surface.hpp"

namespace ufc {

namespace {

using Tag = SurfaceTerm::Tag;

bool is_builtin_keyword(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  return t.text != "def" && t.text != "postulate" && t.text != "fun" && t.text != "Sig";
}

bool is_universe_keyword(const Token& t) {
  return t.kind == TokenKind::Keyword && t.text.size() == 2 && t.text[0] == 'U';
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::Eof) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ParseResult module(bool recover) {
    ParseResult result;
    while (peek().kind != TokenKind::Eof) {
      std::size_t start = pos_;
      try {
        result.decls.push_back(decl());
      } catch (Error& e) {
        if (!recover) throw;
        result.diagnostics.push_back(e.diagnostic());
        in_decl_ = false;
        synchronize(start);
      }
    }
    return result;
  }

  SurfaceTerm whole_term() {
    SurfaceTerm t = term();
    expect_kind(TokenKind::Eof, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void unexpected(std::string expected) const {
    const Token& t = peek();
    if (t.kind == TokenKind::Eof && in_decl_) {
      fail(DiagnosticKind::Parse, t.span,
           "unterminated declaration: reached end of input, expected " + expected);
    }
    fail(DiagnosticKind::Parse, t.span,
         "unexpected token " + describe(t) + ", expected " + expected);
  }

  const Token& expect_symbol(std::string_view sym) {
    if (!peek().is_symbol(sym)) unexpected("'" + std::string(sym) + "'");
    return next();
  }

  const Token& expect_kind(TokenKind kind, std::string expected) {
    if (peek().kind != kind) unexpected(std::move(expected));
    return next();
  }

  void synchronize(std::size_t start) {
    if (pos_ == start) next();
    while (peek().kind != TokenKind::Eof) {
      if (peek().is_symbol(";")) {
        next();
        return;
      }
      if (peek().is_keyword("def") || peek().is_keyword("postulate")) return;
      next();
    }
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    const Token& head = peek();
    if (head.is_keyword("def")) {
      d.kind = SurfaceDecl::Kind::Def;
    } else if (head.is_keyword("postulate")) {
      d.kind = SurfaceDecl::Kind::Postulate;
    } else {
      unexpected("'def' or 'postulate'");
    }
    Span start = next().span;
    in_decl_ = true;
    const Token& name = expect_kind(TokenKind::Ident, "identifier");
    d.name = name.text;
    d.name_span = name.span;
    expect_symbol(":");
    d.type = term();
    if (d.kind == SurfaceDecl::Kind::Def) {
      expect_symbol(":=");
      d.body = term();
    }
    Span end = expect_symbol(";").span;
    in_decl_ = false;
    d.span = cover(start, end);
    return d;
  }

  // "(" IDENT ":" term ")" shared by fun, Pi and Sig binders.
  void binder(SurfaceTerm& out) {
    expect_symbol("(");
    out.text = expect_kind(TokenKind::Ident, "identifier").text;
    expect_symbol(":");
    out.args.push_back(term());
    expect_symbol(")");
  }

  SurfaceTerm term() {
    const Token& t = peek();
    if (t.is_keyword("fun")) {
      SurfaceTerm out;
      out.tag = Tag::Fun;
      Span start = next().span;
      binder(out);
      expect_symbol("=>");
      out.args.push_back(term());
      out.span = cover(start, out.args.back().span);
      return out;
    }
    if (t.is_keyword("Sig")) {
      SurfaceTerm out;
      out.tag = Tag::Sig;
      Span start = next().span;
      binder(out);
      expect_symbol(",");
      out.args.push_back(term());
      out.span = cover(start, out.args.back().span);
      return out;
    }
    if (t.is_symbol("(") && peek(1).kind == TokenKind::Ident && peek(2).is_symbol(":")) {
      SurfaceTerm out;
      out.tag = Tag::Pi;
      Span start = t.span;
      binder(out);
      expect_symbol("->");
      out.args.push_back(term());
      out.span = cover(start, out.args.back().span);
      return out;
    }
    SurfaceTerm lhs = appterm();
    if (peek().is_symbol("->")) {
      next();
      SurfaceTerm out;
      out.tag = Tag::Arrow;
      SurfaceTerm rhs = term();
      out.span = cover(lhs.span, rhs.span);
      out.args.push_back(std::move(lhs));
      out.args.push_back(std::move(rhs));
      return out;
    }
    return lhs;
  }

  bool atom_start() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident || t.kind == TokenKind::Numeral) return true;
    if (is_builtin_keyword(t)) return true;
    // "(x : A)" opens a Pi binder, not a parenthesized atom.
    return t.is_symbol("(") && !(peek(1).kind == TokenKind::Ident && peek(2).is_symbol(":"));
  }

  SurfaceTerm appterm() {
    if (!atom_start()) unexpected("a term");
    SurfaceTerm head = atom();
    while (atom_start()) {
      SurfaceTerm arg = atom();
      SurfaceTerm out;
      out.tag = Tag::App;
      out.span = cover(head.span, arg.span);
      out.args.push_back(std::move(head));
      out.args.push_back(std::move(arg));
      head = std::move(out);
    }
    return head;
  }

  SurfaceTerm atom() {
    const Token& t = next();
    SurfaceTerm out;
    out.span = t.span;
    switch (t.kind) {
      case TokenKind::Ident:
        out.tag = Tag::Name;
        out.text = t.text;
        return out;
      case TokenKind::Numeral: {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || value > kMaxNumeral) {
          fail(DiagnosticKind::Parse, t.span,
               "numeral " + t.text + " out of range (0.." + std::to_string(kMaxNumeral) + ")");
        }
        out.tag = Tag::Numeral;
        out.number = static_cast<std::uint32_t>(value);
        return out;
      }
      case TokenKind::Keyword:
        if (is_universe_keyword(t)) {
          out.tag = Tag::Universe;
          out.number = static_cast<std::uint32_t>(t.text[1] - '0');
        } else {
          out.tag = Tag::Builtin;
          out.text = t.text;
        }
        return out;
      case TokenKind::Symbol: {
        // atom_start() guarantees "(".
        SurfaceTerm inner = term();
        Span close = expect_symbol(")").span;
        inner.span = cover(t.span, close);
        return inner;
      }
      case TokenKind::Eof:
        break;
    }
    unexpected("a term");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  bool in_decl_ = false;
};

}  // namespace

std::vector<SurfaceDecl> parse_module(const std::vector<Token>& tokens) {
  return Parser(tokens).module(false).decls;
}

ParseResult parse_module_recovering(const std::vector<Token>& tokens) {
  return Parser(tokens).module(true);
}

SurfaceTerm parse_term(const std::vector<Token>& tokens) { return Parser(tokens).whole_term(); }

}  // namespace ufc
