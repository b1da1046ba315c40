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

#include "ufc/lexer.hpp"

#include <array>
#include <cctype>

#include "ufc/diagnostic.hpp"

namespace ufc {

namespace {

constexpr std::array<std::string_view, 37> kKeywords = {
    "def",  "postulate", "fun",  "Nat",      "Id",   "refl",     "J",       "natElim",
    "zero", "suc",       "Empty", "emptyElim", "Unit", "triv",   "unitElim", "Bool",
    "yes",  "no",        "boolElim", "Sig",   "mk",   "sigElim",  "Sum",     "inl",
    "inr",  "sumElim",   "U0",   "U1",       "U2",   "U3",       "U4",      "U5",
    "U6",   "U7",        "U8",   "U9",       ""};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Numeral: return "NUMERAL";
    case TokenKind::Keyword: return "KEYWORD";
    case TokenKind::Symbol: return "SYMBOL";
    case TokenKind::Eof: return "EOF";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  if (word.empty()) return false;
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto emit = [&](TokenKind kind, std::size_t len) {
    Token t;
    t.kind = kind;
    t.text = std::string(input.substr(i, len));
    t.span = Span{line, col, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(len)};
    out.push_back(std::move(t));
    advance(len);
  };

  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < input.size() && input[i + 1] == '-') {
      while (i < input.size() && input[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < input.size() && ident_char(input[j])) ++j;
      std::string_view word = input.substr(i, j - i);
      emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      emit(TokenKind::Numeral, j - i);
      continue;
    }
    std::string_view rest = input.substr(i);
    if (rest.starts_with(":=") || rest.starts_with("->") || rest.starts_with("=>")) {
      emit(TokenKind::Symbol, 2);
      continue;
    }
    if (c == ':' || c == ';' || c == '(' || c == ')' || c == ',') {
      emit(TokenKind::Symbol, 1);
      continue;
    }
    Span where{line, col, static_cast<std::uint32_t>(i), 1};
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte " + std::to_string(static_cast<unsigned char>(c))
                            : "'" + std::string(1, c) + "'";
    fail(DiagnosticKind::Parse, where, "illegal character " + shown);
  }
  Token eof;
  eof.kind = TokenKind::Eof;
  eof.span = Span{line, col, static_cast<std::uint32_t>(i), 0};
  out.push_back(std::move(eof));
  return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Eof) break;
    if (!out.empty() && out.back() != '\n') out += ' ';
    out += t.text;
    if (t.is_symbol(";")) out += '\n';
  }
  return out;
}

}  // namespace ufc
