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

#ifndef UFC_LEXER_HPP_
#define UFC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ufc/span.hpp"

namespace ufc {

enum class TokenKind { Ident, Numeral, Keyword, Symbol, Eof };

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_symbol(std::string_view t) const { return is(TokenKind::Symbol, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

std::string_view to_string(TokenKind kind);

bool is_keyword(std::string_view word);

/// Splits `.uf` source into tokens ending with Eof. `--` comments run to end
/// of line. Throws ufc::Error (Parse) on an illegal character.
std::vector<Token> tokenize(std::string_view input);

/// Joins token texts so that tokenize() of the result yields the same texts.
std::string detokenize(const std::vector<Token>& tokens);

}  // namespace ufc

#endif  // UFC_LEXER_HPP_
