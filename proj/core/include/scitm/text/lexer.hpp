// Copyright 2026 The scitm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/error.hpp"

namespace scitm::text {

enum class TokenKind { Identifier, String, Number, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  /// Identifier text, decoded string contents, digits, or the punctuation
  /// spelling ("{", "}", "[", "]", ":", ";", ",", "->", "|").
  std::string text;
  SourceLoc loc;
};

/// Tokenizer shared by the model, rule, mapping, and assignment formats.
/// Newlines are insignificant; '#' starts a comment that runs to end of line.
/// Identifiers follow [A-Za-z_][A-Za-z0-9_-]* except that a '-' directly
/// followed by '>' ends the identifier so "a->b" lexes as three tokens.
std::vector<Token> tokenize(std::string_view source);

/// Describes a token for "expected X, found Y" messages.
std::string describe(const Token& token);

/// Forward-only cursor with expectation helpers that throw SyntaxError.
class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const;
  bool is_keyword(std::string_view kw, std::size_t ahead = 0) const;
  bool accept_punct(std::string_view p);
  bool accept_keyword(std::string_view kw);

  const Token& expect_punct(std::string_view p);
  const Token& expect_keyword(std::string_view kw);
  const Token& expect_identifier(std::string_view what = "identifier");
  const Token& expect_string(std::string_view what = "string literal");
  int expect_number(std::string_view what = "number");

  [[noreturn]] void fail(std::string_view expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Double-quoted literal with \, \" and \n escapes.
std::string quote(std::string_view raw);

bool is_identifier(std::string_view text);

}  // namespace scitm::text
