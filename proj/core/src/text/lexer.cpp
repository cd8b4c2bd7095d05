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
#include "scitm/text/lexer.hpp"

#include <cctype>

namespace scitm::text {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

[[noreturn]] void lex_error(std::string message, int line, int column) {
  throw Error(ErrorCode::SyntaxError, std::move(message), {line, column});
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < source.size(); ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < source.size()) {
    char c = source[i];
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token tok;
    tok.loc = {line, column};
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < source.size() && ident_char(source[i])) {
        if (source[i] == '-' && i + 1 < source.size() && source[i + 1] == '>') break;
        advance();
      }
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(source.substr(start, i - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) advance();
      if (i < source.size() && ident_start(source[i])) {
        lex_error("malformed number", tok.loc.line, tok.loc.column);
      }
      tok.kind = TokenKind::Number;
      tok.text = std::string(source.substr(start, i - start));
    } else if (c == '"') {
      advance();
      std::string value;
      bool closed = false;
      while (i < source.size()) {
        char d = source[i];
        if (d == '"') {
          advance();
          closed = true;
          break;
        }
        if (d == '\n') break;
        if (d == '\\') {
          if (i + 1 >= source.size()) break;
          char e = source[i + 1];
          switch (e) {
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            case 'n': value += '\n'; break;
            default: lex_error(std::string("unknown escape '\\") + e + "'", line, column);
          }
          advance(2);
          continue;
        }
        value += d;
        advance();
      }
      if (!closed) lex_error("unterminated string literal", tok.loc.line, tok.loc.column);
      tok.kind = TokenKind::String;
      tok.text = std::move(value);
    } else if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
      tok.kind = TokenKind::Punct;
      tok.text = "->";
      advance(2);
    } else if (c == '{' || c == '}' || c == '[' || c == ']' || c == ':' || c == ';' ||
               c == ',' || c == '|') {
      tok.kind = TokenKind::Punct;
      tok.text = std::string(1, c);
      advance();
    } else {
      lex_error(std::string("unexpected character '") + c + "'", line, column);
    }
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.loc = {line, column};
  tokens.push_back(std::move(end));
  return tokens;
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Identifier: return "'" + token.text + "'";
    case TokenKind::String: return "string " + quote(token.text);
    case TokenKind::Number: return "number " + token.text;
    case TokenKind::Punct: return "'" + token.text + "'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

Cursor::Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != TokenKind::End) {
    tokens_.push_back(Token{TokenKind::End, {}, {}});
  }
}

const Token& Cursor::peek(std::size_t ahead) const {
  std::size_t idx = pos_ + ahead;
  return idx < tokens_.size() ? tokens_[idx] : tokens_.back();
}

const Token& Cursor::next() {
  const Token& tok = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return tok;
}

bool Cursor::is_punct(std::string_view p, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::Punct && t.text == p;
}

bool Cursor::is_keyword(std::string_view kw, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::Identifier && t.text == kw;
}

bool Cursor::accept_punct(std::string_view p) {
  if (!is_punct(p)) return false;
  next();
  return true;
}

bool Cursor::accept_keyword(std::string_view kw) {
  if (!is_keyword(kw)) return false;
  next();
  return true;
}

const Token& Cursor::expect_punct(std::string_view p) {
  if (!is_punct(p)) fail("'" + std::string(p) + "'");
  return next();
}

const Token& Cursor::expect_keyword(std::string_view kw) {
  if (!is_keyword(kw)) fail("'" + std::string(kw) + "'");
  return next();
}

const Token& Cursor::expect_identifier(std::string_view what) {
  if (peek().kind != TokenKind::Identifier) fail(what);
  return next();
}

const Token& Cursor::expect_string(std::string_view what) {
  if (peek().kind != TokenKind::String) fail(what);
  return next();
}

int Cursor::expect_number(std::string_view what) {
  if (peek().kind != TokenKind::Number) fail(what);
  const Token& t = next();
  if (t.text.size() > 6) {
    throw Error(ErrorCode::SyntaxError, "number out of range: " + t.text, t.loc);
  }
  return std::stoi(t.text);
}

void Cursor::fail(std::string_view expected) const {
  const Token& t = peek();
  throw Error(ErrorCode::SyntaxError,
              "expected " + std::string(expected) + ", found " + describe(t), t.loc);
}

std::string quote(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!ident_char(text[i])) return false;
    if (text[i] == '-' && i + 1 < text.size() && text[i + 1] == '>') return false;
  }
  return true;
}

}  // namespace scitm::text
