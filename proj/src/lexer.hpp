#pragma once

// Tokenizer shared by the formula, query and database-file parsers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gdpr/error.hpp"

namespace gdpr::detail {

enum class TokenKind { Identifier, Quoted, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline bool identifier_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

inline bool plain_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!identifier_char(c)) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_symbol(char c) const {
    return current_.kind == TokenKind::Symbol && current_.text[0] == c;
  }

  bool at_keyword(std::string_view word) const {
    return current_.kind == TokenKind::Identifier && current_.text == word;
  }

  bool accept(char c) {
    if (!at_symbol(c)) return false;
    advance();
    return true;
  }

  Token expect(char c) {
    if (!at_symbol(c)) fail("unexpected " + describe(current_), {quote(c)});
    return next();
  }

  Token expect_identifier(const std::string& what) {
    if (current_.kind != TokenKind::Identifier)
      fail("unexpected " + describe(current_), {what});
    return next();
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) const {
    throw ParseError(message, current_.line, current_.column, std::move(expected));
  }

  static std::string quote(char c) { return std::string("'") + c + "'"; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::Symbol: return quote(t.text[0]);
      case TokenKind::Quoted: return "quoted '" + t.text + "'";
      case TokenKind::Identifier: return "'" + t.text + "'";
    }
    return "token";
  }

 private:
  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        step();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (identifier_char(c)) {
      current_.kind = TokenKind::Identifier;
      while (pos_ < text_.size() && identifier_char(text_[pos_])) {
        current_.text += text_[pos_];
        step();
      }
    } else if (c == '\'') {
      current_.kind = TokenKind::Quoted;
      step();
      while (true) {
        if (pos_ >= text_.size() || text_[pos_] == '\n')
          throw ParseError("unterminated quoted value", current_.line,
                           current_.column);
        if (text_[pos_] == '\'') {
          step();
          break;
        }
        current_.text += text_[pos_];
        step();
      }
    } else {
      current_.kind = TokenKind::Symbol;
      current_.text = std::string(1, c);
      step();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
  Token current_;
};

}  // namespace gdpr::detail
