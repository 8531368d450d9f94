#include "holoforms/lexer.hpp"

#include <cctype>

#include "holoforms/errors.hpp"

namespace holoforms {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tok_line = line;
    const int tok_col = col;
    std::size_t j = i;
    if (is_digit(c)) {
      while (j < text.size() && is_digit(text[j])) ++j;
      out.push_back({Token::Kind::Number, std::string(text.substr(i, j - i)), tok_line, tok_col});
    } else if (is_alpha(c)) {
      while (j < text.size() && is_alpha(text[j])) ++j;
      while (j < text.size() && is_digit(text[j])) ++j;
      out.push_back(
          {Token::Kind::Identifier, std::string(text.substr(i, j - i)), tok_line, tok_col});
    } else if (std::string_view("+-*/^=(),").find(c) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Token::Kind::Symbol, std::string(1, c), tok_line, tok_col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", tok_line, tok_col);
    }
    advance(j - i);
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

TokenStream::TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Token::Kind::End) {
    const int line = tokens_.empty() ? 1 : tokens_.back().line;
    const int col = tokens_.empty() ? 1 : tokens_.back().column;
    tokens_.push_back({Token::Kind::End, "", line, col});
  }
}

const Token& TokenStream::peek(int ahead) const {
  const std::size_t idx = std::min(pos_ + static_cast<std::size_t>(ahead), tokens_.size() - 1);
  return tokens_[idx];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::is_symbol(char c, int ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Kind::Symbol && t.text[0] == c;
}

bool TokenStream::accept_symbol(char c) {
  if (!is_symbol(c)) return false;
  next();
  return true;
}

void TokenStream::expect_symbol(char c) {
  if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& token, const std::string& message) const {
  const std::string found = token.kind == Token::Kind::End ? "end of input" : "'" + token.text + "'";
  throw ParseError(message + ", found " + found, token.line, token.column);
}

}  // namespace holoforms
