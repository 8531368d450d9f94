#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace holoforms {

struct Token {
  enum class Kind { Number, Identifier, Symbol, End };

  Kind kind;
  std::string text;
  int line;
  int column;
};

/// Splits text into numbers (digit runs), identifiers (a letter run followed
/// by an optional digit run, so "x1dx2" is two tokens) and single-character
/// symbols from "+-*/^=(),". Whitespace, including newlines, only separates.
/// Throws ParseError on any other character.
std::vector<Token> tokenize(std::string_view text, int first_line = 1);

/// Cursor over a token vector with the error helpers both the form grammar
/// and the link declaration grammar use.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(int ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_symbol(char c, int ahead = 0) const;
  bool accept_symbol(char c);
  void expect_symbol(char c);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace holoforms
