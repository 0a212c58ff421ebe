#pragma once

#include "blowchern/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blowchern {

enum class TokenKind {
  Identifier,
  Integer,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Equals,
  Colon,
  Arrow,
  Semicolon,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

std::string_view describe(TokenKind kind);

/// Splits model/expression text into tokens. `#` starts a comment running to
/// end of line. Throws ParseError(SyntaxError) on a stray character.
std::vector<Token> tokenize(std::string_view source);

/// Parsed arithmetic expression; names are resolved only at evaluation.
struct Expr {
  enum class Kind { Number, Name, Add, Sub, Mul, Neg, Pow };

  Kind kind;
  std::string text;  // literal digits or generator name
  unsigned exponent = 0;
  std::vector<std::unique_ptr<Expr>> args;
  int line = 0;
  int column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses `expr := term (('+'|'-') term)*` starting at tokens[pos]; advances
/// pos past the expression. Stops at the first token that cannot continue it.
ExprPtr parse_expression(std::span<const Token> tokens, std::size_t& pos);

/// Maps a generator name to its variable index, or nullopt when undeclared.
using NameResolver = std::function<std::optional<std::size_t>(std::string_view)>;

struct EvaluationOptions {
  std::size_t num_vars = 0;
  std::span<const int> weights;
  std::optional<int> weight_cap;  // drop terms above this weight while evaluating
};

/// Evaluates an expression to a polynomial. Unknown names raise
/// ParseError(SemanticError) positioned at the name.
Polynomial evaluate(const Expr& expr, const NameResolver& resolve,
                    const EvaluationOptions& options);

/// Convenience: tokenize + parse + evaluate a standalone expression over the
/// given generator names.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            std::span<const int> weights,
                            std::optional<int> weight_cap = std::nullopt);

}  // namespace blowchern
