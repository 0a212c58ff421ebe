#include "blowchern/expression.hpp"

#include "blowchern/error.hpp"

#include <cctype>
#include <limits>

namespace blowchern {
namespace {

constexpr unsigned kMaxExponent = 4096;
constexpr std::size_t kMaxTerms = 200000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void syntax_error(const Token& at, const std::string& message) {
  throw ParseError(ErrorKind::SyntaxError, at.line, at.column, message);
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t& pos) : tokens_(tokens), pos_(pos) {}

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = next();
      auto node = make(op.kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op);
      node->args.push_back(std::move(lhs));
      node->args.push_back(term());
      lhs = std::move(node);
    }
    return lhs;
  }

 private:
  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::Star) {
      const Token& op = next();
      auto node = make(Expr::Kind::Mul, op);
      node->args.push_back(std::move(lhs));
      node->args.push_back(unary());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::Minus) {
      const Token& op = next();
      auto node = make(Expr::Kind::Neg, op);
      node->args.push_back(unary());
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != TokenKind::Caret) return base;
    const Token& op = next();
    const Token& exp = peek();
    if (exp.kind != TokenKind::Integer)
      syntax_error(exp, "expected a nonnegative integer exponent after '^', found " +
                            std::string(describe(exp.kind)));
    next();
    if (exp.text.size() > 6 || std::stoul(exp.text) > kMaxExponent)
      syntax_error(exp, "exponent " + exp.text + " is too large");
    auto node = make(Expr::Kind::Pow, op);
    node->exponent = static_cast<unsigned>(std::stoul(exp.text));
    node->args.push_back(std::move(base));
    return node;
  }

  ExprPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Integer: {
        next();
        auto node = make(Expr::Kind::Number, tok);
        node->text = tok.text;
        return node;
      }
      case TokenKind::Identifier: {
        next();
        auto node = make(Expr::Kind::Name, tok);
        node->text = tok.text;
        return node;
      }
      case TokenKind::LParen: {
        next();
        ExprPtr inner = expression();
        if (peek().kind != TokenKind::RParen)
          syntax_error(peek(), "expected ')' to close '(' opened at " +
                                   std::to_string(tok.line) + ":" + std::to_string(tok.column));
        next();
        return inner;
      }
      default:
        syntax_error(tok, "expected an expression, found " + std::string(describe(tok.kind)));
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  static ExprPtr make(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  std::span<const Token> tokens_;
  std::size_t& pos_;
};

Polynomial eval(const Expr& e, const NameResolver& resolve, const EvaluationOptions& opt) {
  auto mul = [&](const Polynomial& a, const Polynomial& b) {
    Polynomial r = opt.weight_cap ? Polynomial::multiply_capped(a, b, opt.weights, *opt.weight_cap)
                                  : a * b;
    if (r.terms().size() > kMaxTerms)
      throw ParseError(ErrorKind::SemanticError, e.line, e.column, "expression is too large");
    return r;
  };
  switch (e.kind) {
    case Expr::Kind::Number:
      return Polynomial::constant(opt.num_vars, Integer(e.text));
    case Expr::Kind::Name: {
      const auto index = resolve(e.text);
      if (!index)
        throw ParseError(ErrorKind::SemanticError, e.line, e.column,
                         "unknown generator '" + e.text + "'");
      Polynomial v = Polynomial::variable(opt.num_vars, *index);
      if (opt.weight_cap && opt.weights[*index] > *opt.weight_cap) return Polynomial(opt.num_vars);
      return v;
    }
    case Expr::Kind::Add:
      return eval(*e.args[0], resolve, opt) + eval(*e.args[1], resolve, opt);
    case Expr::Kind::Sub:
      return eval(*e.args[0], resolve, opt) - eval(*e.args[1], resolve, opt);
    case Expr::Kind::Mul:
      return mul(eval(*e.args[0], resolve, opt), eval(*e.args[1], resolve, opt));
    case Expr::Kind::Neg:
      return -eval(*e.args[0], resolve, opt);
    case Expr::Kind::Pow: {
      const Polynomial base = eval(*e.args[0], resolve, opt);
      Polynomial result = Polynomial::constant(opt.num_vars, 1);
      for (unsigned i = 0; i < e.exponent; ++i) {
        result = mul(result, base);
        if (result.is_zero()) break;
      }
      return result;
    }
  }
  return Polynomial(opt.num_vars);
}

}  // namespace

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Colon: return "':'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{TokenKind::End, {}, line, col};
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && is_ident_start(src[j]))
        throw ParseError(ErrorKind::SyntaxError, line, col + static_cast<int>(j - i),
                         "identifier directly after a number; use '*' for products");
      tok.kind = TokenKind::Integer;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      tok.kind = TokenKind::Arrow;
      tok.text = "->";
      advance(2);
    } else {
      switch (c) {
        case '+': tok.kind = TokenKind::Plus; break;
        case '-': tok.kind = TokenKind::Minus; break;
        case '*': tok.kind = TokenKind::Star; break;
        case '^': tok.kind = TokenKind::Caret; break;
        case '(': tok.kind = TokenKind::LParen; break;
        case ')': tok.kind = TokenKind::RParen; break;
        case '{': tok.kind = TokenKind::LBrace; break;
        case '}': tok.kind = TokenKind::RBrace; break;
        case '=': tok.kind = TokenKind::Equals; break;
        case ':': tok.kind = TokenKind::Colon; break;
        case ';': tok.kind = TokenKind::Semicolon; break;
        default:
          throw ParseError(ErrorKind::SyntaxError, line, col,
                           std::string("unexpected character '") + c + "'");
      }
      tok.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::End, {}, line, col});
  return out;
}

ExprPtr parse_expression(std::span<const Token> tokens, std::size_t& pos) {
  Parser p(tokens, pos);
  return p.expression();
}

Polynomial evaluate(const Expr& expr, const NameResolver& resolve,
                    const EvaluationOptions& options) {
  return eval(expr, resolve, options);
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            std::span<const int> weights, std::optional<int> weight_cap) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t pos = 0;
  ExprPtr e = parse_expression(tokens, pos);
  if (tokens[pos].kind != TokenKind::End)
    syntax_error(tokens[pos], "unexpected " + std::string(describe(tokens[pos].kind)) +
                                  " after expression");
  NameResolver resolve = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  };
  return evaluate(*e, resolve, {names.size(), weights, weight_cap});
}

}  // namespace blowchern
