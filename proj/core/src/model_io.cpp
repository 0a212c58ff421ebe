#include "blowchern/model_io.hpp"

#include "blowchern/error.hpp"
#include "blowchern/expression.hpp"
#include "blowchern/format.hpp"

#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace blowchern {

namespace {

struct Located {
  int line = 0;
  int column = 0;
};

struct Position : Located {
  Position() = default;
  explicit Position(const Token& t) : Located{t.line, t.column} {}
};

struct IntStatement {
  Position at;
  long value = 0;
};

struct ExprStatement {
  Position at;
  ExprPtr expr;
};

struct RelationStatement {
  Position at;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct RestrictStatement {
  Position at;
  std::string name;
  ExprPtr image;
};

struct ManifoldBlock {
  Position at;
  Position close;
  std::string name;
  std::optional<IntStatement> dim_real;
  std::vector<std::pair<Position, GeneratorSpec>> generators;
  std::vector<RelationStatement> relations;
  std::optional<ExprStatement> chern;
  std::optional<std::pair<ExprStatement, IntStatement>> pairing;
};

struct EmbeddingBlock {
  Position at;
  Position close;
  std::optional<IntStatement> codim;
  std::vector<RestrictStatement> restrictions;
  std::optional<ExprStatement> normal_chern;
  std::optional<ExprStatement> dual;
};

[[noreturn]] void syntax(const Token& t, const std::string& msg) {
  throw ParseError(ErrorKind::SyntaxError, t.line, t.column, msg);
}

[[noreturn]] void semantic(const Located& at, const std::string& msg) {
  throw ParseError(ErrorKind::SemanticError, at.line, at.column, msg);
}

std::string found(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return std::string(describe(t.kind)) + " '" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  void parse_document() {
    while (peek().kind != TokenKind::End) {
      const Token& t = peek();
      if (t.kind == TokenKind::Identifier && t.text == "manifold")
        parse_manifold();
      else if (t.kind == TokenKind::Identifier && t.text == "embedding")
        parse_embedding();
      else
        syntax(t, "expected 'manifold' or 'embedding', found " + found(t));
    }
    std::string missing;
    if (!manifolds_.count("M")) missing += " manifold M";
    if (!manifolds_.count("X")) missing += " manifold X";
    if (!embedding_) missing += " embedding";
    if (!missing.empty()) syntax(peek(), "missing required block(s):" + missing);
  }

  std::map<std::string, ManifoldBlock> manifolds_;
  std::optional<EmbeddingBlock> embedding_;

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) syntax(peek(), "expected " + what + ", found " + found(peek()));
    return next();
  }

  long integer() {
    bool negative = false;
    if (peek().kind == TokenKind::Minus) {
      next();
      negative = true;
    }
    const Token& t = expect(TokenKind::Integer, "an integer");
    if (t.text.size() > 12) syntax(t, "integer literal too large");
    const long v = std::stol(t.text);
    return negative ? -v : v;
  }

  ExprPtr expression() {
    if (peek().kind == TokenKind::RBrace || peek().kind == TokenKind::End || peek().kind == TokenKind::Semicolon)
      syntax(peek(), "expected an expression, found " + found(peek()));
    return parse_expression(tokens_, pos_);
  }

  template <class T>
  void once(const std::optional<T>& slot, const Token& kw) {
    if (slot) semantic(Position(kw), "duplicate '" + kw.text + "' statement");
  }

  void end_statement() {
    if (peek().kind == TokenKind::Semicolon) {
      next();
      return;
    }
    if (peek().kind == TokenKind::Identifier || peek().kind == TokenKind::RBrace) return;
    syntax(peek(), "unexpected " + found(peek()) + " after statement");
  }

  void parse_manifold() {
    ManifoldBlock b;
    b.at = Position(next());
    const Token& name = expect(TokenKind::Identifier, "a manifold name");
    b.name = name.text;
    if (b.name != "M" && b.name != "X")
      semantic(Position(name), "manifold blocks are named M (ambient) or X (center), not '" + b.name + "'");
    if (manifolds_.count(b.name)) semantic(Position(name), "manifold " + b.name + " is declared twice");
    expect(TokenKind::LBrace, "'{'");
    while (peek().kind != TokenKind::RBrace) {
      const Token& kw = peek();
      if (kw.kind != TokenKind::Identifier) syntax(kw, "expected a statement, found " + found(kw));
      next();
      if (kw.text == "dim_real") {
        once(b.dim_real, kw);
        expect(TokenKind::Equals, "'='");
        b.dim_real = IntStatement{Position(kw), integer()};
      } else if (kw.text == "generator") {
        const Token& g = expect(TokenKind::Identifier, "a generator name");
        expect(TokenKind::Colon, "':'");
        const Token& wt = peek();
        const long w = integer();
        if (w < 1) semantic(Position(wt), "generator weight must be at least 1 (odd-degree classes are not supported)");
        for (const auto& [p, spec] : b.generators)
          if (spec.name == g.text) semantic(Position(g), "generator " + g.text + " declared twice");
        b.generators.push_back({Position(g), GeneratorSpec{g.text, static_cast<int>(w)}});
      } else if (kw.text == "relation") {
        ExprPtr lhs = expression();
        expect(TokenKind::Equals, "'='");
        ExprPtr rhs = expression();
        b.relations.push_back(RelationStatement{Position(kw), std::move(lhs), std::move(rhs)});
      } else if (kw.text == "chern") {
        once(b.chern, kw);
        expect(TokenKind::Equals, "'='");
        b.chern = ExprStatement{Position(kw), expression()};
      } else if (kw.text == "pairing") {
        once(b.pairing, kw);
        ExprStatement mono{Position(kw), expression()};
        expect(TokenKind::Equals, "'='");
        const Token& vt = peek();
        IntStatement value{Position(vt), integer()};
        b.pairing.emplace(std::move(mono), value);
      } else if (kw.text == "codim" || kw.text == "restrict" || kw.text == "normal_chern" || kw.text == "dual") {
        syntax(kw, "'" + kw.text + "' belongs in the embedding block");
      } else {
        syntax(kw, "unknown statement '" + kw.text + "'");
      }
      end_statement();
    }
    b.close = Position(next());
    std::string missing;
    if (!b.dim_real) missing += " dim_real";
    if (!b.chern) missing += " chern";
    if (!missing.empty())
      throw ParseError(ErrorKind::SyntaxError, b.close.line, b.close.column,
                       "manifold " + b.name + " is missing required key(s):" + missing);
    const std::string key = b.name;
    manifolds_.emplace(key, std::move(b));
  }

  void parse_embedding() {
    const Token& kw0 = next();
    if (embedding_) semantic(Position(kw0), "embedding block declared twice");
    EmbeddingBlock b;
    b.at = Position(kw0);
    expect(TokenKind::LBrace, "'{'");
    while (peek().kind != TokenKind::RBrace) {
      const Token& kw = peek();
      if (kw.kind != TokenKind::Identifier) syntax(kw, "expected a statement, found " + found(kw));
      next();
      if (kw.text == "codim") {
        once(b.codim, kw);
        expect(TokenKind::Equals, "'='");
        b.codim = IntStatement{Position(kw), integer()};
      } else if (kw.text == "restrict") {
        const Token& g = expect(TokenKind::Identifier, "a generator of M");
        expect(TokenKind::Arrow, "'->'");
        for (const auto& r : b.restrictions)
          if (r.name == g.text) semantic(Position(g), "restriction of " + g.text + " given twice");
        b.restrictions.push_back(RestrictStatement{Position(g), g.text, expression()});
      } else if (kw.text == "normal_chern") {
        once(b.normal_chern, kw);
        expect(TokenKind::Equals, "'='");
        b.normal_chern = ExprStatement{Position(kw), expression()};
      } else if (kw.text == "dual") {
        once(b.dual, kw);
        expect(TokenKind::Equals, "'='");
        b.dual = ExprStatement{Position(kw), expression()};
      } else if (kw.text == "dim_real" || kw.text == "generator" || kw.text == "relation" || kw.text == "chern" ||
                 kw.text == "pairing") {
        syntax(kw, "'" + kw.text + "' belongs in a manifold block");
      } else {
        syntax(kw, "unknown statement '" + kw.text + "'");
      }
      end_statement();
    }
    b.close = Position(next());
    std::string missing;
    if (!b.codim) missing += " codim";
    if (!b.normal_chern) missing += " normal_chern";
    if (!b.dual) missing += " dual";
    if (!missing.empty())
      throw ParseError(ErrorKind::SyntaxError, b.close.line, b.close.column,
                       "embedding is missing required key(s):" + missing);
    embedding_ = std::move(b);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Evaluates an expression over a ring, positioning library errors.
Element element_of(const Ring& ring, const ExprStatement& s) {
  const auto names = ring.names();
  NameResolver resolve = [&](std::string_view n) { return ring.index_of(n); };
  const Polynomial p = evaluate(*s.expr, resolve, {names.size(), ring.weights(), ring.truncation()});
  return ring.element(p);
}

template <class F>
auto positioned(const Located& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    semantic(at, e.what());
  }
}

ManifoldModel build_manifold(const ManifoldBlock& b) {
  const long dim = b.dim_real->value;
  if (dim < 0 || dim % 2 != 0)
    semantic(b.dim_real->at, "dim_real must be even and non-negative (odd-degree cohomology is not supported)");
  if (dim > 64) semantic(b.dim_real->at, "dim_real is too large");
  const int trunc = static_cast<int>(dim / 2);

  std::vector<GeneratorSpec> gens;
  std::vector<int> weights;
  for (const auto& [p, g] : b.generators) {
    gens.push_back(g);
    weights.push_back(g.weight);
  }
  NameResolver resolve = [&](std::string_view n) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == n) return i;
    return std::nullopt;
  };
  std::vector<Polynomial> rels;
  for (const auto& r : b.relations) {
    Polynomial lhs = evaluate(*r.lhs, resolve, {gens.size(), weights, std::nullopt});
    Polynomial rhs = evaluate(*r.rhs, resolve, {gens.size(), weights, std::nullopt});
    Polynomial rel = lhs - rhs;
    if (!rel.is_zero() && !rel.homogeneous_weight(weights))
      semantic(r.at, "relation is not homogeneous (mixes weights)");
    rels.push_back(std::move(rel));
  }
  const Ring ring = positioned(b.at, [&] { return make_ring_from_polynomials(gens, rels, trunc); });
  const Element chern = positioned(b.chern->at, [&] { return element_of(ring, *b.chern); });

  std::optional<Pairing> pairing;
  if (b.pairing) {
    const auto& [mono, value] = *b.pairing;
    const Polynomial p = evaluate(*mono.expr, resolve, {gens.size(), weights, std::nullopt});
    if (p.terms().size() != 1 || p.terms().begin()->second != 1)
      semantic(mono.at, "pairing must be assigned to a single monomial");
    const Monomial anchor = p.terms().begin()->first;
    pairing = positioned(mono.at, [&] { return Pairing::make(ring, anchor, value.value); });
  } else if (trunc == 0) {
    pairing = Pairing::make(ring, Monomial(gens.size(), 0), 1);
  }
  return positioned(b.at, [&] { return make_manifold(b.name, static_cast<int>(dim), ring, chern, pairing); });
}

EmbeddingModel build(const Parser& parser) {
  const ManifoldModel m = build_manifold(parser.manifolds_.at("M"));
  const ManifoldModel x = build_manifold(parser.manifolds_.at("X"));
  const EmbeddingBlock& b = *parser.embedding_;

  std::map<std::string, Element> images;
  for (const auto& r : b.restrictions) {
    if (!m.ring.index_of(r.name)) semantic(r.at, "'" + r.name + "' is not a generator of M");
    images.emplace(r.name, positioned(r.at, [&] {
                     NameResolver resolve = [&](std::string_view n) { return x.ring.index_of(n); };
                     return x.ring.element(
                         evaluate(*r.image, resolve, {x.ring.num_generators(), x.ring.weights(), x.ring.truncation()}));
                   }));
  }
  for (const auto& g : m.ring.generators())
    if (!images.count(g.name)) semantic(b.close, "missing restriction for generator " + g.name);
  const RingMap restriction = positioned(b.at, [&] { return RingMap::make(m.ring, x.ring, images); });

  const long k = b.codim->value;
  if (k < 1 || k > 64) semantic(b.codim->at, "codim must be a positive integer");
  const Element normal = positioned(b.normal_chern->at, [&] { return element_of(x.ring, *b.normal_chern); });
  const Element dual = positioned(b.dual->at, [&] { return element_of(m.ring, *b.dual); });
  // Point validation failures at the statement responsible for them.
  try {
    return make_embedding(m, x, restriction, static_cast<int>(k), normal, dual);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::DimensionMismatch: semantic(b.codim->at, e.what());
      case ErrorKind::RankMismatch: semantic(b.normal_chern->at, e.what());
      case ErrorKind::DegreeMismatch: semantic(b.dual->at, e.what());
      default: semantic(b.at, e.what());
    }
  }
}

void write_manifold(std::ostringstream& out, const ManifoldModel& m) {
  const Ring& r = m.ring;
  out << "manifold " << m.name << " {\n";
  out << "  dim_real = " << m.dim_real << "\n";
  for (const auto& g : r.generators()) out << "  generator " << g.name << " : " << g.weight << "\n";
  for (const auto& rel : r.relations()) out << "  relation " << format_polynomial(rel, r) << " = 0\n";
  out << "  chern = " << format_element(m.chern.value()) << "\n";
  if (m.pairing) {
    const std::vector<std::string> names = r.names();
    std::string mono = format_monomial(m.pairing->anchor(), names, Notation::Ascii);
    if (!(m.dim_real == 0 && m.pairing->value() == 1))
      out << "  pairing " << (mono.empty() ? "1" : mono) << " = " << to_string(m.pairing->value()) << "\n";
  }
  out << "}\n";
}

}  // namespace

EmbeddingModel parse_model(std::string_view text) {
  Parser parser(text);
  parser.parse_document();
  return build(parser);
}

std::string serialize_model(const EmbeddingModel& model) {
  std::ostringstream out;
  write_manifold(out, model.ambient);
  out << "\n";
  write_manifold(out, model.center);
  out << "\nembedding {\n";
  out << "  codim = " << model.codim << "\n";
  const auto& gens = model.ambient.ring.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out << "  restrict " << gens[i].name << " -> " << format_element(model.restriction.images()[i]) << "\n";
  out << "  normal_chern = " << format_element(model.normal_chern.value()) << "\n";
  out << "  dual = " << format_element(model.dual_class) << "\n";
  out << "}\n";
  return out.str();
}

bool equivalent(const EmbeddingModel& a, const EmbeddingModel& b) { return serialize_model(a) == serialize_model(b); }

}  // namespace blowchern
