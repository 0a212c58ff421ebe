#include "blowchern/ring.hpp"

#include "blowchern/error.hpp"
#include "blowchern/expression.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace blowchern {

namespace detail {

struct WeightPiece {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;
  Lattice lattice;
};

struct RingData {
  std::vector<GeneratorSpec> generators;
  std::vector<int> weights;
  std::vector<Polynomial> relations;
  int truncation = 0;
  std::vector<WeightPiece> pieces;
};

}  // namespace detail

namespace {

void enumerate(std::span<const int> weights, std::size_t i, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (i == weights.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = remaining / weights[i]; e >= 0; --e) {
    cur[i] = e;
    enumerate(weights, i + 1, remaining - e * weights[i], cur, out);
  }
  cur[i] = 0;
}

std::vector<Monomial> monomials_of_weight(std::span<const int> weights, int w) {
  std::vector<Monomial> out;
  Monomial cur(weights.size(), 0);
  enumerate(weights, 0, w, cur, out);
  std::sort(out.begin(), out.end(), MonomialGreater{});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

const detail::RingData& Ring::data() const {
  if (!data_) throw Error(ErrorKind::InvalidArgument, "use of an empty Ring handle");
  return *data_;
}

const std::vector<GeneratorSpec>& Ring::generators() const { return data().generators; }
std::size_t Ring::num_generators() const { return data().generators.size(); }
std::span<const int> Ring::weights() const { return data().weights; }
int Ring::truncation() const { return data().truncation; }
const std::vector<Polynomial>& Ring::relations() const { return data().relations; }

std::vector<std::string> Ring::names() const {
  std::vector<std::string> out;
  for (const auto& g : data().generators) out.push_back(g.name);
  return out;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& gens = data().generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return i;
  return std::nullopt;
}

int Ring::weight_of(const Monomial& m) const { return monomial_weight(m, data().weights); }

Element Ring::zero() const { return Element(*this, {}); }
Element Ring::one() const { return constant(1); }

Element Ring::constant(const Integer& c) const {
  return from_terms(TermMap{{Monomial(num_generators(), 0), c}});
}

Element Ring::gen(std::string_view name) const {
  const auto i = index_of(name);
  if (!i) throw Error(ErrorKind::UnknownGenerator, "no generator named '" + std::string(name) + "'");
  return gen(*i);
}

Element Ring::gen(std::size_t index) const {
  Monomial m(num_generators(), 0);
  m.at(index) = 1;
  return monomial(m);
}

Element Ring::monomial(const Monomial& m, const Integer& c) const {
  return from_terms(TermMap{{m, c}});
}

Element Ring::element(const Polynomial& p) const {
  if (p.num_vars() != num_generators())
    throw Error(ErrorKind::RingMismatch, "polynomial has the wrong number of variables");
  return from_terms(p.terms());
}

Element Ring::element(std::string_view expression) const {
  const auto names_ = names();
  try {
    return element(parse_polynomial(expression, names_, weights(), truncation()));
  } catch (const ParseError& e) {
    if (e.kind() == ErrorKind::SemanticError)
      throw Error(ErrorKind::UnknownGenerator, e.detail());
    throw;
  }
}

Element Ring::from_terms(const TermMap& terms) const { return Element(*this, normalize(terms)); }

const std::vector<Monomial>& Ring::monomials(int weight) const {
  return data().pieces.at(static_cast<std::size_t>(weight)).monomials;
}

const Lattice& Ring::relation_lattice(int weight) const {
  return data().pieces.at(static_cast<std::size_t>(weight)).lattice;
}

TermMap Ring::normalize(const TermMap& terms) const {
  const auto& d = data();
  std::map<int, IntVector> buckets;
  for (const auto& [m, c] : terms) {
    if (m.size() != d.weights.size())
      throw Error(ErrorKind::RingMismatch, "monomial has the wrong number of variables");
    if (c == 0) continue;
    const int w = monomial_weight(m, d.weights);
    if (w > d.truncation) continue;
    const auto& piece = d.pieces[static_cast<std::size_t>(w)];
    auto [it, fresh] = buckets.try_emplace(w);
    if (fresh) it->second.assign(piece.monomials.size(), 0);
    it->second[piece.index.at(m)] += c;
  }
  TermMap out;
  for (auto& [w, vec] : buckets) {
    const auto& piece = d.pieces[static_cast<std::size_t>(w)];
    const IntVector reduced = piece.lattice.reduce(std::move(vec));
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i] != 0) out.emplace(piece.monomials[i], reduced[i]);
  }
  return out;
}

Ring make_ring_from_polynomials(std::vector<GeneratorSpec> generators,
                                std::vector<Polynomial> relations, int truncation_weight) {
  if (truncation_weight < 0)
    throw Error(ErrorKind::ZeroTruncation, "truncation weight must be nonnegative");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.weight < 1)
      throw Error(ErrorKind::InvalidArgument, "generator '" + g.name + "' must have weight >= 1");
    if (g.name.empty()) throw Error(ErrorKind::InvalidArgument, "generator with empty name");
    if (!seen.insert(g.name).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate generator '" + g.name + "'");
  }

  auto data = std::make_shared<detail::RingData>();
  data->generators = std::move(generators);
  for (const auto& g : data->generators) data->weights.push_back(g.weight);
  data->truncation = truncation_weight;

  for (auto& r : relations) {
    if (r.num_vars() != data->weights.size())
      throw Error(ErrorKind::UnknownGenerator, "relation written over a different generator set");
    if (r.is_zero()) continue;
    if (!r.homogeneous_weight(data->weights))
      throw Error(ErrorKind::NonHomogeneousRelation, "relation is not homogeneous");
    data->relations.push_back(std::move(r));
  }

  const std::size_t n = static_cast<std::size_t>(truncation_weight) + 1;
  data->pieces.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    auto& piece = data->pieces[w];
    piece.monomials = monomials_of_weight(data->weights, static_cast<int>(w));
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], i);
  }
  for (std::size_t w = 0; w < n; ++w) {
    auto& piece = data->pieces[w];
    std::vector<IntVector> gens;
    for (const auto& r : data->relations) {
      const int rw = *r.homogeneous_weight(data->weights);
      if (rw > static_cast<int>(w)) continue;
      for (const auto& m : data->pieces[w - static_cast<std::size_t>(rw)].monomials) {
        IntVector v(piece.monomials.size(), 0);
        for (const auto& [rm, c] : r.terms()) v[piece.index.at(monomial_product(rm, m))] += c;
        gens.push_back(std::move(v));
      }
    }
    piece.lattice = Lattice(piece.monomials.size(), gens);
  }

  Ring ring(std::move(data));
  for (const auto& r : ring.relations())
    if (!ring.element(r).is_zero())
      throw Error(ErrorKind::InvalidArgument, "internal: relation does not normalize to zero");
  return ring;
}

Ring make_ring(std::vector<GeneratorSpec> generators, const std::vector<std::string>& relations,
               int truncation_weight) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& g : generators) {
    names.push_back(g.name);
    weights.push_back(g.weight);
  }
  std::vector<Polynomial> polys;
  for (const auto& text : relations) {
    try {
      polys.push_back(parse_polynomial(text, names, weights));
    } catch (const ParseError& e) {
      if (e.kind() == ErrorKind::SemanticError) throw Error(ErrorKind::UnknownGenerator, e.detail());
      throw;
    }
  }
  return make_ring_from_polynomials(std::move(generators), std::move(polys), truncation_weight);
}

// ---------------------------------------------------------------------------
// Element

void Element::require_same_ring(const Element& other) const {
  if (!(ring_ == other.ring_))
    throw Error(ErrorKind::RingMismatch, "elements belong to different rings");
}

Integer Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Element::constant_term() const {
  if (terms_.empty()) return 0;
  return coefficient(Monomial(ring_.num_generators(), 0));
}

Element Element::component(int weight) const {
  TermMap out;
  for (const auto& [m, c] : terms_)
    if (ring_.weight_of(m) == weight) out.emplace(m, c);
  return Element(ring_, std::move(out));
}

int Element::top_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, ring_.weight_of(m));
  return w;
}

std::optional<int> Element::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    const int mw = ring_.weight_of(m);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

Element Element::pow(unsigned exponent) const {
  Element result = ring_.one();
  Element base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Element& Element::operator+=(const Element& other) {
  require_same_ring(other);
  TermMap sum = terms_;
  for (const auto& [m, c] : other.terms_) sum[m] += c;
  terms_ = ring_.normalize(sum);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_ring(other);
  TermMap sum = terms_;
  for (const auto& [m, c] : other.terms_) sum[m] -= c;
  terms_ = ring_.normalize(sum);
  return *this;
}

Element& Element::operator*=(const Element& other) {
  require_same_ring(other);
  const int trunc = ring_.truncation();
  const auto weights = ring_.weights();
  TermMap prod;
  for (const auto& [ma, ca] : terms_) {
    const int wa = monomial_weight(ma, weights);
    for (const auto& [mb, cb] : other.terms_) {
      if (wa + monomial_weight(mb, weights) > trunc) continue;
      prod[monomial_product(ma, mb)] += ca * cb;
    }
  }
  terms_ = ring_.normalize(prod);
  return *this;
}

Element& Element::operator*=(const Integer& scalar) {
  TermMap scaled;
  for (const auto& [m, c] : terms_) scaled.emplace(m, c * scalar);
  terms_ = ring_.normalize(scaled);
  return *this;
}

Element Element::operator-() const {
  Element r(*this);
  r *= Integer(-1);
  return r;
}

Element normal_form(const Element& element) {
  return element.ring().from_terms(element.terms());
}

Element normal_form(const Polynomial& p, const Ring& ring) { return ring.element(p); }

Element multiply(const Element& a, const Element& b) { return a * b; }

// ---------------------------------------------------------------------------
// RingMap

RingMap RingMap::make(Ring source, Ring target, const std::map<std::string, Element>& images) {
  RingMap map;
  map.source_ = source;
  map.target_ = target;
  for (const auto& [name, img] : images) {
    if (!source.index_of(name))
      throw Error(ErrorKind::UnknownGenerator, "map image given for unknown generator '" + name + "'");
    if (!(img.ring() == target))
      throw Error(ErrorKind::RingMismatch, "image of '" + name + "' is not in the target ring");
  }
  for (const auto& g : source.generators()) {
    auto it = images.find(g.name);
    if (it == images.end())
      throw Error(ErrorKind::UnknownGenerator, "no image given for generator '" + g.name + "'");
    const Element& img = it->second;
    const auto w = img.homogeneous_weight();
    if (!img.is_zero() && (!w || *w != g.weight))
      throw Error(ErrorKind::DegreeMismatch,
                  "image of '" + g.name + "' must be homogeneous of weight " + std::to_string(g.weight));
    map.images_.push_back(img);
  }
  for (const auto& r : source.relations())
    if (!map.apply(r).is_zero())
      throw Error(ErrorKind::IllDefinedMap, "a source relation does not map to zero");
  for (int w = source.truncation() + 1; w <= target.truncation(); ++w)
    for (const auto& m : monomials_of_weight(source.weights(), w))
      if (!map.apply(Polynomial::monomial(m)).is_zero())
        throw Error(ErrorKind::IllDefinedMap,
                    "a monomial above the source truncation has a nonzero image");
  return map;
}

RingMap RingMap::identity(const Ring& ring) {
  std::map<std::string, Element> images;
  for (std::size_t i = 0; i < ring.num_generators(); ++i)
    images.emplace(ring.generators()[i].name, ring.gen(i));
  return make(ring, ring, images);
}

Element RingMap::apply(const Polynomial& p) const {
  if (p.num_vars() != source_.num_generators())
    throw Error(ErrorKind::RingMismatch, "polynomial is not over the map's source");
  const int trunc = target_.truncation();
  Element out = target_.zero();
  for (const auto& [m, c] : p.terms()) {
    if (source_.weight_of(m) > trunc) continue;
    Element term = target_.constant(c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      if (m[i] > 0) term *= images_[i].pow(static_cast<unsigned>(m[i]));
    out += term;
  }
  return out;
}

Element RingMap::operator()(const Element& x) const {
  if (!(x.ring() == source_)) throw Error(ErrorKind::RingMismatch, "element is not in the map's source");
  Polynomial p(source_.num_generators());
  for (const auto& [m, c] : x.terms()) p.add_term(m, c);
  return apply(p);
}

Element apply_map(const RingMap& map, const Element& x) { return map(x); }

// ---------------------------------------------------------------------------
// Graded structure and extensions

GradedBasis graded_basis(const Ring& ring, int weight) {
  GradedBasis out;
  out.weight = weight;
  if (weight < 0 || weight > ring.truncation()) return out;
  const auto& monos = ring.monomials(weight);
  const Lattice& lat = ring.relation_lattice(weight);
  std::vector<bool> pivot(monos.size(), false);
  for (std::size_t p : lat.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (!pivot[i]) out.basis.push_back(monos[i]);
  for (const auto& d : lat.invariant_factors())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

Polynomial lift_to_extension(const Polynomial& p, const RingExtension& ext) {
  std::vector<std::size_t> slots(p.num_vars());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = ext.offset + i;
  return p.embed(ext.ring.num_generators(), slots);
}

RingExtension extend_ring(const Ring& base, std::vector<GeneratorSpec> new_generators,
                          const std::vector<Polynomial>& new_relations, int truncation_weight) {
  const std::size_t offset = new_generators.size();
  std::vector<GeneratorSpec> gens = std::move(new_generators);
  for (const auto& g : base.generators()) gens.push_back(g);
  const std::size_t n = gens.size();

  std::vector<std::size_t> slots(base.num_generators());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = offset + i;

  std::vector<Polynomial> rels = new_relations;
  for (const auto& r : base.relations()) rels.push_back(r.embed(n, slots));
  for (int w = base.truncation() + 1; w <= truncation_weight; ++w)
    for (const auto& m : monomials_of_weight(base.weights(), w))
      rels.push_back(Polynomial::monomial(m).embed(n, slots));

  Ring ring = make_ring_from_polynomials(std::move(gens), std::move(rels), truncation_weight);
  std::map<std::string, Element> images;
  for (std::size_t i = 0; i < base.num_generators(); ++i)
    images.emplace(base.generators()[i].name, ring.gen(offset + i));
  RingMap inclusion = RingMap::make(base, ring, images);
  return {std::move(ring), std::move(inclusion), offset};
}

std::string fresh_generator_name(const Ring& ring, const std::string& base) {
  if (!ring.index_of(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!ring.index_of(candidate)) return candidate;
  }
}

}  // namespace blowchern
