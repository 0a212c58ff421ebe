#include "blowchern/thom.hpp"

#include "blowchern/error.hpp"

namespace blowchern {

ThomRing thom_ring(const Ring& base, const Element& euler, const std::string& generator_name) {
  if (!(euler.ring() == base)) throw Error(ErrorKind::RingMismatch, "Euler class is not in the base ring");
  if (!euler.is_zero() && euler.homogeneous_weight() != 1)
    throw Error(ErrorKind::DegreeMismatch, "Euler class of a line bundle must have weight 1");

  const std::string name = fresh_generator_name(base, generator_name);
  const std::size_t n = base.num_generators() + 1;

  // x^2 + x e
  Polynomial relation(n);
  Monomial x2(n, 0);
  x2[0] = 2;
  relation.add_term(x2, 1);
  for (const auto& [m, c] : euler.terms()) {
    Monomial lifted(n, 0);
    lifted[0] = 1;
    for (std::size_t i = 0; i < m.size(); ++i) lifted[i + 1] = m[i];
    relation.add_term(lifted, c);
  }

  RingExtension ext = extend_ring(base, {GeneratorSpec{name, 1}}, {relation}, base.truncation() + 1);
  ThomRing out;
  out.base = base;
  out.euler = euler;
  out.ring = ext.ring;
  out.inclusion = ext.inclusion;
  out.x = ext.ring.gen(std::size_t{0});
  return out;
}

std::pair<Element, Element> ThomRing::split(const Element& y) const {
  if (!(y.ring() == ring)) throw Error(ErrorKind::RingMismatch, "element is not in the Thom ring");
  TermMap a, b;
  for (const auto& [m, c] : y.terms()) {
    Monomial rest(m.begin() + 1, m.end());
    if (m[0] == 0)
      a.emplace(std::move(rest), c);
    else if (m[0] == 1)
      b.emplace(std::move(rest), c);
    else
      throw Error(ErrorKind::InvalidArgument, "internal: normal form still contains x^2");
  }
  return {base.from_terms(a), base.from_terms(b)};
}

ThomElement to_thom_element(const ThomRing& thom, const Element& y) {
  auto [a, b] = thom.split(y);
  const Integer c = a.constant_term();
  if (!(a == thom.base.constant(c)))
    throw Error(ErrorKind::SubgroupViolation, "class has a component on the zero section without x");
  return ThomElement{c, b};
}

Element from_thom_element(const ThomRing& thom, const ThomElement& t) {
  if (!(t.x_part.ring() == thom.base)) throw Error(ErrorKind::RingMismatch, "x part is not in the base ring");
  return thom.ring.constant(t.constant) + thom.x * thom.inclusion(t.x_part);
}

TotalClass relative_class_chern(const TotalClass& c_xi, int m, const ThomRing& thom) {
  if (!(c_xi.ring() == thom.base)) throw Error(ErrorKind::RingMismatch, "bundle class is not over the Thom base");
  const TotalClass lifted(thom.inclusion(c_xi.value()), c_xi.rank());
  const TotalClass twisted = tensor_line_bundle(thom.x, lifted, m);
  const Element value = twisted.value() * total_inverse(lifted).value();
  const ThomElement check = to_thom_element(thom, value);
  if (check.constant != 1) throw Error(ErrorKind::SubgroupViolation, "relative class must start with 1");
  return TotalClass(value);
}

}  // namespace blowchern
