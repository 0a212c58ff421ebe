#pragma once

#include "blowchern/chern.hpp"
#include "blowchern/ring.hpp"

#include <string>

namespace blowchern {

/// Cohomology of the disk bundle of a complex line bundle over Y, written as
/// H*(Y)[x]/(x^2 + x e) with x the Thom class (so x restricts to -e on Y).
/// The Thom space itself is the subgroup Z + H*(Y)x.
struct ThomRing {
  Ring base;
  Element euler;      // e, in `base`
  Ring ring;          // ambient H*(Y)[x]/(x^2 + x e)
  RingMap inclusion;  // base -> ring
  Element x;

  /// y = a + b x with a, b in the base.
  std::pair<Element, Element> split(const Element& y) const;
};

/// Throws DegreeMismatch unless e is zero or of weight 1.
ThomRing thom_ring(const Ring& base, const Element& euler, const std::string& generator_name = "x");

/// Element of Z + H*(Y)x.
struct ThomElement {
  Integer constant;
  Element x_part;  // b in base, standing for b*x

  friend bool operator==(const ThomElement&, const ThomElement&) = default;
};

/// Throws SubgroupViolation when y has a non-constant part without x.
ThomElement to_thom_element(const ThomRing& thom, const Element& y);
Element from_thom_element(const ThomRing& thom, const ThomElement& t);

/// C(x (x) xi) / C(xi) = (sum_{r<=m} (1+x)^{m-r} c_r) * C(xi)^{-1}, evaluated in
/// the ambient ring. C_xi lives in the base. The result always differs from 1
/// by a multiple of x; SubgroupViolation flags inconsistent input.
TotalClass relative_class_chern(const TotalClass& c_xi, int m, const ThomRing& thom);

}  // namespace blowchern
