#pragma once

#include "blowchern/polynomial.hpp"
#include "blowchern/ring.hpp"

#include <span>
#include <string>

namespace blowchern {

enum class Notation {
  Ascii,    // 3*H^2 - h*t, re-parseable by the model reader
  Unicode,  // 3·H² - h·t
};

std::string format_monomial(const Monomial& m, std::span<const std::string> names, Notation n);

/// Terms ordered by increasing weight, largest monomial first within a
/// weight. Zero prints as "0".
std::string format_terms(const TermMap& terms, std::span<const std::string> names,
                         std::span<const int> weights, Notation n);

std::string format_element(const Element& e, Notation n = Notation::Ascii);
std::string format_polynomial(const Polynomial& p, const Ring& ring, Notation n = Notation::Ascii);

std::string superscript(int value);

}  // namespace blowchern
