#include "blowchern/format.hpp"

#include <algorithm>
#include <vector>

namespace blowchern {

std::string superscript(int value) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(value), out;
  for (char c : s) out += c == '-' ? "⁻" : digits[c - '0'];
  return out;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names, Notation n) {
  std::string out;
  const char* sep = n == Notation::Ascii ? "*" : "·";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += names[i];
    if (m[i] > 1) out += n == Notation::Ascii ? "^" + std::to_string(m[i]) : superscript(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_terms(const TermMap& terms, std::span<const std::string> names,
                         std::span<const int> weights, Notation n) {
  if (terms.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Integer*>> ordered;
  for (const auto& [m, c] : terms) ordered.emplace_back(&m, &c);
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return monomial_weight(*a.first, weights) < monomial_weight(*b.first, weights);
  });
  const char* sep = n == Notation::Ascii ? "*" : "·";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Integer mag = abs(*c);
    if (first) {
      if (*c < 0) out += "-";
    } else {
      out += *c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = std::all_of(m->begin(), m->end(), [](int e) { return e == 0; });
    if (unit) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + sep;
      out += format_monomial(*m, names, n);
    }
  }
  return out;
}

std::string format_element(const Element& e, Notation n) {
  const auto names = e.ring().names();
  return format_terms(e.terms(), names, e.ring().weights(), n);
}

std::string format_polynomial(const Polynomial& p, const Ring& ring, Notation n) {
  const auto names = ring.names();
  return format_terms(p.terms(), names, ring.weights(), n);
}

}  // namespace blowchern
