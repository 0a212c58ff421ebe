#pragma once

#include "blowchern/integer.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace blowchern {

/// Exponent vector over a ring's generators, in declaration order.
using Monomial = std::vector<int>;

/// Lexicographic on exponent vectors, larger monomials first.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

using TermMap = std::map<Monomial, Integer, MonomialGreater>;

int monomial_weight(const Monomial& m, std::span<const int> weights);

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Element of the free commutative ring Z[g_1..g_n], untruncated.
///
/// Used to hold relations before a quotient exists, and by the oracles in the
/// test suite that expand products without any rewriting.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const Integer& c);
  Integer coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

  /// Product that drops every term of weight above `cap`.
  static Polynomial multiply_capped(const Polynomial& a, const Polynomial& b,
                                    std::span<const int> weights, int cap);
  Polynomial pow_capped(unsigned exponent, std::span<const int> weights, int cap) const;

  /// Weight shared by every term; nullopt when mixed. Zero has weight 0.
  std::optional<int> homogeneous_weight(std::span<const int> weights) const;

  /// Re-index into a ring with more generators: variable i goes to slot map[i].
  Polynomial embed(std::size_t num_vars, std::span<const std::size_t> slot_of) const;

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

}  // namespace blowchern
