#include "blowchern/polynomial.hpp"

#include "blowchern/error.hpp"

namespace blowchern {

int monomial_weight(const Monomial& m, std::span<const int> weights) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * weights[i];
  return w;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Monomial m(num_vars, 0);
  m.at(index) = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != num_vars_)
    throw Error(ErrorKind::InvalidArgument, "monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials over different variables");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials over different variables");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials over different variables");
  Polynomial r(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::multiply_capped(const Polynomial& a, const Polynomial& b,
                                       std::span<const int> weights, int cap) {
  if (a.num_vars_ != b.num_vars_)
    throw Error(ErrorKind::InvalidArgument, "polynomials over different variables");
  Polynomial r(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    const int wa = monomial_weight(ma, weights);
    if (wa > cap) continue;
    for (const auto& [mb, cb] : b.terms_)
      if (wa + monomial_weight(mb, weights) <= cap)
        r.add_term(monomial_product(ma, mb), ca * cb);
  }
  return r;
}

Polynomial Polynomial::pow_capped(unsigned exponent, std::span<const int> weights,
                                  int cap) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply_capped(result, base, weights, cap);
    exponent >>= 1u;
    if (exponent > 0) base = multiply_capped(base, base, weights, cap);
  }
  return result;
}

std::optional<int> Polynomial::homogeneous_weight(std::span<const int> weights) const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    const int mw = monomial_weight(m, weights);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w.value_or(0);
}

Polynomial Polynomial::embed(std::size_t num_vars, std::span<const std::size_t> slot_of) const {
  Polynomial r(num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial out(num_vars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) out.at(slot_of[i]) += m[i];
    r.add_term(out, c);
  }
  return r;
}

}  // namespace blowchern
