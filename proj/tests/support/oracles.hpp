#pragma once

#include <blowchern/ring.hpp>

#include <cstddef>

// Slow, independent re-computations used to check the library.
namespace blowchern::oracle {

/// Rank of the weight-w piece of `ring`, as (#monomials) - rank over Q of the
/// relation-times-monomial products. Built from the raw presentation with
/// free polynomial products and rational Gaussian elimination.
std::size_t rational_rank(const Ring& ring, int weight);

/// An element's terms as a free polynomial.
Polynomial as_polynomial(const Element& e);

/// prod_{i=1..m} (1 + t + s_i) in Z[t, s_1..s_m], variables in that order.
Polynomial roots_product(int m);

/// Elementary symmetric polynomial e_r(s_1..s_m) in Z[t, s_1..s_m].
Polynomial elementary_symmetric(int r, int m);

/// Substitutes polynomials for the variables of p.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Drops every term of total weight above `cap` (unit weights).
Polynomial truncate_degree(const Polynomial& p, int cap);

}  // namespace blowchern::oracle
