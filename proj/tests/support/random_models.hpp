#pragma once

#include <blowchern/ring.hpp>

#include <random>
#include <string>

// Generators of random inputs for the property suites.
namespace blowchern::oracle {

/// Linear P^a inside P^n (a = 0 is a point).
std::string linear_subspace_model(int n, int a);

/// P^a x P^c inside P^a x P^b, linear in the second factor; c = 0 is P^a x pt.
std::string product_model(int a, int b, int c);

/// pt x P^m inside S^6 x P^m.
std::string sphere_product_model(int m);

/// X with a random presentation and random Chern data; M is the total space
/// of a rank-k bundle over X (same ring, truncation raised by k, i^* = id,
/// omega_X = c_k). No pairings.
std::string bundle_total_space_model(std::mt19937& rng, int base_dim, int k);

/// One of the families above with 2 <= k <= 4 and dim_real(M) <= 12.
std::string random_admissible_model(std::mt19937& rng, std::string* family = nullptr);

/// A random ring: 1-3 generators of weight 1-2, up to three homogeneous
/// relations with small coefficients, truncation 1-4.
Ring random_ring(std::mt19937& rng);

/// Random element with coefficients in [-range, range] on every monomial of
/// weight <= max_weight (defaults to the truncation).
Element random_element(const Ring& ring, std::mt19937& rng, int range = 3, int max_weight = -1);

/// Random homogeneous element of the given weight.
Element random_homogeneous(const Ring& ring, std::mt19937& rng, int weight, int range = 3);

/// 1 + random positive-weight part.
Element random_total(const Ring& ring, std::mt19937& rng, int range = 3);

int uniform(std::mt19937& rng, int lo, int hi);

}  // namespace blowchern::oracle
