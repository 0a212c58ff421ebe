#pragma once

#include "blowchern/integer.hpp"

#include <cstddef>
#include <vector>

namespace blowchern {

using IntVector = std::vector<Integer>;

/// A sublattice of Z^n stored in reduced Hermite normal form.
///
/// Rows are kept in echelon form with strictly increasing pivot columns,
/// positive pivots, and every entry above a pivot reduced into [0, pivot).
/// With that normalization `reduce` returns a canonical representative of
/// the coset v + L, which is how quotient groups decide equality.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t dim, const std::vector<IntVector>& generators);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  const std::vector<IntVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical representative of v modulo the lattice.
  IntVector reduce(IntVector v) const;

  bool contains(const IntVector& v) const;

  /// Nonzero diagonal of the Smith normal form of the row matrix.
  std::vector<Integer> invariant_factors() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smith invariant factors d_1 | d_2 | ... (nonzero ones only) of an
/// arbitrary integer matrix given by rows.
std::vector<Integer> smith_invariants(std::vector<IntVector> rows, std::size_t cols);

bool is_zero(const IntVector& v);

}  // namespace blowchern
