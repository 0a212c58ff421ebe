#pragma once

#include "blowchern/chern.hpp"
#include "blowchern/ring.hpp"

#include <optional>
#include <string>

namespace blowchern {

/// Closed (almost) complex manifold described by its even cohomology ring,
/// its total Chern class and, optionally, the fundamental-class pairing.
struct ManifoldModel {
  std::string name;
  int dim_real = 0;
  Ring ring;
  TotalClass chern;
  std::optional<Pairing> pairing;

  int complex_dim() const { return dim_real / 2; }
  /// <c_top, [M]>; throws NoPairing.
  Integer euler_characteristic() const;
};

/// Builds a manifold model. Throws DimensionMismatch when dim_real is odd,
/// negative, or disagrees with the ring truncation, RingMismatch when the
/// class lives elsewhere.
ManifoldModel make_manifold(std::string name, int dim_real, Ring ring, const Element& chern,
                            std::optional<Pairing> pairing = std::nullopt);

/// X embedded in M with complex normal bundle gamma of rank k.
struct EmbeddingModel {
  ManifoldModel ambient;  // M
  ManifoldModel center;   // X
  RingMap restriction;    // i_X^*: H*(M) -> H*(X)
  int codim = 0;          // k
  TotalClass normal_chern;  // C(gamma) in H*(X)
  Element dual_class;     // omega_X in H^{2k}(M)
};

/// Checks the cheap structural invariants:
///   dim_real(M) = dim_real(X) + 2k, c_r of weight r and none above k,
///   omega_X of weight k with i^*(omega_X) = c_k,
///   i^*(C(M)) = C(X) C(gamma).
/// Throws DimensionMismatch, DegreeMismatch, RankMismatch, RingMismatch,
/// InconsistentEmbedding.
void validate_embedding(const EmbeddingModel& e);

/// Assembles and validates.
EmbeddingModel make_embedding(ManifoldModel ambient, ManifoldModel center, RingMap restriction, int codim,
                              const Element& normal_chern, const Element& dual_class);

}  // namespace blowchern
