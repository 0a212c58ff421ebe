#include "blowchern/model.hpp"

#include "blowchern/error.hpp"

namespace blowchern {

Integer ManifoldModel::euler_characteristic() const {
  if (!pairing) throw Error(ErrorKind::NoPairing, "manifold " + name + " has no pairing");
  return pairing->evaluate(chern.component(complex_dim()));
}

ManifoldModel make_manifold(std::string name, int dim_real, Ring ring, const Element& chern,
                            std::optional<Pairing> pairing) {
  if (dim_real < 0 || dim_real % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "real dimension of " + name + " must be even and non-negative");
  if (ring.truncation() != dim_real / 2)
    throw Error(ErrorKind::DimensionMismatch, "ring of " + name + " is truncated at weight " +
                                                  std::to_string(ring.truncation()) + " but the manifold has complex dimension " +
                                                  std::to_string(dim_real / 2));
  if (!(chern.ring() == ring)) throw Error(ErrorKind::RingMismatch, "Chern class of " + name + " is not in its ring");
  if (pairing && !(pairing->ring() == ring))
    throw Error(ErrorKind::RingMismatch, "pairing of " + name + " is not on its ring");
  ManifoldModel m;
  m.name = std::move(name);
  m.dim_real = dim_real;
  m.ring = std::move(ring);
  m.chern = TotalClass(chern, dim_real / 2);
  m.pairing = std::move(pairing);
  return m;
}

void validate_embedding(const EmbeddingModel& e) {
  const int k = e.codim;
  if (k < 1) throw Error(ErrorKind::DimensionMismatch, "codimension must be at least 1");
  if (e.ambient.dim_real != e.center.dim_real + 2 * k)
    throw Error(ErrorKind::DimensionMismatch,
                "dim_real(M) = " + std::to_string(e.ambient.dim_real) + " but dim_real(X) + 2k = " +
                    std::to_string(e.center.dim_real + 2 * k));
  if (!(e.restriction.source() == e.ambient.ring) || !(e.restriction.target() == e.center.ring))
    throw Error(ErrorKind::RingMismatch, "restriction must map H*(M) to H*(X)");
  const Element& c = e.normal_chern.value();
  if (!(c.ring() == e.center.ring)) throw Error(ErrorKind::RingMismatch, "normal Chern class must live in H*(X)");
  if (c.top_weight() > k)
    throw Error(ErrorKind::RankMismatch, "normal bundle of rank " + std::to_string(k) + " has nonzero c_" +
                                             std::to_string(c.top_weight()));
  if (!(e.dual_class.ring() == e.ambient.ring)) throw Error(ErrorKind::RingMismatch, "dual class must live in H*(M)");
  if (!e.dual_class.is_zero() && e.dual_class.homogeneous_weight() != k)
    throw Error(ErrorKind::DegreeMismatch, "dual class must be homogeneous of weight " + std::to_string(k));
  if (!(e.restriction(e.dual_class) == c.component(k)))
    throw Error(ErrorKind::InconsistentEmbedding, "restriction of the dual class differs from c_k of the normal bundle");
  if (!(e.restriction(e.ambient.chern.value()) == e.center.chern.value() * c))
    throw Error(ErrorKind::InconsistentEmbedding, "i^*C(M) differs from C(X)C(normal bundle)");
}

EmbeddingModel make_embedding(ManifoldModel ambient, ManifoldModel center, RingMap restriction, int codim,
                              const Element& normal_chern, const Element& dual_class) {
  EmbeddingModel e;
  e.ambient = std::move(ambient);
  e.center = std::move(center);
  e.restriction = std::move(restriction);
  e.codim = codim;
  e.normal_chern = TotalClass(normal_chern, codim);
  e.dual_class = dual_class;
  validate_embedding(e);
  return e;
}

}  // namespace blowchern
