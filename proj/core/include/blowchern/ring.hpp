#pragma once

#include "blowchern/integer.hpp"
#include "blowchern/lattice.hpp"
#include "blowchern/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blowchern {

/// A generator of cohomological degree 2*weight.
struct GeneratorSpec {
  std::string name;
  int weight = 1;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

namespace detail {
struct RingData;
}

class Element;

/// Finitely presented, evenly graded commutative ring over Z, truncated above
/// a fixed weight.
///
/// A Ring is an immutable shared handle; two handles compare equal only when
/// they refer to the same construction. Every weight piece is built eagerly:
/// its monomials plus the Hermite-reduced lattice spanned by all products
/// (relation x monomial) of that weight. Normal forms are canonical coset
/// representatives modulo that lattice, so equality is decided exactly even
/// in the presence of torsion.
class Ring {
 public:
  Ring() = default;

  const std::vector<GeneratorSpec>& generators() const;
  std::size_t num_generators() const;
  std::span<const int> weights() const;
  std::vector<std::string> names() const;
  int truncation() const;
  const std::vector<Polynomial>& relations() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  int weight_of(const Monomial& m) const;

  Element zero() const;
  Element one() const;
  Element constant(const Integer& c) const;
  /// Throws UnknownGenerator.
  Element gen(std::string_view name) const;
  Element gen(std::size_t index) const;
  Element monomial(const Monomial& m, const Integer& c = 1) const;

  /// Normal form of a free polynomial; terms above the truncation vanish.
  Element element(const Polynomial& p) const;
  /// Parses an expression over this ring's generators (UnknownGenerator on a
  /// stray name, SyntaxError on malformed text).
  Element element(std::string_view expression) const;
  Element from_terms(const TermMap& terms) const;

  /// Monomials of exactly this weight, largest first.
  const std::vector<Monomial>& monomials(int weight) const;
  const Lattice& relation_lattice(int weight) const;

  /// Canonical representative of an arbitrary term map.
  TermMap normalize(const TermMap& terms) const;

  bool valid() const noexcept { return static_cast<bool>(data_); }
  friend bool operator==(const Ring& a, const Ring& b) { return a.data_ == b.data_; }

 private:
  friend Ring make_ring_from_polynomials(std::vector<GeneratorSpec>, std::vector<Polynomial>, int);
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  const detail::RingData& data() const;

  std::shared_ptr<const detail::RingData> data_;
};

/// Builds a presentation. Relations are polynomials over `generators` and each
/// one is read as "= 0". Throws NonHomogeneousRelation, ZeroTruncation
/// (negative truncation), InvalidArgument (duplicate names, weight < 1).
/// A truncation of 0 is allowed and yields Z (the cohomology of a point).
Ring make_ring_from_polynomials(std::vector<GeneratorSpec> generators,
                                std::vector<Polynomial> relations, int truncation_weight);

/// Same, with relations written as expressions (e.g. "x^2 + x*e").
Ring make_ring(std::vector<GeneratorSpec> generators, const std::vector<std::string>& relations,
               int truncation_weight);

/// Ring element, always stored in normal form.
class Element {
 public:
  Element() = default;

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const;
  /// Homogeneous part of the given weight.
  Element component(int weight) const;
  /// Largest weight carrying a term; -1 for zero.
  int top_weight() const;
  /// Weight of a nonzero homogeneous element; nullopt when mixed or zero.
  std::optional<int> homogeneous_weight() const;

  Element pow(unsigned exponent) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);
  Element& operator*=(const Integer& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator*(Element a, const Integer& s) { return a *= s; }
  friend Element operator*(const Integer& s, Element a) { return a *= s; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  friend class Ring;
  Element(Ring ring, TermMap normalized) : ring_(std::move(ring)), terms_(std::move(normalized)) {}
  void require_same_ring(const Element& other) const;

  Ring ring_;
  TermMap terms_;
};

Element normal_form(const Element& element);
Element normal_form(const Polynomial& p, const Ring& ring);
/// Throws RingMismatch when a and b live in different rings.
Element multiply(const Element& a, const Element& b);

/// Degree-preserving ring homomorphism given by generator images.
class RingMap {
 public:
  RingMap() = default;

  /// Validates degrees and that every source relation (and every source
  /// monomial killed by the source truncation) maps to zero.
  /// Throws DegreeMismatch, UnknownGenerator, RingMismatch, IllDefinedMap.
  static RingMap make(Ring source, Ring target, const std::map<std::string, Element>& images);
  static RingMap identity(const Ring& ring);

  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }

  Element operator()(const Element& x) const;
  Element apply(const Polynomial& p) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<Element> images_;
};

Element apply_map(const RingMap& map, const Element& x);

/// Additive structure of one weight piece.
struct GradedBasis {
  int weight = 0;
  /// Standard monomials (non-pivot columns of the relation lattice); a basis
  /// of the free part whenever every pivot is a unit.
  std::vector<Monomial> basis;
  /// Smith invariant factors > 1 of the weight piece.
  std::vector<Integer> torsion;

  std::size_t rank() const noexcept { return basis.size(); }
};

GradedBasis graded_basis(const Ring& ring, int weight);

/// Base ring with new generators adjoined in front of the old ones.
struct RingExtension {
  Ring ring;
  RingMap inclusion;    // base -> ring
  std::size_t offset;  // base generator i sits at index offset + i
};

/// Adjoins `new_generators` (placed first, so they dominate the monomial
/// order) with `new_relations` written over the combined generator list.
/// Base relations are carried over, and every base monomial above the base
/// truncation is declared zero so the base keeps its dimension.
RingExtension extend_ring(const Ring& base, std::vector<GeneratorSpec> new_generators,
                          const std::vector<Polynomial>& new_relations, int truncation_weight);

/// Lift a base-ring polynomial into an extension.
Polynomial lift_to_extension(const Polynomial& p, const RingExtension& ext);

/// `base` if unused by the ring, otherwise `base` with a numeric suffix.
std::string fresh_generator_name(const Ring& ring, const std::string& base);

}  // namespace blowchern
