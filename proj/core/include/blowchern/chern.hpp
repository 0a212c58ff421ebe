#pragma once

#include "blowchern/error.hpp"
#include "blowchern/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blowchern {

/// Total Chern class 1 + c_1 + c_2 + ... of a (virtual) complex bundle.
class TotalClass {
 public:
  TotalClass() = default;
  /// Throws NonUnitLeadingTerm unless the weight-0 part is exactly 1.
  explicit TotalClass(Element value, std::optional<int> rank = std::nullopt);

  const Element& value() const noexcept { return value_; }
  const Ring& ring() const noexcept { return value_.ring(); }
  std::optional<int> rank() const noexcept { return rank_; }

  /// c_r, the weight-r component.
  Element component(int r) const { return value_.component(r); }

  friend bool operator==(const TotalClass& a, const TotalClass& b) { return a.value_ == b.value_; }

 private:
  Element value_;
  std::optional<int> rank_;
};

/// Whitney product C(a (+) b) = C(a) C(b).
TotalClass whitney_sum(const TotalClass& a, const TotalClass& b);

/// Formal inverse, the finite geometric series 1 - N + N^2 - ... with N = C - 1.
/// Throws NonUnitLeadingTerm.
TotalClass total_inverse(const Element& c);
TotalClass total_inverse(const TotalClass& c);

/// C(L (x) xi) = sum_{r=0..m} (1+t)^{m-r} c_r(xi) for a line bundle with
/// c_1(L) = t and xi of rank m. Throws RankMismatch when xi has components above
/// weight m, DegreeMismatch when t is not of weight 1.
TotalClass tensor_line_bundle(const Element& t, const TotalClass& xi, int rank);

/// Class of the conjugate bundle: c_r -> (-1)^r c_r.
TotalClass dual_total_class(const TotalClass& c);

/// H*(P(xi)) = H*(X)[t] / (t^k + c_1 t^{k-1} + ... + c_k).
struct ProjectiveBundle {
  Ring base;
  Ring ring;
  RingMap pullback;  // pi^*: base -> ring
  Element t;
  int rank = 0;
  std::vector<Element> relation_classes;  // c_1..c_k used in the relation, in `base`

  /// Writes y = sum_{r<k} pi^*(a_r) t^r and returns a_0..a_{k-1} in `base`.
  std::vector<Element> coefficients(const Element& y) const;
};

/// Throws DegreeMismatch unless c[r-1] is homogeneous of weight r (or zero),
/// InvalidArgument when c is empty. The new generator is placed first in the
/// monomial order so the relation is monic in its leading term.
ProjectiveBundle projective_bundle_ring(const Ring& base, std::span<const Element> c,
                                        const std::string& generator_name = "t");

/// C(E) = pi^*C(X) * C(conj(lambda) (x) pi^*gamma) / C(conj(lambda) (x) lambda)
/// for E = P(gamma) with t = c_1(lambda), lambda the tautological line.
TotalClass exceptional_total_chern(const ProjectiveBundle& bundle, const TotalClass& base_chern,
                                   const TotalClass& normal_chern);

/// Evaluation against a fundamental class.
///
/// The top weight piece must have rank one. The anchor monomial gets the
/// declared value and any other top class is compared to it through normal
/// forms.
class Pairing {
 public:
  Pairing() = default;
  /// Throws NoPairing when the top piece is not of rank 1, DegreeMismatch
  /// when the anchor is not of top weight, InvalidArgument when the anchor
  /// is zero in the ring.
  static Pairing make(const Ring& ring, const Monomial& anchor, const Integer& value);

  const Ring& ring() const noexcept { return ring_; }
  const Monomial& anchor() const noexcept { return anchor_; }
  const Integer& value() const noexcept { return value_; }
  int top_weight() const { return ring_.truncation(); }

  /// <x, [M]> using only the top-weight component of x.
  Integer evaluate(const Element& x) const;

 private:
  Ring ring_;
  Monomial anchor_;
  Integer value_;
  Monomial basis_;
  Integer anchor_coefficient_;
};

/// A Chern monomial c_{i1} ... c_{im}, parts sorted in decreasing order.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
/// "c1^2*c2" style label.
std::string partition_label(const Partition& p);

/// Generic Chern numbers: `total.component(r)` must return something that
/// multiplies, and `evaluate` pairs a top-weight product with the
/// fundamental class. Throws BadPartition.
template <class Total, class Evaluate>
std::map<Partition, Integer> chern_numbers_with(const Total& total, int top,
                                                const std::vector<Partition>& partitions,
                                                Evaluate&& evaluate) {
  std::map<Partition, Integer> out;
  const std::vector<Partition> wanted = partitions.empty() ? partitions_of(top) : partitions;
  for (const Partition& p : wanted) {
    int sum = 0;
    for (int part : p) {
      if (part < 1) throw Error(ErrorKind::BadPartition, "partition parts must be positive");
      sum += part;
    }
    if (sum != top || p.empty())
      throw Error(ErrorKind::BadPartition, "partition " + partition_label(p) +
                                               " does not have total weight " + std::to_string(top));
    auto product = total.component(p.front());
    for (std::size_t i = 1; i < p.size(); ++i) product = product * total.component(p[i]);
    Partition key = p;
    std::sort(key.begin(), key.end(), std::greater<int>());
    out[key] = evaluate(product);
  }
  return out;
}

/// Chern numbers of a class in a ring with a pairing; an empty partition
/// list means all partitions of the top weight.
std::map<Partition, Integer> chern_numbers(const TotalClass& total, const Pairing& pairing,
                                           const std::vector<Partition>& partitions = {});

}  // namespace blowchern
