#include "blowchern/chern.hpp"

#include <algorithm>
#include <functional>

namespace blowchern {

TotalClass::TotalClass(Element value, std::optional<int> rank)
    : value_(std::move(value)), rank_(rank) {
  const Element lead = value_.component(0);
  if (!(lead == value_.ring().one()))
    throw Error(ErrorKind::NonUnitLeadingTerm, "total class must start with 1");
}

TotalClass whitney_sum(const TotalClass& a, const TotalClass& b) {
  std::optional<int> rank;
  if (a.rank() && b.rank()) rank = *a.rank() + *b.rank();
  return TotalClass(a.value() * b.value(), rank);
}

TotalClass total_inverse(const Element& c) {
  const Ring& ring = c.ring();
  if (!(c.component(0) == ring.one()))
    throw Error(ErrorKind::NonUnitLeadingTerm, "cannot invert a class whose constant term is not 1");
  const Element n = c - ring.one();
  Element result = ring.one();
  Element power = ring.one();
  for (int i = 1; i <= ring.truncation(); ++i) {
    power *= n;
    if (power.is_zero()) break;
    if (i % 2 == 1)
      result -= power;
    else
      result += power;
  }
  return TotalClass(result);
}

TotalClass total_inverse(const TotalClass& c) {
  TotalClass inv = total_inverse(c.value());
  return TotalClass(inv.value(), c.rank() ? std::optional<int>(-*c.rank()) : std::nullopt);
}

TotalClass tensor_line_bundle(const Element& t, const TotalClass& xi, int rank) {
  if (!(t.ring() == xi.ring())) throw Error(ErrorKind::RingMismatch, "line class and bundle differ in ring");
  if (!t.is_zero() && t.homogeneous_weight() != 1)
    throw Error(ErrorKind::DegreeMismatch, "line bundle class must have weight 1");
  if (rank < 0) throw Error(ErrorKind::RankMismatch, "negative rank");
  if (xi.value().top_weight() > rank)
    throw Error(ErrorKind::RankMismatch, "bundle has Chern classes above its rank " + std::to_string(rank));
  const Ring& ring = t.ring();
  const Element one_plus_t = ring.one() + t;
  Element sum = ring.zero();
  Element power = ring.one();  // (1+t)^{m-r}, built from r = m down to 0
  for (int r = rank; r >= 0; --r) {
    sum += power * xi.component(r);
    power *= one_plus_t;
  }
  return TotalClass(sum, rank);
}

TotalClass dual_total_class(const TotalClass& c) {
  Element out = c.ring().zero();
  for (int r = 0; r <= c.value().top_weight(); ++r) {
    const Element part = c.component(r);
    out += r % 2 == 0 ? part : -part;
  }
  return TotalClass(out, c.rank());
}

ProjectiveBundle projective_bundle_ring(const Ring& base, std::span<const Element> c,
                                        const std::string& generator_name) {
  const int k = static_cast<int>(c.size());
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "projective bundle needs rank >= 1");
  for (int r = 1; r <= k; ++r) {
    const Element& cr = c[static_cast<std::size_t>(r - 1)];
    if (!(cr.ring() == base)) throw Error(ErrorKind::RingMismatch, "Chern class is not in the base ring");
    if (!cr.is_zero() && cr.homogeneous_weight() != r)
      throw Error(ErrorKind::DegreeMismatch, "c_" + std::to_string(r) + " must have weight " + std::to_string(r));
  }

  const std::string name = fresh_generator_name(base, generator_name);
  const std::size_t n = base.num_generators() + 1;
  std::vector<std::size_t> slots(base.num_generators());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i + 1;

  // t^k + c_1 t^{k-1} + ... + c_k
  Polynomial relation(n);
  Monomial tk(n, 0);
  tk[0] = k;
  relation.add_term(tk, 1);
  for (int r = 1; r <= k; ++r) {
    const Element& cr = c[static_cast<std::size_t>(r - 1)];
    for (const auto& [m, coef] : cr.terms()) {
      Monomial lifted(n, 0);
      lifted[0] = k - r;
      for (std::size_t i = 0; i < m.size(); ++i) lifted[i + 1] = m[i];
      relation.add_term(lifted, coef);
    }
  }

  RingExtension ext = extend_ring(base, {GeneratorSpec{name, 1}}, {relation}, base.truncation() + k - 1);
  ProjectiveBundle out;
  out.base = base;
  out.ring = ext.ring;
  out.pullback = ext.inclusion;
  out.t = ext.ring.gen(std::size_t{0});
  out.rank = k;
  out.relation_classes.assign(c.begin(), c.end());
  return out;
}

std::vector<Element> ProjectiveBundle::coefficients(const Element& y) const {
  if (!(y.ring() == ring)) throw Error(ErrorKind::RingMismatch, "element is not in H*(E)");
  std::vector<TermMap> parts(static_cast<std::size_t>(rank));
  for (const auto& [m, c] : y.terms()) {
    if (m[0] >= rank)
      throw Error(ErrorKind::InvalidArgument, "internal: normal form still contains t^k");
    parts[static_cast<std::size_t>(m[0])].emplace(Monomial(m.begin() + 1, m.end()), c);
  }
  std::vector<Element> out;
  for (const auto& p : parts) out.push_back(base.from_terms(p));
  return out;
}

TotalClass exceptional_total_chern(const ProjectiveBundle& bundle, const TotalClass& base_chern,
                                   const TotalClass& normal_chern) {
  const Element& t = bundle.t;
  const TotalClass pulled_normal(bundle.pullback(normal_chern.value()), normal_chern.rank());
  const TotalClass hom_part = tensor_line_bundle(-t, pulled_normal, bundle.rank);
  const TotalClass self_part = tensor_line_bundle(-t, TotalClass(bundle.ring.one() + t, 1), 1);
  return TotalClass(bundle.pullback(base_chern.value()) * hom_part.value() *
                    total_inverse(self_part).value());
}

// ---------------------------------------------------------------------------

Pairing Pairing::make(const Ring& ring, const Monomial& anchor, const Integer& value) {
  const int top = ring.truncation();
  if (anchor.size() != ring.num_generators())
    throw Error(ErrorKind::InvalidArgument, "pairing monomial over the wrong generators");
  if (ring.weight_of(anchor) != top)
    throw Error(ErrorKind::DegreeMismatch, "pairing monomial must have the top weight " + std::to_string(top));
  const GradedBasis basis = graded_basis(ring, top);
  if (basis.rank() != 1)
    throw Error(ErrorKind::NoPairing,
                "top weight piece has rank " + std::to_string(basis.rank()) + ", expected 1");
  Pairing p;
  p.ring_ = ring;
  p.anchor_ = anchor;
  p.value_ = value;
  p.basis_ = basis.basis.front();
  p.anchor_coefficient_ = ring.monomial(anchor).coefficient(p.basis_);
  if (p.anchor_coefficient_ == 0)
    throw Error(ErrorKind::InvalidArgument, "pairing monomial is zero in the ring");
  return p;
}

Integer Pairing::evaluate(const Element& x) const {
  if (!ring_.valid()) throw Error(ErrorKind::NoPairing, "no pairing data");
  if (!(x.ring() == ring_)) throw Error(ErrorKind::RingMismatch, "element is not in the paired ring");
  const Integer n = x.component(top_weight()).coefficient(basis_) * value_;
  if (n % anchor_coefficient_ != 0)
    throw Error(ErrorKind::InvalidArgument, "top class is not an integral multiple of the anchor");
  return n / anchor_coefficient_;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_label(const Partition& p) {
  Partition sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(sorted[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::map<Partition, Integer> chern_numbers(const TotalClass& total, const Pairing& pairing,
                                           const std::vector<Partition>& partitions) {
  if (!pairing.ring().valid()) throw Error(ErrorKind::NoPairing, "no pairing data");
  if (!(pairing.ring() == total.ring()))
    throw Error(ErrorKind::RingMismatch, "pairing belongs to another ring");
  return chern_numbers_with(total, pairing.top_weight(), partitions,
                            [&](const Element& e) { return pairing.evaluate(e); });
}

}  // namespace blowchern
