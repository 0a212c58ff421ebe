#pragma once

#include "blowchern/chern.hpp"
#include "blowchern/model.hpp"
#include "blowchern/ring.hpp"
#include "blowchern/thom.hpp"

#include <map>
#include <memory>
#include <string_view>
#include <vector>

namespace blowchern {

/// Which sign pattern the omega^k relation uses when rewriting.
///
/// calibrated: f*(omega_X) = -sum_{r=1..k} c_{k-r} omega^r, with t = c_1(lambda_E).
///   This matches the classical divisor relation and the Euler oracle.
/// paper:      f*(omega_X) = sum_{r=1..k} (-1)^{r-1} c_{k-r} omega^r, read verbatim.
/// The two agree for point centers of even codimension.
enum class SignConvention { Calibrated, Paper };

std::string_view to_string(SignConvention c);
/// "calibrated" or "paper"; throws InvalidArgument.
SignConvention parse_convention(std::string_view text);

namespace detail {
struct BlowupData;
}

class BlowupElement;

/// H*(M~) for the blow-up of M along X, stored as
///   f*H*(M) (+) H*(X) omega (+) ... (+) H*(X) omega^{k-1}
/// with omega the dual class of the exceptional divisor E = P(gamma).
/// Immutable; cheap to copy.
class BlowupContext {
 public:
  BlowupContext() = default;

  const EmbeddingModel& embedding() const;
  SignConvention convention() const;
  int codim() const;
  int truncation() const;  // complex dimension of M~
  /// H*(E) with t = c_1 of the tautological line (calibrated) and pi^*.
  const ProjectiveBundle& exceptional() const;
  /// Disk-bundle ring of the normal line of E, Euler class t.
  const ThomRing& thom() const;
  /// Sign s_r in the omega^k relation, f*(omega_X) = sum_r s_r c_{k-r} omega^r.
  int relation_sign(int r) const;

  BlowupElement zero() const;
  BlowupElement one() const;
  /// The class omega itself.
  BlowupElement omega() const;

  /// Some y in H*(M) with i^*(y) = a; throws UnsupportedEmbedding.
  Element lift(const Element& a) const;

  friend bool operator==(const BlowupContext& a, const BlowupContext& b) { return a.data_ == b.data_; }

 private:
  friend BlowupContext build_blowup(const EmbeddingModel&, SignConvention);
  const detail::BlowupData& data() const;
  std::shared_ptr<const detail::BlowupData> data_;
};

/// Throws DimensionMismatch and the validation errors of the embedding,
/// UnsupportedEmbedding when i^* is not onto in some weight (lifts are
/// needed to rewrite omega^k), InconsistentEmbedding when some class killed
/// by i^* does not annihilate omega_X.
BlowupContext build_blowup(const EmbeddingModel& embedding, SignConvention convention = SignConvention::Calibrated);

class BlowupElement {
 public:
  BlowupElement() = default;

  const BlowupContext& context() const noexcept { return ctx_; }
  /// Component in f*H*(M).
  const Element& m_part() const noexcept { return m_; }
  /// Coefficient a_r of omega^r, r = 1..k-1 (zero outside that range).
  Element omega_part(int r) const;
  const std::vector<Element>& omega_parts() const noexcept { return omega_; }

  bool is_zero() const;
  BlowupElement component(int weight) const;
  int top_weight() const;

  BlowupElement& operator+=(const BlowupElement& o);
  BlowupElement& operator-=(const BlowupElement& o);
  BlowupElement& operator*=(const BlowupElement& o);
  BlowupElement& operator*=(const Integer& s);
  friend BlowupElement operator+(BlowupElement a, const BlowupElement& b) { return a += b; }
  friend BlowupElement operator-(BlowupElement a, const BlowupElement& b) { return a -= b; }
  friend BlowupElement operator*(BlowupElement a, const BlowupElement& b) { return a *= b; }
  friend BlowupElement operator*(BlowupElement a, const Integer& s) { return a *= s; }
  friend BlowupElement operator*(const Integer& s, BlowupElement a) { return a *= s; }
  BlowupElement operator-() const;
  BlowupElement pow(unsigned e) const;

  friend bool operator==(const BlowupElement& a, const BlowupElement& b) {
    return a.ctx_ == b.ctx_ && a.m_ == b.m_ && a.omega_ == b.omega_;
  }

 private:
  friend class BlowupContext;
  friend BlowupElement make_blowup_element(const BlowupContext&, const Element&, std::vector<Element>);
  void require_same(const BlowupElement& o) const;

  BlowupContext ctx_;
  Element m_;
  std::vector<Element> omega_;
};

/// Element with the given parts; omega_parts may be shorter than k-1.
BlowupElement make_blowup_element(const BlowupContext& ctx, const Element& m_part,
                                  std::vector<Element> omega_parts = {});

/// a * omega^j for a in H*(X), j >= 1, fully reduced.
BlowupElement omega_term(const BlowupContext& ctx, const Element& a, int j);

BlowupElement f_pullback(const Element& y, const BlowupContext& ctx);
/// i_{E!}(sum a_r t^r) = sum (-1)^r a_r omega^{r+1}.
BlowupElement gysin_exceptional(const Element& y, const BlowupContext& ctx);
/// i_E^*: f*y -> pi^* i^* y, a omega^r -> a (-t)^r.
Element restrict_to_E(const BlowupElement& x);
/// q^*(c + b x) = c + i_{E!}(b).
BlowupElement q_pullback(const ThomElement& te, const BlowupContext& ctx);

/// Total Chern class of E = P(gamma).
TotalClass exceptional_total_chern(const BlowupContext& ctx);

/// f*C(M) + C(X)[(sum_r (1+omega)^{k-r} c_r)(1 - omega) - C(gamma)].
BlowupElement blowup_total_chern(const BlowupContext& ctx);
/// f*C(M) q^*[C(x (x) pi^*gamma)/C(pi^*gamma) * (C(x (x) lambda)/C(lambda))^{-1}].
BlowupElement blowup_total_chern_via_thom(const BlowupContext& ctx);

/// <x, [M~]> = <top m_part, [M]>; throws NoPairing.
Integer evaluate_top(const BlowupElement& x);
std::map<Partition, Integer> blowup_chern_numbers(const BlowupElement& total,
                                                  const std::vector<Partition>& partitions = {});

/// Additive structure of H^{2w}(M~) read off the direct-sum decomposition.
struct BlowupGradedPiece {
  int weight = 0;
  std::vector<Monomial> m_basis;                      // from H*(M)
  std::vector<std::pair<int, Monomial>> omega_basis;  // (r, monomial of H*(X)) for a omega^r
  std::vector<Integer> torsion;

  std::size_t rank() const noexcept { return m_basis.size() + omega_basis.size(); }
};

BlowupGradedPiece blowup_graded_basis(const BlowupContext& ctx, int weight);

}  // namespace blowchern
