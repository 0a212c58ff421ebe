#include "blowchern/blowup.hpp"

#include "blowchern/error.hpp"

#include <algorithm>

namespace blowchern {

namespace detail {

// Preimages under i^* in one weight: rows [i^*(m_j) | e_j] together with
// [relations of X | 0]; reducing [b | 0] leaves [0 | -lambda] exactly when
// b = i^*(sum lambda_j m_j) in H*(X).
struct LiftPiece {
  std::vector<Monomial> m_monomials;
  std::map<Monomial, std::size_t> x_index;
  std::size_t x_dim = 0;
  Lattice lattice;
};

struct BlowupData {
  EmbeddingModel embedding;
  SignConvention convention = SignConvention::Calibrated;
  int k = 0;
  int n = 0;
  std::vector<int> signs;        // signs[r], r = 1..k
  std::vector<Element> c;        // c[r] in H*(X), r = 0..k
  ProjectiveBundle exceptional;  // H*(E)
  ThomRing thom;
  std::vector<LiftPiece> lifts;  // per weight of X
};

}  // namespace detail

std::string_view to_string(SignConvention c) {
  return c == SignConvention::Calibrated ? "calibrated" : "paper";
}

SignConvention parse_convention(std::string_view text) {
  if (text == "calibrated") return SignConvention::Calibrated;
  if (text == "paper") return SignConvention::Paper;
  throw Error(ErrorKind::InvalidArgument, "unknown convention '" + std::string(text) + "'");
}

namespace {

IntVector coordinates(const Element& a, const detail::LiftPiece& piece, std::size_t extra) {
  IntVector v(piece.x_dim + extra, Integer(0));
  for (const auto& [m, c] : a.terms()) v[piece.x_index.at(m)] = c;
  return v;
}

// Reduces sum_j p[j] omega^j (p[0] unused) into an element, highest power first.
BlowupElement reduce_omega_polynomial(const BlowupContext& ctx, Element m_part, std::vector<Element> p) {
  const int k = ctx.codim();
  const Ring& xr = ctx.embedding().center.ring;
  const Element& wx = ctx.embedding().dual_class;
  const auto& c = ctx.embedding().normal_chern;
  const int sk = ctx.relation_sign(k);
  for (int j = static_cast<int>(p.size()) - 1; j >= k; --j) {
    const Element a = p[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    p[static_cast<std::size_t>(j)] = xr.zero();
    if (j == k) {
      // s_k omega^k = f*(omega_X) - sum_{r<k} s_r c_{k-r} omega^r, and s_k^2 = 1
      m_part += ctx.lift(a) * wx * Integer(sk);
    } else {
      // a omega^j = omega^{j-k} (a omega^k), and f*(y) omega = i^*(y) omega
      p[static_cast<std::size_t>(j - k)] += a * c.component(k) * Integer(sk);
    }
    for (int r = 1; r < k; ++r)
      p[static_cast<std::size_t>(r + j - k)] -= a * c.component(k - r) * Integer(sk * ctx.relation_sign(r));
  }
  std::vector<Element> parts;
  for (int r = 1; r < k; ++r)
    parts.push_back(static_cast<std::size_t>(r) < p.size() ? p[static_cast<std::size_t>(r)] : xr.zero());
  return make_blowup_element(ctx, m_part, std::move(parts));
}

}  // namespace

// ---------------------------------------------------------------------------
// BlowupContext

const detail::BlowupData& BlowupContext::data() const {
  if (!data_) throw Error(ErrorKind::InvalidArgument, "use of an empty blow-up context");
  return *data_;
}

const EmbeddingModel& BlowupContext::embedding() const { return data().embedding; }
SignConvention BlowupContext::convention() const { return data().convention; }
int BlowupContext::codim() const { return data().k; }
int BlowupContext::truncation() const { return data().n; }
const ProjectiveBundle& BlowupContext::exceptional() const { return data().exceptional; }
const ThomRing& BlowupContext::thom() const { return data().thom; }

int BlowupContext::relation_sign(int r) const {
  if (r < 1 || r > data().k) throw Error(ErrorKind::InvalidArgument, "relation sign index out of range");
  return data().signs[static_cast<std::size_t>(r)];
}

BlowupElement BlowupContext::zero() const {
  return make_blowup_element(*this, embedding().ambient.ring.zero());
}

BlowupElement BlowupContext::one() const {
  return make_blowup_element(*this, embedding().ambient.ring.one());
}

BlowupElement BlowupContext::omega() const { return omega_term(*this, embedding().center.ring.one(), 1); }

Element BlowupContext::lift(const Element& a) const {
  const auto& d = data();
  const Ring& mr = d.embedding.ambient.ring;
  if (!(a.ring() == d.embedding.center.ring)) throw Error(ErrorKind::RingMismatch, "lift expects a class of H*(X)");
  Element out = mr.zero();
  for (int w = 0; w <= a.top_weight(); ++w) {
    const Element part = a.component(w);
    if (part.is_zero()) continue;
    const auto& piece = d.lifts[static_cast<std::size_t>(w)];
    const IntVector v = piece.lattice.reduce(coordinates(part, piece, piece.m_monomials.size()));
    for (std::size_t i = 0; i < piece.x_dim; ++i)
      if (v[i] != 0) throw Error(ErrorKind::UnsupportedEmbedding, "class of H*(X) is not a restriction from H*(M)");
    TermMap terms;
    for (std::size_t j = 0; j < piece.m_monomials.size(); ++j)
      if (v[piece.x_dim + j] != 0) terms.emplace(piece.m_monomials[j], -v[piece.x_dim + j]);
    out += mr.from_terms(terms);
  }
  return out;
}

BlowupContext build_blowup(const EmbeddingModel& embedding, SignConvention convention) {
  validate_embedding(embedding);
  auto d = std::make_shared<detail::BlowupData>();
  d->embedding = embedding;
  d->convention = convention;
  d->k = embedding.codim;
  d->n = embedding.ambient.complex_dim();
  const int k = d->k;
  const Ring& xr = embedding.center.ring;
  const Ring& mr = embedding.ambient.ring;

  d->signs.assign(static_cast<std::size_t>(k + 1), 0);
  for (int r = 1; r <= k; ++r)
    d->signs[static_cast<std::size_t>(r)] = convention == SignConvention::Calibrated ? -1 : (r % 2 == 1 ? 1 : -1);
  for (int r = 0; r <= k; ++r) d->c.push_back(embedding.normal_chern.component(r));

  // H*(E): under calibrated t = c_1(lambda) and sum c_i (-t)^{k-i} = 0, i.e. the
  // standard relation for the conjugate classes; under paper the classes verbatim.
  std::vector<Element> rel;
  for (int r = 1; r <= k; ++r) {
    const Element& cr = d->c[static_cast<std::size_t>(r)];
    rel.push_back(convention == SignConvention::Calibrated && r % 2 == 1 ? -cr : cr);
  }
  d->exceptional = projective_bundle_ring(xr, rel, "t");
  d->thom = thom_ring(d->exceptional.ring, d->exceptional.t, "x");

  for (int w = 0; w <= xr.truncation(); ++w) {
    detail::LiftPiece piece;
    piece.m_monomials = w <= mr.truncation() ? mr.monomials(w) : std::vector<Monomial>{};
    const auto& xm = xr.monomials(w);
    piece.x_dim = xm.size();
    for (std::size_t i = 0; i < xm.size(); ++i) piece.x_index.emplace(xm[i], i);
    const std::size_t dim = piece.x_dim + piece.m_monomials.size();
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < piece.m_monomials.size(); ++j) {
      IntVector v = coordinates(embedding.restriction(mr.monomial(piece.m_monomials[j])), piece,
                                piece.m_monomials.size());
      v[piece.x_dim + j] = 1;
      gens.push_back(std::move(v));
    }
    for (const IntVector& row : xr.relation_lattice(w).rows()) {
      IntVector v(dim, Integer(0));
      std::copy(row.begin(), row.end(), v.begin());
      gens.push_back(std::move(v));
    }
    piece.lattice = Lattice(dim, gens);

    for (std::size_t i = 0; i < piece.x_dim; ++i) {
      IntVector e(dim, Integer(0));
      e[i] = 1;
      const IntVector r = piece.lattice.reduce(e);
      for (std::size_t q = 0; q < piece.x_dim; ++q)
        if (r[q] != 0)
          throw Error(ErrorKind::UnsupportedEmbedding,
                      "restriction H*(M) -> H*(X) is not onto in weight " + std::to_string(w));
    }
    // Every class killed by i^* must annihilate omega_X (omega_X y = i_!(i^* y)).
    for (std::size_t row = 0; row < piece.lattice.rank(); ++row) {
      if (piece.lattice.pivots()[row] < piece.x_dim) continue;
      TermMap terms;
      const IntVector& v = piece.lattice.rows()[row];
      for (std::size_t j = 0; j < piece.m_monomials.size(); ++j)
        if (v[piece.x_dim + j] != 0) terms.emplace(piece.m_monomials[j], v[piece.x_dim + j]);
      if (!(mr.from_terms(terms) * embedding.dual_class).is_zero())
        throw Error(ErrorKind::InconsistentEmbedding,
                    "a class restricting to zero on X does not annihilate the dual class");
    }
    d->lifts.push_back(std::move(piece));
  }

  BlowupContext ctx;
  ctx.data_ = std::move(d);
  return ctx;
}

// ---------------------------------------------------------------------------
// BlowupElement

BlowupElement make_blowup_element(const BlowupContext& ctx, const Element& m_part, std::vector<Element> omega_parts) {
  const auto& emb = ctx.embedding();
  if (!(m_part.ring() == emb.ambient.ring)) throw Error(ErrorKind::RingMismatch, "m part must lie in H*(M)");
  const std::size_t width = static_cast<std::size_t>(ctx.codim() - 1);
  if (omega_parts.size() > width) throw Error(ErrorKind::InvalidArgument, "too many omega parts");
  for (const auto& a : omega_parts)
    if (!(a.ring() == emb.center.ring)) throw Error(ErrorKind::RingMismatch, "omega parts must lie in H*(X)");
  omega_parts.resize(width, emb.center.ring.zero());
  // a omega^r vanishes above the top weight
  const int n = ctx.truncation();
  for (std::size_t i = 0; i < width; ++i) {
    const int r = static_cast<int>(i) + 1;
    if (omega_parts[i].top_weight() + r > n) {
      Element kept = emb.center.ring.zero();
      for (int w = 0; w + r <= n; ++w) kept += omega_parts[i].component(w);
      omega_parts[i] = kept;
    }
  }
  BlowupElement out;
  out.ctx_ = ctx;
  out.m_ = m_part;
  out.omega_ = std::move(omega_parts);
  return out;
}

Element BlowupElement::omega_part(int r) const {
  if (r < 1 || static_cast<std::size_t>(r) > omega_.size()) return ctx_.embedding().center.ring.zero();
  return omega_[static_cast<std::size_t>(r - 1)];
}

bool BlowupElement::is_zero() const {
  return m_.is_zero() && std::all_of(omega_.begin(), omega_.end(), [](const Element& a) { return a.is_zero(); });
}

BlowupElement BlowupElement::component(int weight) const {
  std::vector<Element> parts;
  for (std::size_t i = 0; i < omega_.size(); ++i) parts.push_back(omega_[i].component(weight - static_cast<int>(i) - 1));
  return make_blowup_element(ctx_, m_.component(weight), std::move(parts));
}

int BlowupElement::top_weight() const {
  int top = m_.top_weight();
  for (std::size_t i = 0; i < omega_.size(); ++i)
    if (!omega_[i].is_zero()) top = std::max(top, omega_[i].top_weight() + static_cast<int>(i) + 1);
  return top;
}

void BlowupElement::require_same(const BlowupElement& o) const {
  if (!(ctx_ == o.ctx_)) throw Error(ErrorKind::RingMismatch, "blow-up elements from different contexts");
}

BlowupElement& BlowupElement::operator+=(const BlowupElement& o) {
  require_same(o);
  m_ += o.m_;
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] += o.omega_[i];
  return *this;
}

BlowupElement& BlowupElement::operator-=(const BlowupElement& o) {
  require_same(o);
  m_ -= o.m_;
  for (std::size_t i = 0; i < omega_.size(); ++i) omega_[i] -= o.omega_[i];
  return *this;
}

BlowupElement& BlowupElement::operator*=(const Integer& s) {
  m_ *= s;
  for (auto& a : omega_) a *= s;
  return *this;
}

BlowupElement BlowupElement::operator-() const {
  BlowupElement out = *this;
  out *= Integer(-1);
  return out;
}

BlowupElement& BlowupElement::operator*=(const BlowupElement& o) {
  require_same(o);
  const auto& emb = ctx_.embedding();
  const std::size_t width = omega_.size();
  std::vector<Element> p(2 * width + 1, emb.center.ring.zero());
  const Element im = emb.restriction(m_);
  const Element om = emb.restriction(o.m_);
  for (std::size_t i = 0; i < width; ++i) {
    p[i + 1] += im * o.omega_[i] + om * omega_[i];
    if (omega_[i].is_zero()) continue;
    for (std::size_t j = 0; j < width; ++j) p[i + j + 2] += omega_[i] * o.omega_[j];
  }
  *this = reduce_omega_polynomial(ctx_, m_ * o.m_, std::move(p));
  return *this;
}

BlowupElement BlowupElement::pow(unsigned e) const {
  BlowupElement result = ctx_.one();
  BlowupElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Maps

BlowupElement omega_term(const BlowupContext& ctx, const Element& a, int j) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "omega power must be positive");
  const Ring& xr = ctx.embedding().center.ring;
  if (!(a.ring() == xr)) throw Error(ErrorKind::RingMismatch, "omega coefficient must lie in H*(X)");
  std::vector<Element> p(static_cast<std::size_t>(j + 1), xr.zero());
  p[static_cast<std::size_t>(j)] = a;
  return reduce_omega_polynomial(ctx, ctx.embedding().ambient.ring.zero(), std::move(p));
}

BlowupElement f_pullback(const Element& y, const BlowupContext& ctx) { return make_blowup_element(ctx, y); }

BlowupElement gysin_exceptional(const Element& y, const BlowupContext& ctx) {
  const std::vector<Element> a = ctx.exceptional().coefficients(y);
  std::vector<Element> p(a.size() + 1, ctx.embedding().center.ring.zero());
  for (std::size_t r = 0; r < a.size(); ++r) p[r + 1] = r % 2 == 0 ? a[r] : -a[r];
  return reduce_omega_polynomial(ctx, ctx.embedding().ambient.ring.zero(), std::move(p));
}

Element restrict_to_E(const BlowupElement& x) {
  const BlowupContext& ctx = x.context();
  const ProjectiveBundle& e = ctx.exceptional();
  Element out = e.pullback(ctx.embedding().restriction(x.m_part()));
  const Element minus_t = -e.t;
  Element power = e.ring.one();
  for (const Element& a : x.omega_parts()) {
    power *= minus_t;
    out += e.pullback(a) * power;
  }
  return out;
}

BlowupElement q_pullback(const ThomElement& te, const BlowupContext& ctx) {
  if (!(te.x_part.ring() == ctx.exceptional().ring))
    throw Error(ErrorKind::RingMismatch, "Thom class is not over H*(E) of this blow-up");
  return ctx.one() * te.constant + gysin_exceptional(te.x_part, ctx);
}

TotalClass exceptional_total_chern(const BlowupContext& ctx) {
  const auto& emb = ctx.embedding();
  return exceptional_total_chern(ctx.exceptional(), emb.center.chern, emb.normal_chern);
}

BlowupElement blowup_total_chern(const BlowupContext& ctx) {
  const auto& emb = ctx.embedding();
  const BlowupElement base = f_pullback(emb.ambient.chern.value(), ctx);
  const int k = ctx.codim();
  if (k == 1) return base;  // blowing up a divisor changes nothing
  const Ring& xr = emb.center.ring;

  // P(omega) = sum_r c_r (1+omega)^{k-r}; B(omega) = P(omega)(1-omega) - C(gamma)
  std::vector<Element> pcoef(static_cast<std::size_t>(k + 1), xr.zero());
  for (int r = 0; r <= k; ++r) {
    const Element cr = emb.normal_chern.component(r);
    Integer binom = 1;
    for (int s = 0; s <= k - r; ++s) {
      pcoef[static_cast<std::size_t>(s)] += cr * binom;
      binom = binom * (k - r - s) / (s + 1);
    }
  }
  std::vector<Element> b(static_cast<std::size_t>(k + 2), xr.zero());
  for (int s = 0; s <= k; ++s) {
    b[static_cast<std::size_t>(s)] += pcoef[static_cast<std::size_t>(s)];
    b[static_cast<std::size_t>(s + 1)] -= pcoef[static_cast<std::size_t>(s)];
  }
  b[0] -= emb.normal_chern.value();
  if (!b[0].is_zero()) throw Error(ErrorKind::InvalidArgument, "internal: correction term is not divisible by omega");
  for (auto& coef : b) coef *= emb.center.chern.value();
  return base + reduce_omega_polynomial(ctx, emb.ambient.ring.zero(), std::move(b));
}

BlowupElement blowup_total_chern_via_thom(const BlowupContext& ctx) {
  const auto& emb = ctx.embedding();
  const BlowupElement base = f_pullback(emb.ambient.chern.value(), ctx);
  const int k = ctx.codim();
  if (k == 1) return base;
  const ProjectiveBundle& e = ctx.exceptional();
  const ThomRing& thom = ctx.thom();
  const TotalClass gamma(e.pullback(emb.normal_chern.value()), k);
  const TotalClass lambda(e.ring.one() + e.t, 1);
  const TotalClass numerator = relative_class_chern(gamma, k, thom);
  const TotalClass denominator = relative_class_chern(lambda, 1, thom);
  const Element quotient = numerator.value() * total_inverse(denominator).value();
  return base * q_pullback(to_thom_element(thom, quotient), ctx);
}

Integer evaluate_top(const BlowupElement& x) {
  const auto& ambient = x.context().embedding().ambient;
  if (!ambient.pairing) throw Error(ErrorKind::NoPairing, "ambient manifold " + ambient.name + " has no pairing");
  // omega parts cannot reach the top weight: a_r omega^r has weight <= dim X + r < dim M
  return ambient.pairing->evaluate(x.m_part());
}

std::map<Partition, Integer> blowup_chern_numbers(const BlowupElement& total, const std::vector<Partition>& partitions) {
  const auto& ambient = total.context().embedding().ambient;
  if (!ambient.pairing) throw Error(ErrorKind::NoPairing, "ambient manifold " + ambient.name + " has no pairing");
  return chern_numbers_with(total, total.context().truncation(), partitions,
                            [](const BlowupElement& e) { return evaluate_top(e); });
}

BlowupGradedPiece blowup_graded_basis(const BlowupContext& ctx, int weight) {
  const auto& emb = ctx.embedding();
  BlowupGradedPiece out;
  out.weight = weight;
  if (weight < 0 || weight > ctx.truncation()) return out;
  const GradedBasis m = graded_basis(emb.ambient.ring, weight);
  out.m_basis = m.basis;
  out.torsion = m.torsion;
  for (int r = 1; r < ctx.codim(); ++r) {
    const int w = weight - r;
    if (w < 0 || w > emb.center.ring.truncation()) continue;
    const GradedBasis x = graded_basis(emb.center.ring, w);
    for (const auto& mono : x.basis) out.omega_basis.emplace_back(r, mono);
    out.torsion.insert(out.torsion.end(), x.torsion.begin(), x.torsion.end());
  }
  return out;
}

}  // namespace blowchern
