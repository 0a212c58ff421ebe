#include "blowchern/verify.hpp"

#include "blowchern/error.hpp"
#include "blowchern/format.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blowchern {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

CheckResult euler_check(const BlowupContext& ctx, const BlowupElement& total) {
  CheckResult r{"euler", CheckStatus::Skipped, {}};
  const auto& emb = ctx.embedding();
  if (!emb.ambient.pairing || !emb.center.pairing) {
    r.detail = "no pairing on M or X";
    return r;
  }
  const Integer lhs = evaluate_top(total.component(ctx.truncation()));
  const Integer rhs = emb.ambient.euler_characteristic() + (ctx.codim() - 1) * emb.center.euler_characteristic();
  r.status = status_of(lhs == rhs);
  r.detail = "<c_top> = " + to_string(lhs) + ", chi(M) + (k-1) chi(X) = " + to_string(rhs);
  return r;
}

CheckResult restriction_check(const BlowupContext& ctx, const BlowupElement& total) {
  const ProjectiveBundle& e = ctx.exceptional();
  const Element lhs = restrict_to_E(total);
  const Element rhs = exceptional_total_chern(ctx).value() * (e.ring.one() + e.t);
  CheckResult r{"restriction", status_of(lhs == rhs), {}};
  r.detail = "i_E^*C = " + format_element(lhs) + (lhs == rhs ? " = " : " != ") + "C(E)(1+t) = " + format_element(rhs);
  return r;
}

CheckResult paths_check(const BlowupElement& closed, const BlowupElement& thom) {
  CheckResult r{"paths", status_of(closed == thom), {}};
  if (closed == thom) {
    r.detail = "closed formula and Thom chain agree";
  } else {
    for (int w = 0; w <= std::max(closed.top_weight(), thom.top_weight()); ++w)
      if (!(closed.component(w) == thom.component(w))) {
        r.detail = "first difference in weight " + std::to_string(w);
        break;
      }
  }
  return r;
}

CheckResult rank_check(const BlowupContext& ctx) {
  const auto& emb = ctx.embedding();
  const Ring& er = ctx.exceptional().ring;
  std::ostringstream structural, expected;
  bool ok = true;
  for (int j = 0; j <= ctx.truncation(); ++j) {
    const long lhs = static_cast<long>(blowup_graded_basis(ctx, j).rank());
    auto rank_in = [j](const Ring& ring) -> long {
      return j <= ring.truncation() ? static_cast<long>(graded_basis(ring, j).rank()) : 0L;
    };
    const long rhs = rank_in(emb.ambient.ring) + rank_in(er) - rank_in(emb.center.ring);
    ok = ok && lhs == rhs;
    structural << (j ? "," : "") << lhs;
    expected << (j ? "," : "") << rhs;
  }
  return CheckResult{"ranks", status_of(ok), "ranks (" + structural.str() + ") vs (" + expected.str() + ")"};
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return CheckResult{name, CheckStatus::Fail, e.what()};
  }
}

}  // namespace

VerifyReport verify_report(const BlowupContext& ctx, const std::string& model_name) {
  VerifyReport report;
  report.model = model_name;
  report.convention = ctx.convention();
  const BlowupElement closed = blowup_total_chern(ctx);
  report.checks.push_back(guarded("euler", [&] { return euler_check(ctx, closed); }));
  report.checks.push_back(guarded("restriction", [&] { return restriction_check(ctx, closed); }));
  report.checks.push_back(guarded("paths", [&] { return paths_check(closed, blowup_total_chern_via_thom(ctx)); }));
  report.checks.push_back(guarded("ranks", [&] { return rank_check(ctx); }));
  return report;
}

}  // namespace blowchern
