#pragma once

#include "blowchern/blowup.hpp"

#include <string>
#include <vector>

namespace blowchern {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;  // "euler", "restriction", "paths", "ranks"
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Independent consistency checks on a blow-up:
///   euler       <c_top(M~)> = chi(M) + (k-1) chi(X)   (skipped without pairings)
///   restriction i_E^* C(M~) = C(E)(1+t)
///   paths       closed formula and Thom-space chain agree
///   ranks       rank H^{2j}(M~) = rank H^{2j}(M) + rank H^{2j}(E) - rank H^{2j}(X)
struct VerifyReport {
  std::string model;
  SignConvention convention = SignConvention::Calibrated;
  std::vector<CheckResult> checks;

  /// True when nothing failed (skipped checks do not count).
  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

VerifyReport verify_report(const BlowupContext& ctx, const std::string& model_name = {});

}  // namespace blowchern
