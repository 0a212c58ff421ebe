#pragma once

#include "blowchern/blowup.hpp"
#include "blowchern/format.hpp"
#include "blowchern/verify.hpp"

#include <map>
#include <optional>
#include <string>

namespace blowchern {

enum class OutputFormat { Text, Json };

/// "text" or "json"; throws InvalidArgument.
OutputFormat parse_output_format(std::string_view text);

inline constexpr int kJsonFormatVersion = 1;

/// Groups terms by weight, f*-terms before omega-terms, e.g.
/// "1 + (3·H + ω) + 4·H²". Multi-term weights are parenthesized.
std::string format_blowup_element(const BlowupElement& x, Notation n = Notation::Unicode);

/// What a command computed; absent parts are simply not printed.
struct ChernResult {
  std::string model;
  SignConvention convention = SignConvention::Calibrated;
  std::optional<BlowupElement> total;
  std::optional<std::map<Partition, Integer>> chern_numbers;
  std::optional<VerifyReport> report;
};

/// Deterministic output. JSON schema:
///   {format_version, model, convention,
///    chern: [{weight, m_part: [term], omega_parts: {"r": [term]}}],
///    chern_numbers: {"c1^2": n, ...}, report: {passed, checks: [{name, status, detail}]}}
/// with term = {coefficient, monomial: {generator: exponent}}; coefficients
/// outside the 64-bit range are written as decimal strings.
std::string serialize_result(const ChernResult& result, OutputFormat format);

/// Graded bases and torsion of H*(M~), weight by weight.
std::string serialize_ring_structure(const BlowupContext& ctx, const std::string& model, OutputFormat format);

}  // namespace blowchern
