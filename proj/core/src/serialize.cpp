#include "blowchern/serialize.hpp"

#include "blowchern/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace blowchern {

using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + std::string(text) + "'");
}

namespace {

// Empty for the unit monomial, so it can be glued to omega powers.
std::string monomial_text(const Monomial& m, std::span<const std::string> names, Notation n) {
  const bool unit = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
  return unit ? std::string() : format_monomial(m, names, n);
}

std::string omega_name(Notation n) { return n == Notation::Unicode ? "ω" : "w"; }

std::string omega_power(int r, Notation n) {
  if (r == 1) return omega_name(n);
  return omega_name(n) + (n == Notation::Unicode ? superscript(r) : "^" + std::to_string(r));
}

// Signed term strings for one weight, f*-terms first.
std::vector<std::string> weight_terms(const BlowupElement& x, int w, Notation n) {
  std::vector<std::string> out;
  const Ring& mr = x.context().embedding().ambient.ring;
  const Ring& xr = x.context().embedding().center.ring;
  const std::string times = n == Notation::Unicode ? "·" : "*";
  auto emit = [&](const Integer& c, std::string mono) {
    std::string s;
    if (mono.empty())
      s = to_string(c);
    else if (c == 1)
      s = mono;
    else if (c == -1)
      s = "-" + mono;
    else
      s = to_string(c) + times + mono;
    out.push_back(s);
  };
  const auto mnames = mr.names();
  const Element m_component = x.m_part().component(w);
  for (const auto& [m, c] : m_component.terms()) emit(c, monomial_text(m, mnames, n));
  const auto xnames = xr.names();
  for (int r = 1; r < x.context().codim(); ++r) {
    const Element part = x.omega_part(r).component(w - r);
    for (const auto& [m, c] : part.terms()) {
      std::string mono = monomial_text(m, xnames, n);
      mono = mono.empty() ? omega_power(r, n) : mono + times + omega_power(r, n);
      emit(c, mono);
    }
  }
  return out;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string s;
  for (const auto& t : terms) {
    if (s.empty())
      s = t;
    else if (t.front() == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s;
}

ordered_json integer_json(const Integer& c) {
  if (const auto v = to_int64(c)) return *v;
  return to_string(c);
}

ordered_json terms_json(const Element& e) {
  ordered_json arr = ordered_json::array();
  const auto names = e.ring().names();
  // increasing weight, then the ring's order
  for (int w = 0; w <= e.top_weight(); ++w) {
    const Element part = e.component(w);
    for (const auto& [m, c] : part.terms()) {
      ordered_json mono = ordered_json::object();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) mono[names[i]] = m[i];
      arr.push_back(ordered_json{{"coefficient", integer_json(c)}, {"monomial", mono}});
    }
  }
  return arr;
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  return ordered_json{{"passed", r.passed()}, {"checks", checks}};
}

}  // namespace

std::string format_blowup_element(const BlowupElement& x, Notation n) {
  std::string s;
  const int top = x.top_weight();
  for (int w = 0; w <= top; ++w) {
    const std::vector<std::string> terms = weight_terms(x, w, n);
    if (terms.empty()) continue;
    std::string group = join_terms(terms);
    bool negative = false;
    if (terms.size() > 1) {
      group = "(" + group + ")";
    } else if (group.front() == '-') {
      negative = true;
      group = group.substr(1);
    }
    if (s.empty())
      s = negative ? "-" + group : group;
    else
      s += (negative ? " - " : " + ") + group;
  }
  return s.empty() ? "0" : s;
}

std::string serialize_result(const ChernResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["format_version"] = kJsonFormatVersion;
    j["model"] = result.model;
    j["convention"] = std::string(to_string(result.convention));
    if (result.total) {
      const BlowupElement& x = *result.total;
      ordered_json chern = ordered_json::array();
      for (int w = 0; w <= x.top_weight(); ++w) {
        const BlowupElement part = x.component(w);
        if (part.is_zero()) continue;
        ordered_json omega = ordered_json::object();
        for (int r = 1; r < x.context().codim(); ++r)
          if (!part.omega_part(r).is_zero()) omega[std::to_string(r)] = terms_json(part.omega_part(r));
        chern.push_back(ordered_json{{"weight", w}, {"m_part", terms_json(part.m_part())}, {"omega_parts", omega}});
      }
      j["chern"] = chern;
    }
    if (result.chern_numbers) {
      ordered_json nums = ordered_json::object();
      for (const auto& [p, v] : *result.chern_numbers) nums[partition_label(p)] = integer_json(v);
      j["chern_numbers"] = nums;
    }
    if (result.report) j["report"] = report_json(*result.report);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "model: " << result.model << "\n";
  out << "convention: " << to_string(result.convention) << "\n";
  if (result.total) out << "C = " << format_blowup_element(*result.total) << "\n";
  if (result.chern_numbers) {
    out << "chern numbers:\n";
    for (const auto& [p, v] : *result.chern_numbers) out << "  " << partition_label(p) << " = " << to_string(v) << "\n";
  }
  if (result.report) {
    out << "checks:\n";
    for (const auto& c : result.report->checks)
      out << "  " << c.name << ": " << to_string(c.status) << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    out << "result: " << (result.report->passed() ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

std::string serialize_ring_structure(const BlowupContext& ctx, const std::string& model, OutputFormat format) {
  const auto& emb = ctx.embedding();
  const auto mnames = emb.ambient.ring.names();
  const auto xnames = emb.center.ring.names();
  auto omega_label = [&](int r, const Monomial& m, Notation n) {
    const std::string mono = monomial_text(m, xnames, n);
    const std::string w = omega_power(r, n);
    return mono.empty() ? w : mono + (n == Notation::Unicode ? "·" : "*") + w;
  };
  auto m_label = [&](const Monomial& m, Notation n) {
    const std::string s = monomial_text(m, mnames, n);
    return s.empty() ? std::string("1") : s;
  };

  if (format == OutputFormat::Json) {
    ordered_json j;
    j["format_version"] = kJsonFormatVersion;
    j["model"] = model;
    j["convention"] = std::string(to_string(ctx.convention()));
    ordered_json weights = ordered_json::array();
    for (int w = 0; w <= ctx.truncation(); ++w) {
      const BlowupGradedPiece p = blowup_graded_basis(ctx, w);
      ordered_json basis = ordered_json::array();
      for (const auto& m : p.m_basis) basis.push_back(m_label(m, Notation::Ascii));
      for (const auto& [r, m] : p.omega_basis) basis.push_back(omega_label(r, m, Notation::Ascii));
      ordered_json torsion = ordered_json::array();
      for (const auto& t : p.torsion) torsion.push_back(integer_json(t));
      weights.push_back(ordered_json{{"weight", w}, {"rank", p.rank()}, {"basis", basis}, {"torsion", torsion}});
    }
    j["graded"] = weights;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "model: " << model << "\n";
  out << "H^2j of the blow-up (j = weight):\n";
  for (int w = 0; w <= ctx.truncation(); ++w) {
    const BlowupGradedPiece p = blowup_graded_basis(ctx, w);
    out << "  " << w << ": rank " << p.rank() << " {";
    bool first = true;
    for (const auto& m : p.m_basis) {
      out << (first ? "" : ", ") << m_label(m, Notation::Unicode);
      first = false;
    }
    for (const auto& [r, m] : p.omega_basis) {
      out << (first ? "" : ", ") << omega_label(r, m, Notation::Unicode);
      first = false;
    }
    out << "}";
    if (!p.torsion.empty()) {
      out << " torsion";
      for (const auto& t : p.torsion) out << " Z/" << to_string(t);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace blowchern
