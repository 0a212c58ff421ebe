#include <blowchern/catalog.hpp>
#include <blowchern/serialize.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

using namespace blowchern;
using nlohmann::json;

namespace {

ChernResult result_for(const std::string& name, bool numbers = false, bool verify = false) {
  const BlowupContext ctx = build_blowup(catalog(name));
  ChernResult r;
  r.model = name;
  r.convention = ctx.convention();
  r.total = blowup_total_chern(ctx);
  if (numbers) r.chern_numbers = blowup_chern_numbers(*r.total);
  if (verify) r.report = verify_report(ctx, name);
  return r;
}

}  // namespace

TEST(FormatBlowupElement, UnitClass) {
  const BlowupContext ctx = build_blowup(catalog("p3_point"));
  EXPECT_EQ(format_blowup_element(ctx.one()), "1");
  EXPECT_EQ(format_blowup_element(ctx.zero()), "0");
}

TEST(FormatBlowupElement, PlaneBlownUpAtAPoint) {
  const BlowupContext ctx = build_blowup(catalog("p2_point"));
  const BlowupElement c = blowup_total_chern(ctx);
  EXPECT_EQ(format_blowup_element(c), "1 + (3·H + ω) + 4·H²");
  EXPECT_EQ(format_blowup_element(c, Notation::Ascii), "1 + (3*H + w) + 4*H^2");
}

TEST(FormatBlowupElement, SixSphere) {
  const BlowupContext ctx = build_blowup(catalog("s6_point"));
  EXPECT_EQ(format_blowup_element(blowup_total_chern(ctx)), "1 + 2·ω + 4·u");
  const BlowupContext paper = build_blowup(catalog("s6_point"), SignConvention::Paper);
  EXPECT_EQ(format_blowup_element(blowup_total_chern(paper)), "1 + 2·ω");
}

TEST(FormatBlowupElement, CoefficientsOnOmegaPowers) {
  const BlowupContext ctx = build_blowup(catalog("p4_line"));
  EXPECT_EQ(format_blowup_element(blowup_total_chern(ctx)),
            "1 + (5·H + 2·ω) + (10·H² + 7·h·ω) + (12·H³ + 3·h·ω²) + 9·H⁴");
}

TEST(SerializeResult, TextLabelsEverything) {
  const std::string text = serialize_result(result_for("p2_point", true, true), OutputFormat::Text);
  for (const char* piece : {"model: p2_point", "convention: calibrated", "C = 1 + (3·H + ω) + 4·H²", "c1^2 = 8",
                            "c2 = 4", "euler: pass", "result: pass"})
    EXPECT_NE(text.find(piece), std::string::npos) << piece << "\n" << text;
}

TEST(SerializeResult, JsonSchema) {
  const json j = json::parse(serialize_result(result_for("p2_point", true, true), OutputFormat::Json));
  EXPECT_EQ(j.at("format_version"), kJsonFormatVersion);
  EXPECT_EQ(j.at("model"), "p2_point");
  EXPECT_EQ(j.at("convention"), "calibrated");
  ASSERT_EQ(j.at("chern").size(), 3U);
  const json& w1 = j.at("chern").at(1);
  EXPECT_EQ(w1.at("weight"), 1);
  EXPECT_EQ(w1.at("m_part").at(0).at("coefficient"), 3);
  EXPECT_EQ(w1.at("m_part").at(0).at("monomial").at("H"), 1);
  EXPECT_EQ(w1.at("omega_parts").at("1").at(0).at("coefficient"), 1);
  EXPECT_EQ(j.at("chern_numbers").at("c1^2"), 8);
  EXPECT_EQ(j.at("chern_numbers").at("c2"), 4);
  EXPECT_EQ(j.at("report").at("passed"), true);
  EXPECT_EQ(j.at("report").at("checks").size(), 4U);
}

TEST(SerializeResult, JsonReparsesToTheSameStructure) {
  for (const char* name : {"s6_point", "p4_line", "pn_point(6)"}) {
    const std::string out = serialize_result(result_for(name, true, true), OutputFormat::Json);
    const auto j = nlohmann::ordered_json::parse(out);
    EXPECT_EQ(nlohmann::ordered_json::parse(j.dump()), j);
    EXPECT_EQ(j.dump(2), out.substr(0, out.find_last_not_of('\n') + 1)) << name;
  }
}

TEST(SerializeResult, Deterministic) {
  for (OutputFormat f : {OutputFormat::Text, OutputFormat::Json})
    EXPECT_EQ(serialize_result(result_for("p4_line", true, true), f),
              serialize_result(result_for("p4_line", true, true), f));
}

TEST(SerializeResult, AbsentPartsAreOmitted) {
  ChernResult r;
  r.model = "empty";
  const json j = json::parse(serialize_result(r, OutputFormat::Json));
  EXPECT_FALSE(j.contains("chern"));
  EXPECT_FALSE(j.contains("chern_numbers"));
  EXPECT_FALSE(j.contains("report"));
}

TEST(SerializeRingStructure, LineInP4) {
  const BlowupContext ctx = build_blowup(catalog("p4_line"));
  const json j = json::parse(serialize_ring_structure(ctx, "p4_line", OutputFormat::Json));
  EXPECT_EQ(j.at("model"), "p4_line");
  const std::string text = serialize_ring_structure(ctx, "p4_line", OutputFormat::Text);
  EXPECT_FALSE(text.empty());
}

TEST(ParseOutputFormat, Names) {
  EXPECT_EQ(parse_output_format("text"), OutputFormat::Text);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_output_format("yaml"), Error);
}
