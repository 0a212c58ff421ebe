#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using blowchern::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

const std::string kMalformed = std::string(BLOWCHERN_TEST_DATA) + "/malformed/";
const std::string kModels = BLOWCHERN_EXAMPLE_MODELS;

}  // namespace

TEST(Cli, ChernOfTheSixSphere) {
  const Outcome o = invoke({"chern", "s6_point", "--format", "text"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(contains(o.out, "C = 1 + 2·ω + 4·u")) << o.out;
  EXPECT_TRUE(contains(o.out, "c3 = 4")) << o.out;
  EXPECT_TRUE(o.err.empty());
}

TEST(Cli, ChernJsonCarriesTheWeightOneCoefficient) {
  const Outcome o = invoke({"chern", "s6_point", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("chern").at(1).at("omega_parts").at("1").at(0).at("coefficient"), 2);
  EXPECT_EQ(j.at("chern_numbers").at("c3"), 4);
}

TEST(Cli, EveryPathChoiceGivesTheSameClass) {
  const std::string both = invoke({"chern", "p4_line"}).out;
  EXPECT_EQ(invoke({"chern", "p4_line", "--via", "closed"}).out, both);
  EXPECT_EQ(invoke({"chern", "p4_line", "--via", "thom"}).out, both);
  EXPECT_EQ(invoke({"chern", "p4_line", "--via", "sideways"}).code, 1);
}

TEST(Cli, VerifyExitCodes) {
  const Outcome ok = invoke({"verify", "p3_point"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_TRUE(contains(ok.out, "result: pass"));
  const Outcome paper = invoke({"verify", "p3_point", "--convention", "paper"});
  EXPECT_EQ(paper.code, 2);
  EXPECT_TRUE(contains(paper.out, "euler: fail (<c_top> = 2")) << paper.out;
  EXPECT_EQ(invoke({"verify", "p2_point", "--convention", "paper"}).code, 0);
}

TEST(Cli, CatalogList) {
  const Outcome o = invoke({"catalog-list"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "s6_point\np2_point\np3_point\np4_point\np4_line\npn_point(n)\n");
  const auto j = nlohmann::json::parse(invoke({"catalog-list", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 6U);
}

TEST(Cli, NumbersAndRing) {
  const Outcome n = invoke({"numbers", "p3_point"});
  EXPECT_EQ(n.code, 0);
  for (const char* piece : {"c1^3 = 56", "c1*c2 = 24", "c3 = 6"}) EXPECT_TRUE(contains(n.out, piece)) << n.out;
  const Outcome r = invoke({"ring", "p4_line"});
  EXPECT_EQ(r.code, 0);
  for (const char* piece : {"0: rank 1", "1: rank 2", "2: rank 3", "3: rank 2", "4: rank 1"})
    EXPECT_TRUE(contains(r.out, piece)) << r.out;
}

TEST(Cli, ProjectiveSpaceFamilySpellings) {
  const Outcome a = invoke({"numbers", "pn_point:5"});
  const Outcome b = invoke({"numbers", "pn_point(5)"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(contains(a.out, "c5 = 10")) << a.out;
  EXPECT_TRUE(contains(a.out, "c1^5 = 6752")) << a.out;  // 6^5 - 4^5
  EXPECT_EQ(a.out.substr(a.out.find('\n')), b.out.substr(b.out.find('\n')));
}

TEST(Cli, ModelFiles) {
  const Outcome o = invoke({"chern", kModels + "/p2_point.model"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(contains(o.out, "model: p2_point"));
  EXPECT_TRUE(contains(o.out, "C = 1 + (3·H + ω) + 4·H²")) << o.out;
  const Outcome line = invoke({"numbers", kModels + "/p3_line.model"});
  EXPECT_TRUE(contains(line.out, "c1^3 = 54")) << line.out;
}

TEST(Cli, MalformedInputExitsWithOne) {
  for (const auto& entry : std::filesystem::directory_iterator(kMalformed)) {
    const Outcome o = invoke({"chern", entry.path().string()});
    EXPECT_EQ(o.code, 1) << entry.path();
    EXPECT_TRUE(o.out.empty()) << entry.path();
    EXPECT_TRUE(contains(o.err, "error: " + entry.path().string() + ":")) << o.err;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"chern"}).code, 1);
  EXPECT_EQ(invoke({"chern", "no_such_model"}).code, 1);
  EXPECT_EQ(invoke({"chern", "p2_point", "--convention", "other"}).code, 1);
  EXPECT_EQ(invoke({"chern", "p2_point", "--format", "xml"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate", "p2_point"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, NumbersNeedAPairing) {
  const std::filesystem::path file = std::filesystem::temp_directory_path() / "blowchern_cli_no_pairing.model";
  {
    std::ofstream out(file);
    out << "manifold M { dim_real = 4; generator h : 1; relation h^2 = 0; chern = 1 + h }\n"
           "manifold X { dim_real = 0; chern = 1 }\n"
           "embedding { codim = 2; restrict h -> 0; normal_chern = 1; dual = 0 }\n";
  }
  const Outcome o = invoke({"numbers", file.string()});
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(contains(o.err, "NoPairing")) << o.err;
  EXPECT_EQ(invoke({"chern", file.string()}).code, 0);
  std::filesystem::remove(file);
}

TEST(Cli, JsonOutputIsByteDeterministic) {
  for (const char* cmd : {"chern", "numbers", "verify", "ring"}) {
    const std::vector<std::string> args{cmd, "p4_line", "--format", "json"};
    const Outcome a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_TRUE(nlohmann::json::accept(a.out)) << cmd;
  }
}
