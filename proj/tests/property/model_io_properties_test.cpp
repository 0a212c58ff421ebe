#include <random_models.hpp>

#include <blowchern/error.hpp>
#include <blowchern/model_io.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace blowchern;
using namespace blowchern::oracle;

namespace {

constexpr int kCases = 250;

}  // namespace

TEST(ModelIoProperties, SerializationIsIdempotent) {
  std::mt19937 rng(31);
  for (int n = 0; n < kCases; ++n) {
    const std::string text = random_admissible_model(rng);
    const EmbeddingModel once = parse_model(text);
    const std::string canonical = serialize_model(once);
    const EmbeddingModel twice = parse_model(canonical);
    ASSERT_TRUE(equivalent(once, twice)) << text;
    ASSERT_EQ(serialize_model(twice), canonical);
  }
}

// Damaged input either still parses or fails with a positioned diagnostic.
TEST(ModelIoProperties, DamagedInputIsDiagnosedWithAPosition) {
  std::mt19937 rng(32);
  const std::string alphabet = "{}();=+-*^:#>\n 0123456789Hhxk_";
  int diagnosed = 0;
  for (int n = 0; n < kCases; ++n) {
    std::string text = random_admissible_model(rng);
    const int edits = uniform(rng, 1, 3);
    for (int e = 0; e < edits; ++e) {
      const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(text.size()) - 1));
      switch (uniform(rng, 0, 2)) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))]); break;
        default: text[pos] = alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))];
      }
    }
    const int lines = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    try {
      parse_model(text);
    } catch (const ParseError& e) {
      ASSERT_TRUE(e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::SemanticError) << e.what();
      ASSERT_GE(e.line(), 1) << e.what();
      ASSERT_LE(e.line(), lines) << e.what();
      ASSERT_GE(e.column(), 1) << e.what();
      ++diagnosed;
    } catch (const std::exception& e) {
      FAIL() << "unpositioned failure: " << e.what() << "\n" << text;
    }
  }
  EXPECT_GT(diagnosed, kCases / 2);
}
