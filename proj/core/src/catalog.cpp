#include "blowchern/catalog.hpp"

#include "blowchern/error.hpp"
#include "blowchern/model_io.hpp"

#include <charconv>
#include <optional>

namespace blowchern {

namespace {

constexpr int kMaxProjectiveDim = 16;

std::string binomial_chern(const std::string& h, int power, int truncation) {
  // (1+h)^power expanded up to the truncation
  std::string out = "1";
  Integer b = 1;
  for (int i = 1; i <= std::min(power, truncation); ++i) {
    b = b * (power - i + 1) / i;
    out += " + " + to_string(b) + "*" + h + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

std::string projective_manifold(const std::string& block, const std::string& h, int n) {
  return "manifold " + block + " {\n  dim_real = " + std::to_string(2 * n) + "\n  generator " + h +
         " : 1\n  relation " + h + "^" + std::to_string(n + 1) + " = 0\n  chern = " + binomial_chern(h, n + 1, n) +
         "\n  pairing " + h + (n > 1 ? "^" + std::to_string(n) : "") + " = 1\n}\n";
}

const std::string kPoint = "manifold X {\n  dim_real = 0\n  chern = 1\n}\n";

std::string projective_point(int n) {
  return "# a point in P^" + std::to_string(n) + "\n" + projective_manifold("M", "H", n) + "\n" + kPoint +
         "\nembedding {\n  codim = " + std::to_string(n) + "\n  restrict H -> 0\n  normal_chern = 1\n  dual = H" +
         (n > 1 ? "^" + std::to_string(n) : "") + "\n}\n";
}

const char* const kS6Point = R"(# a point in the six-sphere
manifold M {
  dim_real = 6
  generator u : 3
  relation u^2 = 0
  chern = 1 + 2*u
  pairing u = 1
}

manifold X {
  dim_real = 0
  chern = 1
}

embedding {
  codim = 3
  restrict u -> 0
  normal_chern = 1
  dual = u
}
)";

const char* const kP4Line = R"(# a linear P^1 in P^4
manifold M {
  dim_real = 8
  generator H : 1
  relation H^5 = 0
  chern = 1 + 5*H + 10*H^2 + 10*H^3 + 5*H^4
  pairing H^4 = 1
}

manifold X {
  dim_real = 2
  generator h : 1
  relation h^2 = 0
  chern = 1 + 2*h
  pairing h = 1
}

embedding {
  codim = 3
  restrict H -> h
  normal_chern = 1 + 3*h
  dual = H^3
}
)";

std::optional<int> pn_dimension(std::string_view name) {
  std::string_view rest;
  if (name.starts_with("pn_point(") && name.ends_with(")"))
    rest = name.substr(9, name.size() - 10);
  else if (name.starts_with("pn_point:"))
    rest = name.substr(9);
  else
    return std::nullopt;
  int n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
  return n;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"s6_point", "p2_point", "p3_point", "p4_point", "p4_line", "pn_point(n)"};
}

bool is_catalog_name(std::string_view name) {
  if (name == "s6_point" || name == "p2_point" || name == "p3_point" || name == "p4_point" || name == "p4_line")
    return true;
  const auto n = pn_dimension(name);
  return n && *n >= 1 && *n <= kMaxProjectiveDim;
}

std::string catalog_source(std::string_view name) {
  if (name == "s6_point") return kS6Point;
  if (name == "p4_line") return kP4Line;
  if (name == "p2_point") return projective_point(2);
  if (name == "p3_point") return projective_point(3);
  if (name == "p4_point") return projective_point(4);
  if (const auto n = pn_dimension(name)) {
    if (*n < 1 || *n > kMaxProjectiveDim)
      throw Error(ErrorKind::UnknownModel,
                  "pn_point needs 1 <= n <= " + std::to_string(kMaxProjectiveDim) + ", got " + std::to_string(*n));
    return projective_point(*n);
  }
  throw Error(ErrorKind::UnknownModel, "no catalog model named '" + std::string(name) + "'");
}

EmbeddingModel catalog(std::string_view name) { return parse_model(catalog_source(name)); }

}  // namespace blowchern
