#pragma once

#include "blowchern/model.hpp"

#include <string>
#include <string_view>

namespace blowchern {

/// Reads a model description:
///
///   manifold M { dim_real = 4; generator H : 1; relation H^3 = 0;
///                chern = 1 + 3*H + 3*H^2; pairing H^2 = 1 }
///   manifold X { dim_real = 0; chern = 1 }
///   embedding  { codim = 2; restrict H -> 0; normal_chern = 1; dual = H^2 }
///
/// Semicolons are optional, `#` starts a comment. M is the ambient manifold
/// and X the center. A zero-dimensional block without a pairing gets <1> = 1.
/// Throws ParseError with kind SyntaxError or SemanticError; every
/// diagnostic carries a line and column.
EmbeddingModel parse_model(std::string_view text);

/// Canonical re-parseable text of a model.
std::string serialize_model(const EmbeddingModel& model);

/// Same presentation, classes and maps (compared through canonical text).
bool equivalent(const EmbeddingModel& a, const EmbeddingModel& b);

}  // namespace blowchern
