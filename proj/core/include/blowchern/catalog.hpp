#pragma once

#include "blowchern/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace blowchern {

/// Names shown by `catalog-list`; pn_point takes its dimension as
/// pn_point(n) or pn_point:n.
std::vector<std::string> catalog_names();

/// Model file text of a catalog entry; throws UnknownModel.
std::string catalog_source(std::string_view name);

/// Parsed and validated catalog entry; throws UnknownModel.
EmbeddingModel catalog(std::string_view name);

bool is_catalog_name(std::string_view name);

}  // namespace blowchern
