#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrcover/arrangement.hpp"

namespace arrcover::cli {

struct CatalogEntry {
    std::string key;
    std::string notes;
    Arrangement arrangement;
    /// When set, X_m of this (affine) arrangement is the Milnor fiber of its cone.
    std::optional<unsigned long> milnor_fiber_m;
    std::string milnor_fiber_label;
};

/// Built-in arrangements: selberg, maclane, maclane-decone, hessian,
/// hessian-decone, ceva3.
const std::vector<CatalogEntry>& catalog();

/// nullptr when the key is unknown.
const CatalogEntry* find_catalog_entry(std::string_view key);

} // namespace arrcover::cli
