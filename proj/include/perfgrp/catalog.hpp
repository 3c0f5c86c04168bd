#pragma once

#include "perfgrp/perm_group.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace perfgrp {

struct CatalogEntry {
    std::string name;
    std::size_t degree = 1;
    std::vector<Permutation> generators;
    std::string provenance;
    std::uint64_t documented_order = 1;
    bool perfect = false;

    PermGroup group() const { return PermGroup(degree, generators); }
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_catalog(const std::string& name);
/// Like find_catalog but throws InputError for unknown names.
PermGroup catalog_group(const std::string& name);

/// Action of a 2x2 matrix over F_p (row vectors, v -> vM) on the p+1
/// points of the projective line; point x < p is [x:1], point p is [1:0].
Permutation projective_line_action(int p, const std::array<int, 4>& matrix);

} // namespace perfgrp
