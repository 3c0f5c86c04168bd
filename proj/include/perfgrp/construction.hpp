#pragma once

#include "perfgrp/certificate.hpp"
#include "perfgrp/product.hpp"

#include <string>

namespace perfgrp {

struct ConstructOptions {
    std::uint64_t seed = 1;
    std::size_t budget = 61;
    std::uint64_t cap = kDefaultCap;
};

/// W = G_{k-1} = A x S with B = [A,G].
struct LevelSplit {
    PermGroup W, A, S, B;
};

/// Throws PreconditionError (via split_star_trivial) if G_{k-1} does not
/// split, which means G has level above k. Requires k >= 1.
LevelSplit split_level(const PermGroup& g, std::size_t k, std::uint64_t cap = kDefaultCap);

struct ConstructionResult {
    Certificate certificate;
    ProductContext context;
    PermGroup gamma;
};

/// A perfect subgroup of the direct product of the family projecting onto
/// every member, together with its certificate. Throws PreconditionError
/// if some member is not perfect, d-generated and of level <= k.
ConstructionResult construct(const std::vector<PermGroup>& family, std::size_t d, std::size_t k,
                             const ConstructOptions& options = {},
                             std::vector<std::string> names = {});

} // namespace perfgrp
