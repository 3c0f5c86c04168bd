#pragma once

#include "perfgrp/homomorphism.hpp"

namespace perfgrp {

/// A permutation representation of G/N together with the quotient map.
struct Quotient {
    PermGroup group;
    Homomorphism map;
};

/// Faithful representation of G/N. Tries the action on the orbits of N
/// (which are blocks for G) first and falls back to the regular action on
/// the cosets of N. Throws PreconditionError if N is not normal in G.
Quotient quotient(const PermGroup& g, const PermGroup& n, std::uint64_t cap = kDefaultCap);

} // namespace perfgrp
