#pragma once

#include "perfgrp/perm_group.hpp"

#include <optional>
#include <string>

namespace perfgrp {

/// The series G = G_0 >= G_1 >= ... with G_{n+1} = (G_n)_*.
struct StructureReport {
    std::vector<PermGroup> series;
    /// Least k with G_k = 1; nullopt if a nontrivial fixpoint or the depth
    /// bound was hit first.
    std::optional<std::size_t> level;
    bool perfect = false;
    /// nullopt means no generating tuple of size <= generator_bound found.
    std::optional<std::size_t> min_generators;
    std::size_t generator_bound = 0;
    /// Elementary divisors of G/[G,G]; empty iff perfect.
    std::vector<std::int64_t> abelianization_invariants;
};

/// All normal subgroups, ordered by (order, class signature). Built as the
/// join-closure of normal closures of conjugacy classes.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::uint64_t cap = kDefaultCap);

/// G_*: the intersection of [G,G] with every maximal normal subgroup whose
/// quotient is nonabelian simple.
PermGroup star_subgroup(const PermGroup& g, std::uint64_t cap = kDefaultCap);

StructureReport star_series(const PermGroup& g, std::size_t max_depth = 16,
                            std::size_t generator_bound = 4, std::uint64_t seed = 1,
                            std::uint64_t cap = kDefaultCap);

/// Least t <= bound such that some t-tuple generates g (0 for the trivial
/// group). Seeded random sampling, with exhaustive search for small groups.
std::optional<std::size_t> min_generators(const PermGroup& g, std::size_t bound,
                                          std::uint64_t seed = 1);

struct YMembership {
    bool member = false;
    std::string reason;
    explicit operator bool() const noexcept { return member; }
};

/// Perfect, d-generated, and G_k = 1.
YMembership is_in_Y(const PermGroup& g, std::size_t d, std::size_t k, std::uint64_t seed = 1,
                    std::uint64_t cap = kDefaultCap);

struct StarSplit {
    PermGroup abelian;    // center of W
    PermGroup semisimple; // [W,W]
};

/// W = A x S for W with trivial star subgroup. Throws PreconditionError
/// if W is not star-trivial or the decomposition fails.
StarSplit split_star_trivial(const PermGroup& w, std::uint64_t cap = kDefaultCap);

/// Minimal normal subgroups of a semisimple group, i.e. its simple direct
/// factors. Throws PreconditionError if they do not multiply up to s.
std::vector<PermGroup> simple_direct_factors(const PermGroup& s, std::uint64_t cap = kDefaultCap);

bool is_simple_nonabelian(const PermGroup& g, std::uint64_t cap = kDefaultCap);

} // namespace perfgrp
