#pragma once

#include "perfgrp/perm_group.hpp"
#include "perfgrp/smith.hpp"

#include <unordered_map>

namespace perfgrp {

/// Coordinates for a finite abelian permutation group A = Z/d_1 + ... + Z/d_r
/// with d_1 | d_2 | ... | d_r, all d_i > 1. The relation lattice of the
/// given generators is found by enumerating A; its Smith form yields the
/// basis. encode/decode are the only bridge between multiplicative
/// permutations and additive coordinate vectors.
class AbelianDecomposition {
public:
    /// Throws PreconditionError if `a` is not abelian, SizeError above cap.
    explicit AbelianDecomposition(const PermGroup& a, std::uint64_t cap = kDefaultCap);

    const PermGroup& group() const noexcept { return group_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<Permutation>& basis() const noexcept { return basis_; }
    const std::vector<std::int64_t>& orders() const noexcept { return orders_; }

    /// Throws PreconditionError if x is not in the group.
    std::vector<std::int64_t> encode(const Permutation& x) const;
    /// Coordinates are reduced modulo the basis orders first.
    Permutation decode(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> reduce(std::span<const std::int64_t> coords) const;

private:
    PermGroup group_;
    std::vector<Permutation> basis_;
    std::vector<std::int64_t> orders_;
    std::unordered_map<Permutation, std::vector<std::int64_t>, PermutationHash> table_;
};

/// Elementary divisors of an abelian permutation group (empty if trivial).
std::vector<std::int64_t> abelian_invariants(const PermGroup& a, std::uint64_t cap = kDefaultCap);

} // namespace perfgrp
