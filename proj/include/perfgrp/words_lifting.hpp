#pragma once

#include "perfgrp/perm_group.hpp"
#include "perfgrp/word.hpp"

namespace perfgrp {

inline constexpr std::size_t kDefaultDepthCap = 32;
inline constexpr std::size_t kMaxDepthCap = 256;

/// A word w in [F,F] with w(gens) == target. Bidirectional breadth-first
/// search whose steps are generator commutators [x_a^e, x_b^f] and their
/// conjugates. The cap on word length doubles from depth_cap up to 256.
/// Throws PreconditionError if g is not perfect, gens do not generate g or
/// target is outside g; SearchError if no word fits within the caps.
Word commutator_word_for(const PermGroup& g, const std::vector<Permutation>& gens,
                         const Permutation& target, std::size_t depth_cap = kDefaultDepthCap);

/// b_i in a_i N with <b_1..b_k> = G, k = reps.size(). Candidates from N^k
/// in a seeded shuffled order: exhaustive when |N|^k <= 10^6, otherwise
/// 10^5 random trials. Throws PreconditionError if N is not normal, the
/// cosets do not generate G/N, or G needs more than k generators.
std::vector<Permutation> gaschutz_lift(const PermGroup& g, const PermGroup& n,
                                       const std::vector<Permutation>& reps,
                                       std::uint64_t seed = 1);

} // namespace perfgrp
