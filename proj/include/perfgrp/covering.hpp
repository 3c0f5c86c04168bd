#pragma once

#include "perfgrp/product.hpp"

#include <random>

namespace perfgrp {

/// Sorted, duplicate-free list of group elements.
using ElementSet = std::vector<Permutation>;

ElementSet make_element_set(std::vector<Permutation> elems);

/// {xy : x in X, y in Y}. Throws SizeError past `cap` elements.
ElementSet product_set(const ElementSet& x, const ElementSet& y, std::uint64_t cap = kDefaultCap);

/// Union of the conjugacy classes of the given elements.
ElementSet normal_set(const PermGroup& s, const std::vector<Permutation>& elems);

struct CoveringCertificate {
    std::uint64_t group_order = 0;
    std::uint64_t set_size = 0;
    std::size_t e = 0;
};

/// Least e with X^e = S. Throws PreconditionError if X is trivial or not
/// a normal subset of S; SearchError if X^e never fills S.
CoveringCertificate covering_number(const PermGroup& s, const ElementSet& x,
                                    std::uint64_t cap = kDefaultCap);

/// Index of a generator with smallest centralizer (lowest index on ties).
/// Throws InternalError if |C| > |S|^((t-1)/t).
std::size_t pick_small_centralizer_gen(const PermGroup& s, const std::vector<Permutation>& gens);

/// r[t][j] with target = prod_t prod_j gens[j]^r[t][j], t < e. Layered
/// product sets with back-pointers. Throws PreconditionError if no
/// such factorization exists.
std::vector<std::vector<Permutation>> decompose_conjugate_product(
    const PermGroup& s, const Permutation& target, const std::vector<Permutation>& gens,
    std::size_t e);

/// Covering number of prod_j class(gens[j]) in s.
std::size_t class_product_covering_number(const PermGroup& s, const std::vector<Permutation>& gens);

struct SemisimpleCover {
    std::vector<PermGroup> factors;
    /// tuples[i][j]: component of generator j in factor i.
    std::vector<std::vector<Permutation>> tuples;
    ProductContext context;
    PermGroup group; // on the disjoint union of factor domains
    bool full_product = false;

    Permutation generator(std::size_t j) const;
    std::size_t size() const { return tuples.empty() ? 0 : tuples.front().size(); }
};

/// Diagonal generators of a perfect subdirect product of simple factors.
/// Throws PreconditionError if a factor is not nonabelian simple or the
/// budget is below the generator count of some factor.
SemisimpleCover semisimple_cover(const std::vector<PermGroup>& factors, std::size_t budget = 61,
                                 std::uint64_t seed = 1);

} // namespace perfgrp
