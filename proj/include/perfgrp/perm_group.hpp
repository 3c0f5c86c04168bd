#pragma once

#include "perfgrp/permutation.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace perfgrp {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// A permutation group given by generators, with a stabilizer chain built
/// eagerly by deterministic Schreier-Sims (Knuth's table variant).
///
/// The base is 0, 1, ..., degree-1 in that order. Level k holds coset
/// representatives of G^(k+1) in G^(k), where G^(k) fixes 0..k-1
/// pointwise; representative for point j maps k to j.
class PermGroup {
public:
    PermGroup() : PermGroup(1, {}) {}
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    /// Subsequence of generators() each of which enlarged the group when
    /// it was added; generates the same group.
    const std::vector<Permutation>& reduced_generators() const noexcept { return reduced_; }

    std::uint64_t order() const noexcept { return order_; }
    bool is_trivial() const noexcept { return order_ == 1; }

    /// Throws InputError on degree mismatch.
    bool contains(const Permutation& g) const;
    bool contains_all(const PermGroup& h) const;
    /// Equal as sets of permutations (same degree required).
    bool same_group(const PermGroup& h) const;

    /// Adds a generator in place; returns true if the group grew.
    bool add_generator(const Permutation& g);

    Permutation random_element(std::mt19937_64& rng) const;

    /// All elements in chain order; throws SizeError if order() > cap.
    std::vector<Permutation> elements(std::uint64_t cap = kDefaultCap) const;

    /// Basic orbit of base point k (points j with a representative).
    std::vector<Point> basic_orbit(std::size_t k) const;

    /// Factor through the first `prefix` base levels. Given the images of
    /// points 0..prefix-1 under some element (values must stay inside the
    /// prefix), returns an element of the group agreeing with them, or
    /// nullopt if none exists. Used to evaluate homomorphisms via graph
    /// groups laid out with the known coordinates first.
    std::optional<Permutation> factor_prefix(std::span<const Point> prefix_images) const;

private:
    struct Level {
        std::vector<std::int32_t> slot; // point -> index into reps, or -1
        std::vector<Permutation> reps;
        std::vector<Permutation> reps_inverse;
        std::vector<Permutation> added;
    };

    bool sift_test(std::size_t k, Permutation g) const;
    void add_at(std::size_t k, const Permutation& g);
    void extend_at(std::size_t k, const Permutation& g);
    void recompute_order();

    std::size_t degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> reduced_;
    std::vector<Level> levels_;
    std::uint64_t order_ = 1;
};

// ---- subgroup algorithms -------------------------------------------------

/// Subgroup generated by the union of generator sets (same degree).
PermGroup join(const PermGroup& a, const PermGroup& b);

bool is_normal(const PermGroup& g, const PermGroup& n);
bool is_abelian(const PermGroup& g);

/// Smallest normal subgroup of g containing seeds. Throws
/// PreconditionError if a seed is not in g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds);

PermGroup derived_subgroup(const PermGroup& g);

/// [H,K] inside G with [h,k] = h^-1 k^-1 h k. One of H, K must be normal in G.
PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Brute force over enumerated elements.
PermGroup centralizer(const PermGroup& g, const Permutation& x, std::uint64_t cap = kDefaultCap);
PermGroup center(const PermGroup& g, std::uint64_t cap = kDefaultCap);

/// Conjugacy classes, each sorted; classes ordered by smallest element.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g,
                                                        std::uint64_t cap = kDefaultCap);

/// Class of x in g with, for each member c, an element r such that x^r = c.
struct ClassWithConjugators {
    std::vector<Permutation> members;
    std::vector<Permutation> conjugators;
};
ClassWithConjugators conjugacy_class_of(const PermGroup& g, const Permutation& x);

/// Whether the listed elements generate exactly g (all must lie in g).
bool generates(const PermGroup& g, const std::vector<Permutation>& elements);

} // namespace perfgrp
