#pragma once

#include "perfgrp/abelian.hpp"

namespace perfgrp {

/// An abelian normal subgroup A of G viewed as a right ZG-module: g acts by
/// conjugation m -> m^g, and m(g-1) corresponds to the commutator [m,g].
/// Coordinates come from AbelianDecomposition; each acting element has an
/// integer matrix T with encode(b_i^g) as row i, so y -> y*T.
class GModule {
public:
    /// Throws PreconditionError if `carrier` is not abelian or not normal
    /// in `ambient`, or an acting element is outside `ambient`.
    GModule(const PermGroup& ambient, const PermGroup& carrier, std::vector<Permutation> acting,
            std::uint64_t cap = kDefaultCap);

    const PermGroup& ambient() const noexcept { return ambient_; }
    const PermGroup& carrier() const noexcept { return coords_.group(); }
    const AbelianDecomposition& coordinates() const noexcept { return coords_; }
    const std::vector<Permutation>& acting() const noexcept { return acting_; }
    /// Action matrix of acting()[l].
    const IntMatrix& action(std::size_t l) const { return actions_.at(l); }
    std::size_t rank() const noexcept { return coords_.rank(); }
    const std::vector<std::int64_t>& orders() const noexcept { return coords_.orders(); }

    IntMatrix action_matrix(const Permutation& g) const;

    std::vector<std::int64_t> encode(const Permutation& x) const { return coords_.encode(x); }
    Permutation decode(std::span<const std::int64_t> y) const { return coords_.decode(y); }

private:
    PermGroup ambient_;
    AbelianDecomposition coords_;
    std::vector<Permutation> acting_;
    std::vector<IntMatrix> actions_;
};

/// A subgroup of the module's carrier, stored as the canonical Hermite
/// basis of its coordinate lattice (which always contains d_i e_i).
class Submodule {
public:
    Submodule(const GModule& module, const std::vector<std::vector<std::int64_t>>& generators);

    bool contains(std::span<const std::int64_t> y) const;
    bool contains(const Permutation& x) const { return contains(module_->encode(x)); }
    std::uint64_t order() const;
    /// Hermite rows, reduced modulo the basis orders.
    std::vector<std::vector<std::int64_t>> generators() const;
    std::vector<Permutation> generator_elements() const;
    const IntMatrix& lattice() const noexcept { return lattice_; }
    const GModule& module() const noexcept { return *module_; }

    /// Closes under the given action matrices; returns *this for chaining.
    Submodule& close_under(const std::vector<IntMatrix>& actions);

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.lattice_ == b.lattice_;
    }

private:
    void add(std::span<const std::int64_t> y);
    const GModule* module_;
    IntMatrix lattice_;
};

/// M(G-1) = sum over acting elements g_i of M(g_i - 1), closed under the
/// action of the same elements.
Submodule augmentation_submodule(const GModule& m, const std::vector<Permutation>& acting);
/// Augmentation of a submodule V: sum of V(g_i - 1), closed under action.
Submodule augmentation_of(const Submodule& v, const std::vector<Permutation>& acting);

/// ZG-submodule generated by `elements` (or by their images m(g-1) under
/// the module's acting elements when apply_augmentation is set).
Submodule submodule_generated(const GModule& m, const std::vector<Permutation>& elements,
                              bool apply_augmentation);

/// V == V(G-1).
bool is_perfect_module(const Submodule& v, const std::vector<Permutation>& acting);

/// q_1..q_m in the carrier with prod_l [q_l, a_l] == target, where the a_l
/// are the module's acting elements. Throws PreconditionError if target
/// is outside [A,G].
std::vector<Permutation> solve_commutator_decomposition(const GModule& m,
                                                        const Permutation& target);

} // namespace perfgrp
