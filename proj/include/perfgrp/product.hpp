#pragma once

#include "perfgrp/perm_group.hpp"

#include <map>

namespace perfgrp {

/// Element of a finite direct product; missing indices are the identity.
using ProductElement = std::map<std::size_t, Permutation>;

/// Direct product of permutation groups acting on the disjoint union of
/// their domains (degree = sum of degrees, factor j at offsets()[j]).
class ProductContext {
public:
    ProductContext() = default;
    explicit ProductContext(std::vector<PermGroup> factors);

    std::size_t size() const noexcept { return factors_.size(); }
    std::size_t degree() const noexcept { return degree_; }
    const PermGroup& factor(std::size_t j) const { return factors_.at(j); }
    const std::vector<PermGroup>& factors() const noexcept { return factors_; }
    const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }

    Permutation identity() const { return Permutation::identity(degree_); }
    Permutation embed(std::size_t j, const Permutation& g) const;
    Permutation project(const Permutation& x, std::size_t j) const;
    /// One component per factor, in order.
    Permutation combine(const std::vector<Permutation>& components) const;

    Permutation to_perm(const ProductElement& e) const;
    ProductElement to_element(const Permutation& x) const;

    ProductElement multiply(const ProductElement& a, const ProductElement& b) const;
    ProductElement invert(const ProductElement& a) const;

    PermGroup subgroup(const std::vector<Permutation>& gens) const;
    PermGroup subgroup(const std::vector<ProductElement>& gens) const;
    /// The projection of a subgroup onto factor j.
    PermGroup projection(const PermGroup& h, std::size_t j) const;
    /// The full product as a group.
    PermGroup whole() const;

private:
    std::vector<PermGroup> factors_;
    std::vector<std::size_t> offsets_;
    std::size_t degree_ = 1;
};

} // namespace perfgrp
