#include "perfgrp/product.hpp"

#include "perfgrp/errors.hpp"

namespace perfgrp {

ProductContext::ProductContext(std::vector<PermGroup> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw InputError("direct product needs at least one factor");
    degree_ = 0;
    for (const auto& f : factors_) {
        offsets_.push_back(degree_);
        degree_ += f.degree();
    }
}

Permutation ProductContext::embed(std::size_t j, const Permutation& g) const {
    if (g.degree() != factors_.at(j).degree())
        throw InputError("embed: degree mismatch for factor " + std::to_string(j));
    return g.embed(degree_, offsets_[j]);
}

Permutation ProductContext::project(const Permutation& x, std::size_t j) const {
    return x.restrict(offsets_.at(j), factors_.at(j).degree());
}

Permutation ProductContext::combine(const std::vector<Permutation>& components) const {
    if (components.size() != factors_.size())
        throw InputError("combine: need one component per factor");
    std::vector<Point> images(degree_);
    for (std::size_t j = 0; j < components.size(); ++j) {
        if (components[j].degree() != factors_[j].degree())
            throw InputError("combine: degree mismatch for factor " + std::to_string(j));
        for (std::size_t i = 0; i < components[j].degree(); ++i)
            images[offsets_[j] + i] = static_cast<Point>(offsets_[j] + components[j][i]);
    }
    return Permutation::from_images(std::move(images));
}

Permutation ProductContext::to_perm(const ProductElement& e) const {
    std::vector<Permutation> comps;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        auto it = e.find(j);
        comps.push_back(it == e.end() ? Permutation::identity(factors_[j].degree()) : it->second);
    }
    for (const auto& [j, g] : e)
        if (j >= factors_.size())
            throw InputError("product element refers to undeclared factor " + std::to_string(j));
    return combine(comps);
}

ProductElement ProductContext::to_element(const Permutation& x) const {
    ProductElement e;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        auto c = project(x, j);
        if (!c.is_identity())
            e.emplace(j, std::move(c));
    }
    return e;
}

ProductElement ProductContext::multiply(const ProductElement& a, const ProductElement& b) const {
    return to_element(to_perm(a) * to_perm(b));
}

ProductElement ProductContext::invert(const ProductElement& a) const {
    return to_element(to_perm(a).inverse());
}

PermGroup ProductContext::subgroup(const std::vector<Permutation>& gens) const {
    return PermGroup(degree_, gens);
}

PermGroup ProductContext::subgroup(const std::vector<ProductElement>& gens) const {
    PermGroup h = PermGroup::trivial(degree_);
    for (const auto& e : gens)
        h.add_generator(to_perm(e));
    return h;
}

PermGroup ProductContext::projection(const PermGroup& h, std::size_t j) const {
    PermGroup out = PermGroup::trivial(factors_.at(j).degree());
    for (const auto& g : h.reduced_generators())
        out.add_generator(project(g, j));
    return out;
}

PermGroup ProductContext::whole() const {
    PermGroup out = PermGroup::trivial(degree_);
    for (std::size_t j = 0; j < factors_.size(); ++j)
        for (const auto& g : factors_[j].reduced_generators())
            out.add_generator(embed(j, g));
    return out;
}

} // namespace perfgrp
