#include "perfgrp/covering.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/structure.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace perfgrp {

ElementSet make_element_set(std::vector<Permutation> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

ElementSet product_set(const ElementSet& x, const ElementSet& y, std::uint64_t cap) {
    std::unordered_set<Permutation, PermutationHash> out;
    for (const auto& a : x)
        for (const auto& b : y) {
            out.insert(a * b);
            if (out.size() > cap)
                throw SizeError("product set exceeds enumeration cap");
        }
    return make_element_set(std::vector<Permutation>(out.begin(), out.end()));
}

ElementSet normal_set(const PermGroup& s, const std::vector<Permutation>& elems) {
    std::vector<Permutation> out;
    for (const auto& x : elems) {
        auto cls = conjugacy_class_of(s, x);
        out.insert(out.end(), cls.members.begin(), cls.members.end());
    }
    return make_element_set(std::move(out));
}

CoveringCertificate covering_number(const PermGroup& s, const ElementSet& x, std::uint64_t cap) {
    if (x.empty() || (x.size() == 1 && x.front().is_identity()))
        throw PreconditionError("covering_number: the set is trivial");
    for (const auto& m : x) {
        if (!s.contains(m))
            throw PreconditionError("covering_number: element outside the group");
        for (const auto& g : s.generators())
            if (!std::binary_search(x.begin(), x.end(), conjugate(m, g)))
                throw PreconditionError("covering_number: the set is not normal");
    }
    CoveringCertificate cert{s.order(), x.size(), 1};
    ElementSet power = x;
    while (power.size() < s.order()) {
        if (cert.e >= 64)
            throw SearchError("covering_number: X^64 is still a proper subset");
        power = product_set(power, x, cap);
        ++cert.e;
    }
    if (double(cert.e) * std::log(double(x.size())) + 1e-9 < std::log(double(s.order())))
        throw InternalError("covering_number: counting bound violated");
    return cert;
}

std::size_t pick_small_centralizer_gen(const PermGroup& s, const std::vector<Permutation>& gens) {
    if (!generates(s, gens))
        throw PreconditionError("pick_small_centralizer_gen: tuple does not generate the group");
    std::size_t best = 0;
    std::uint64_t best_order = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto c = centralizer(s, gens[j]).order();
        if (j == 0 || c < best_order) {
            best = j;
            best_order = c;
        }
    }
    const double t = double(gens.size());
    if (t * std::log(double(best_order)) > (t - 1) * std::log(double(s.order())) + 1e-9)
        throw InternalError("pick_small_centralizer_gen: centralizer of order " +
                            std::to_string(best_order) + " exceeds |S|^((t-1)/t)");
    return best;
}

std::vector<std::vector<Permutation>> decompose_conjugate_product(
    const PermGroup& s, const Permutation& target, const std::vector<Permutation>& gens,
    std::size_t e) {
    const std::size_t g = gens.size();
    if (g == 0 || e == 0)
        throw PreconditionError("decompose_conjugate_product: empty product");
    if (!s.contains(target))
        throw PreconditionError("decompose_conjugate_product: target outside the group");
    std::vector<ClassWithConjugators> classes;
    for (const auto& m : gens)
        classes.push_back(conjugacy_class_of(s, m));

    struct Back {
        std::size_t prev;   // index into previous layer
        std::size_t member; // index into the class
    };
    std::vector<std::vector<Permutation>> layers{{Permutation::identity(target.degree())}};
    std::vector<std::vector<Back>> backs{{}};
    for (std::size_t step = 0; step < g * e; ++step) {
        const auto& cls = classes[step % g];
        std::vector<Permutation> next;
        std::vector<Back> back;
        std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
        const auto& prev = layers.back();
        for (std::size_t p = 0; p < prev.size(); ++p)
            for (std::size_t c = 0; c < cls.members.size(); ++c) {
                auto y = prev[p] * cls.members[c];
                if (seen.emplace(y, next.size()).second) {
                    next.push_back(std::move(y));
                    back.push_back({p, c});
                }
            }
        layers.push_back(std::move(next));
        backs.push_back(std::move(back));
    }

    const auto& last = layers.back();
    auto it = std::find(last.begin(), last.end(), target);
    if (it == last.end())
        throw PreconditionError("decompose_conjugate_product: target is not a product of " +
                                std::to_string(e) + " rounds of the given classes");
    std::vector<std::vector<Permutation>> r(e, std::vector<Permutation>(g));
    std::size_t idx = static_cast<std::size_t>(it - last.begin());
    for (std::size_t step = g * e; step-- > 0;) {
        const auto& b = backs[step + 1][idx];
        r[step / g][step % g] = classes[step % g].conjugators[b.member];
        idx = b.prev;
    }

    Permutation check = Permutation::identity(target.degree());
    for (const auto& round : r)
        for (std::size_t j = 0; j < g; ++j)
            check = check * conjugate(gens[j], round[j]);
    if (check != target)
        throw InternalError("decompose_conjugate_product: witness does not evaluate to target");
    return r;
}

std::size_t class_product_covering_number(const PermGroup& s, const std::vector<Permutation>& gens) {
    ElementSet x{Permutation::identity(s.degree())};
    for (const auto& m : gens)
        x = product_set(x, normal_set(s, {m}));
    return covering_number(s, x).e;
}

Permutation SemisimpleCover::generator(std::size_t j) const {
    std::vector<Permutation> parts;
    for (const auto& t : tuples)
        parts.push_back(t.at(j));
    return context.combine(parts);
}

SemisimpleCover semisimple_cover(const std::vector<PermGroup>& factors, std::size_t budget,
                                 std::uint64_t seed) {
    std::size_t needed = 0;
    for (const auto& m : factors) {
        if (!is_simple_nonabelian(m))
            throw PreconditionError("semisimple_cover: factor is not nonabelian simple");
        auto d = min_generators(m, budget, seed);
        if (!d)
            throw PreconditionError("semisimple_cover: budget " + std::to_string(budget) +
                                    " cannot generate a factor");
        needed = std::max(needed, *d);
    }
    if (budget < needed)
        throw PreconditionError("semisimple_cover: budget below factor generator count");

    SemisimpleCover cover;
    cover.factors = factors;
    cover.context = ProductContext(factors);
    std::uint64_t full = 1;
    for (const auto& m : factors)
        full *= m.order();

    std::mt19937_64 rng(seed);
    auto random_tuple = [&](const PermGroup& m) {
        for (;;) {
            std::vector<Permutation> t;
            while (t.size() < budget) {
                auto x = m.random_element(rng);
                if (!x.is_identity())
                    t.push_back(std::move(x));
            }
            if (generates(m, t))
                return t;
        }
    };

    constexpr int attempts = 20;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        cover.tuples.clear();
        for (const auto& m : factors)
            cover.tuples.push_back(random_tuple(m));
        std::vector<Permutation> gens;
        for (std::size_t j = 0; j < budget; ++j)
            gens.push_back(cover.generator(j));
        cover.group = cover.context.subgroup(gens);
        cover.full_product = cover.group.order() == full;
        if (cover.full_product)
            return cover;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (cover.context.projection(cover.group, i).order() != factors[i].order())
            throw InternalError("semisimple_cover: projection is not surjective");
    if (derived_subgroup(cover.group).order() != cover.group.order())
        throw InternalError("semisimple_cover: cover is not perfect");
    return cover;
}

} // namespace perfgrp
