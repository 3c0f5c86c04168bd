#include "perfgrp/structure.hpp"

#include "perfgrp/abelian.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace perfgrp {

namespace {

using Mask = std::vector<bool>;

struct NormalLattice {
    std::vector<Permutation> class_reps;
    std::vector<std::pair<Mask, PermGroup>> entries;

    Mask mask_of(const PermGroup& n) const {
        Mask m(class_reps.size());
        for (std::size_t i = 0; i < class_reps.size(); ++i)
            m[i] = n.contains(class_reps[i]);
        return m;
    }

    const PermGroup* find(const Mask& m) const {
        for (const auto& [mask, group] : entries)
            if (mask == m)
                return &group;
        return nullptr;
    }
};

bool subset(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i])
            return false;
    return true;
}

NormalLattice normal_lattice(const PermGroup& g, std::uint64_t cap) {
    NormalLattice lat;
    for (const auto& cls : conjugacy_classes(g, cap))
        lat.class_reps.push_back(cls.front());

    auto add = [&](PermGroup n) {
        auto m = lat.mask_of(n);
        if (!lat.find(m))
            lat.entries.emplace_back(std::move(m), std::move(n));
    };
    add(PermGroup::trivial(g.degree()));
    for (const auto& r : lat.class_reps)
        add(normal_closure(g, {r}));

    for (std::size_t a = 0; a < lat.entries.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            Mask either(lat.class_reps.size());
            for (std::size_t i = 0; i < either.size(); ++i)
                either[i] = lat.entries[a].first[i] || lat.entries[b].first[i];
            if (lat.find(either))
                continue;
            add(join(lat.entries[a].second, lat.entries[b].second));
        }

    std::sort(lat.entries.begin(), lat.entries.end(), [](const auto& x, const auto& y) {
        if (x.second.order() != y.second.order())
            return x.second.order() < y.second.order();
        return x.first < y.first;
    });
    return lat;
}

PermGroup star_from_lattice(const PermGroup& g, const NormalLattice& lat) {
    auto derived = derived_subgroup(g);
    const Mask derived_mask = lat.mask_of(derived);
    Mask result = derived_mask;
    for (const auto& [mask, n] : lat.entries) {
        if (n.order() == g.order())
            continue;
        bool maximal = true;
        for (const auto& [other, m] : lat.entries)
            if (m.order() != g.order() && m.order() > n.order() && subset(mask, other)) {
                maximal = false;
                break;
            }
        if (!maximal)
            continue;
        if (subset(derived_mask, mask)) // G/N abelian
            continue;
        for (std::size_t i = 0; i < result.size(); ++i)
            result[i] = result[i] && mask[i];
    }
    const auto* found = lat.find(result);
    if (!found)
        throw InternalError("intersection of normal subgroups missing from the lattice");
    return *found;
}

bool tuple_generates(const PermGroup& g, const std::vector<Permutation>& t) {
    return generates(g, t);
}

} // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::uint64_t cap) {
    auto lat = normal_lattice(g, cap);
    std::vector<PermGroup> out;
    for (auto& [mask, n] : lat.entries)
        out.push_back(std::move(n));
    return out;
}

PermGroup star_subgroup(const PermGroup& g, std::uint64_t cap) {
    if (g.is_trivial())
        return g;
    return star_from_lattice(g, normal_lattice(g, cap));
}

std::optional<std::size_t> min_generators(const PermGroup& g, std::size_t bound,
                                          std::uint64_t seed) {
    if (g.is_trivial())
        return 0;
    constexpr std::uint64_t exhaustive_order = 10'000;
    constexpr double exhaustive_tuples = 1e6;
    std::mt19937_64 rng(seed);
    std::vector<Permutation> elems;
    if (g.order() < exhaustive_order)
        elems = g.elements();

    for (std::size_t t = 1; t <= bound; ++t) {
        if (t == 1) {
            if (!elems.empty()) {
                for (const auto& x : elems)
                    if (x.order() == g.order())
                        return 1;
            } else {
                for (int i = 0; i < 2000; ++i)
                    if (g.random_element(rng).order() == g.order())
                        return 1;
            }
            continue;
        }
        for (int trial = 0; trial < 256; ++trial) {
            std::vector<Permutation> tuple;
            for (std::size_t i = 0; i < t; ++i)
                tuple.push_back(g.random_element(rng));
            if (tuple_generates(g, tuple))
                return t;
        }
        if (!elems.empty() && std::pow(static_cast<double>(elems.size()), double(t)) <= exhaustive_tuples) {
            std::vector<std::size_t> idx(t, 1); // index 0 is the identity
            for (;;) {
                std::vector<Permutation> tuple;
                for (auto i : idx)
                    tuple.push_back(elems[i]);
                if (tuple_generates(g, tuple))
                    return t;
                std::size_t pos = t;
                while (pos-- > 0) {
                    if (++idx[pos] < elems.size())
                        break;
                    idx[pos] = 1;
                }
                if (pos == static_cast<std::size_t>(-1))
                    break;
            }
        }
    }
    return std::nullopt;
}

StructureReport star_series(const PermGroup& g, std::size_t max_depth, std::size_t generator_bound,
                            std::uint64_t seed, std::uint64_t cap) {
    StructureReport report;
    report.series.push_back(g);
    for (;;) {
        const auto& last = report.series.back();
        if (last.is_trivial()) {
            report.level = report.series.size() - 1;
            break;
        }
        if (report.series.size() - 1 >= max_depth)
            break;
        auto next = star_subgroup(last, cap);
        if (next.order() == last.order())
            break;
        report.series.push_back(std::move(next));
    }
    auto derived = derived_subgroup(g);
    report.perfect = derived.order() == g.order();
    if (!report.perfect)
        report.abelianization_invariants = abelian_invariants(quotient(g, derived, cap).group, cap);
    report.generator_bound = generator_bound;
    report.min_generators = min_generators(g, generator_bound, seed);
    return report;
}

YMembership is_in_Y(const PermGroup& g, std::size_t d, std::size_t k, std::uint64_t seed,
                    std::uint64_t cap) {
    if (derived_subgroup(g).order() != g.order())
        return {false, "not perfect"};
    if (!min_generators(g, d, seed))
        return {false, "no generating " + std::to_string(d) + "-tuple found"};
    PermGroup term = g;
    for (std::size_t i = 0; i < k && !term.is_trivial(); ++i)
        term = star_subgroup(term, cap);
    if (!term.is_trivial())
        return {false, "G_" + std::to_string(k) + " has order " + std::to_string(term.order()) +
                           ", level exceeds " + std::to_string(k)};
    return {true, "perfect, " + std::to_string(d) + "-generated, level <= " + std::to_string(k)};
}

StarSplit split_star_trivial(const PermGroup& w, std::uint64_t cap) {
    if (!star_subgroup(w, cap).is_trivial())
        throw PreconditionError("split_star_trivial: star subgroup of W is not trivial");
    StarSplit split{center(w, cap), derived_subgroup(w)};
    const auto& a = split.abelian;
    const auto& s = split.semisimple;
    if (a.order() * s.order() != w.order())
        throw PreconditionError("split_star_trivial: |A||S| != |W|");
    for (const auto& x : a.elements(cap))
        if (!x.is_identity() && s.contains(x))
            throw PreconditionError("split_star_trivial: A and S intersect nontrivially");
    if (!s.is_trivial()) {
        if (derived_subgroup(s).order() != s.order())
            throw PreconditionError("split_star_trivial: S is not perfect");
        if (!center(s, cap).is_trivial())
            throw PreconditionError("split_star_trivial: S has nontrivial center");
    }
    return split;
}

std::vector<PermGroup> simple_direct_factors(const PermGroup& s, std::uint64_t cap) {
    std::vector<PermGroup> out;
    if (s.is_trivial())
        return out;
    auto lat = normal_lattice(s, cap);
    for (const auto& [mask, n] : lat.entries) {
        if (n.is_trivial())
            continue;
        bool minimal = true;
        for (const auto& [other, m] : lat.entries)
            if (!m.is_trivial() && m.order() < n.order() && subset(other, mask)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(n);
    }
    std::uint64_t product = 1;
    for (const auto& f : out) {
        product *= f.order();
        if (is_abelian(f))
            throw PreconditionError("simple_direct_factors: group has an abelian minimal normal subgroup");
    }
    if (product != s.order())
        throw PreconditionError("simple_direct_factors: minimal normal subgroups do not span the group");
    return out;
}

bool is_simple_nonabelian(const PermGroup& g, std::uint64_t cap) {
    if (g.is_trivial() || is_abelian(g))
        return false;
    return normal_subgroups(g, cap).size() == 2;
}

} // namespace perfgrp
