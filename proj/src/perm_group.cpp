#include "perfgrp/perm_group.hpp"

#include "perfgrp/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace perfgrp {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree) {
    if (degree == 0)
        throw InputError("group degree must be positive");
    levels_.resize(degree_);
    auto id = Permutation::identity(degree_);
    for (std::size_t k = 0; k < degree_; ++k) {
        auto& level = levels_[k];
        level.slot.assign(degree_, -1);
        level.slot[k] = 0;
        level.reps.push_back(id);
        level.reps_inverse.push_back(id);
    }
    for (auto& g : generators)
        add_generator(g);
}

bool PermGroup::sift_test(std::size_t k, Permutation g) const {
    for (std::size_t i = k; i < degree_; ++i) {
        Point j = g[i];
        if (j == i)
            continue;
        std::int32_t s = levels_[i].slot[j];
        if (s < 0)
            return false;
        g *= levels_[i].reps_inverse[static_cast<std::size_t>(s)];
    }
    return true;
}

// Knuth's procedure A: add g (fixing 0..k-1) to G^(k).
void PermGroup::add_at(std::size_t k, const Permutation& g) {
    if (sift_test(k, g))
        return;
    levels_[k].added.push_back(g);
    for (std::size_t idx = 0; idx < levels_[k].reps.size(); ++idx) {
        Permutation rep = levels_[k].reps[idx];
        extend_at(k, rep * g);
    }
}

// Knuth's procedure B: g fixes 0..k-1 and maps k somewhere.
void PermGroup::extend_at(std::size_t k, const Permutation& g) {
    auto& level = levels_[k];
    Point j = g[k];
    std::int32_t s = level.slot[j];
    if (s < 0) {
        level.slot[j] = static_cast<std::int32_t>(level.reps.size());
        level.reps.push_back(g);
        level.reps_inverse.push_back(g.inverse());
        for (std::size_t t = 0; t < levels_[k].added.size(); ++t) {
            Permutation gen = levels_[k].added[t];
            extend_at(k, g * gen);
        }
    } else {
        add_at(k + 1, g * level.reps_inverse[static_cast<std::size_t>(s)]);
    }
}

void PermGroup::recompute_order() {
    order_ = 1;
    for (const auto& level : levels_)
        order_ *= level.reps.size();
}

bool PermGroup::add_generator(const Permutation& g) {
    if (g.degree() != degree_)
        throw InputError("generator degree " + std::to_string(g.degree()) +
                         " does not match group degree " + std::to_string(degree_));
    generators_.push_back(g);
    if (sift_test(0, g))
        return false;
    add_at(0, g);
    reduced_.push_back(g);
    recompute_order();
    return true;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_)
        throw InputError("membership test with mismatched degree");
    return sift_test(0, g);
}

bool PermGroup::contains_all(const PermGroup& h) const {
    return std::all_of(h.reduced_generators().begin(), h.reduced_generators().end(),
                       [&](const Permutation& x) { return contains(x); });
}

bool PermGroup::same_group(const PermGroup& h) const {
    return degree_ == h.degree_ && order_ == h.order_ && contains_all(h);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
    auto g = Permutation::identity(degree_);
    for (std::size_t k = degree_; k-- > 0;) {
        const auto& reps = levels_[k].reps;
        if (reps.size() == 1)
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
        g *= reps[pick(rng)];
    }
    return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap)
        throw SizeError("group order " + std::to_string(order_) + " exceeds enumeration cap " +
                        std::to_string(cap));
    std::vector<Permutation> out{Permutation::identity(degree_)};
    out.reserve(order_);
    for (std::size_t k = degree_; k-- > 0;) {
        const auto& reps = levels_[k].reps;
        if (reps.size() == 1)
            continue;
        std::vector<Permutation> next;
        next.reserve(out.size() * reps.size());
        for (const auto& x : out)
            for (const auto& r : reps)
                next.push_back(x * r);
        out = std::move(next);
    }
    return out;
}

std::vector<Point> PermGroup::basic_orbit(std::size_t k) const {
    std::vector<Point> orbit;
    for (const auto& r : levels_.at(k).reps)
        orbit.push_back(r[k]);
    return orbit;
}

std::optional<Permutation> PermGroup::factor_prefix(std::span<const Point> prefix_images) const {
    std::vector<Point> residue(prefix_images.begin(), prefix_images.end());
    const std::size_t p = residue.size();
    auto u = Permutation::identity(degree_);
    for (std::size_t i = 0; i < p; ++i) {
        Point j = residue[i];
        if (j == i)
            continue;
        if (j >= p)
            return std::nullopt;
        std::int32_t s = levels_[i].slot[j];
        if (s < 0)
            return std::nullopt;
        const auto& inv = levels_[i].reps_inverse[static_cast<std::size_t>(s)];
        for (auto& x : residue) {
            x = inv[x];
            if (x >= p)
                return std::nullopt;
        }
        u = levels_[i].reps[static_cast<std::size_t>(s)] * u;
    }
    return u;
}

// ---- algorithms -----------------------------------------------------------

namespace {

// Closes `h` under conjugation by every element of `by`.
void close_under_conjugation(PermGroup& h, const std::vector<Permutation>& by) {
    std::deque<Permutation> work(h.reduced_generators().begin(), h.reduced_generators().end());
    while (!work.empty()) {
        Permutation x = work.front();
        work.pop_front();
        for (const auto& s : by) {
            auto c = conjugate(x, s);
            if (h.add_generator(c))
                work.push_back(std::move(c));
        }
    }
}

} // namespace

PermGroup join(const PermGroup& a, const PermGroup& b) {
    PermGroup out = a;
    for (const auto& g : b.reduced_generators())
        out.add_generator(g);
    return out;
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
    if (!g.contains_all(n))
        return false;
    for (const auto& x : n.reduced_generators())
        for (const auto& s : g.reduced_generators())
            if (!n.contains(conjugate(x, s)))
                return false;
    return true;
}

bool is_abelian(const PermGroup& g) {
    const auto& gens = g.reduced_generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i])
                return false;
    return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
    for (const auto& s : seeds)
        if (!g.contains(s))
            throw PreconditionError("normal_closure: seed " + s.to_string() + " not in group");
    PermGroup h(g.degree(), seeds);
    close_under_conjugation(h, g.reduced_generators());
    return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
    const auto& gens = g.reduced_generators();
    std::vector<Permutation> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            seeds.push_back(commutator(gens[i], gens[j]));
    PermGroup h(g.degree(), std::move(seeds));
    close_under_conjugation(h, gens);
    return h;
}

PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
    if (!g.contains_all(h) || !g.contains_all(k))
        throw PreconditionError("commutator_subgroup: H and K must be subgroups of G");
    if (!is_normal(g, h) && !is_normal(g, k))
        throw PreconditionError("commutator_subgroup: neither H nor K is normal in G");
    std::vector<Permutation> seeds;
    for (const auto& x : h.reduced_generators())
        for (const auto& y : k.reduced_generators())
            seeds.push_back(commutator(x, y));
    PermGroup out(g.degree(), std::move(seeds));
    auto by = h.reduced_generators();
    by.insert(by.end(), k.reduced_generators().begin(), k.reduced_generators().end());
    close_under_conjugation(out, by);
    return out;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, std::uint64_t cap) {
    if (!g.contains(x))
        throw PreconditionError("centralizer: element not in group");
    PermGroup out = PermGroup::trivial(g.degree());
    for (const auto& h : g.elements(cap))
        if (h * x == x * h)
            out.add_generator(h);
    return out;
}

PermGroup center(const PermGroup& g, std::uint64_t cap) {
    PermGroup out = PermGroup::trivial(g.degree());
    const auto& gens = g.reduced_generators();
    for (const auto& h : g.elements(cap)) {
        bool central = std::all_of(gens.begin(), gens.end(),
                                   [&](const Permutation& s) { return h * s == s * h; });
        if (central)
            out.add_generator(h);
    }
    return out;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g, std::uint64_t cap) {
    auto elems = g.elements(cap);
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    index.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], i);

    std::vector<bool> assigned(elems.size(), false);
    std::vector<std::vector<Permutation>> classes;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (assigned[i])
            continue;
        std::vector<Permutation> cls{elems[i]};
        assigned[i] = true;
        for (std::size_t q = 0; q < cls.size(); ++q) {
            for (const auto& s : g.reduced_generators()) {
                auto c = conjugate(cls[q], s);
                auto idx = index.at(c);
                if (!assigned[idx]) {
                    assigned[idx] = true;
                    cls.push_back(std::move(c));
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

ClassWithConjugators conjugacy_class_of(const PermGroup& g, const Permutation& x) {
    ClassWithConjugators out;
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    out.members.push_back(x);
    out.conjugators.push_back(Permutation::identity(g.degree()));
    seen.emplace(x, 0);
    for (std::size_t q = 0; q < out.members.size(); ++q) {
        for (const auto& s : g.reduced_generators()) {
            auto c = conjugate(out.members[q], s);
            if (seen.count(c))
                continue;
            seen.emplace(c, out.members.size());
            out.members.push_back(std::move(c));
            out.conjugators.push_back(out.conjugators[q] * s);
        }
    }
    return out;
}

bool generates(const PermGroup& g, const std::vector<Permutation>& elements) {
    PermGroup h = PermGroup::trivial(g.degree());
    for (const auto& x : elements) {
        if (!g.contains(x))
            return false;
        h.add_generator(x);
        if (h.order() == g.order())
            return true;
    }
    return h.order() == g.order();
}

} // namespace perfgrp
