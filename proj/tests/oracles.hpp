#pragma once

// Brute-force reference computations on raw image vectors. These do not
// touch the stabilizer chain so they can serve as independent oracles.

#include "perfgrp/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Raw = std::vector<std::uint32_t>;

inline Raw raw(const perfgrp::Permutation& p) { return Raw(p.images().begin(), p.images().end()); }

inline perfgrp::Permutation perm(const Raw& r) { return perfgrp::Permutation::from_images(r); }

// Left factor applied first.
inline Raw mul(const Raw& a, const Raw& b) {
    Raw c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = b[a[i]];
    return c;
}

inline Raw inv(const Raw& a) {
    Raw c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[a[i]] = static_cast<std::uint32_t>(i);
    return c;
}

inline Raw id(std::size_t n) {
    Raw c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = static_cast<std::uint32_t>(i);
    return c;
}

inline Raw comm(const Raw& x, const Raw& y) { return mul(mul(inv(x), inv(y)), mul(x, y)); }

inline std::set<Raw> closure(std::size_t n, const std::vector<Raw>& gens) {
    std::set<Raw> seen{id(n)};
    std::vector<Raw> frontier{id(n)};
    while (!frontier.empty()) {
        std::vector<Raw> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = mul(x, g);
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::set<Raw> closure(std::size_t n, const std::vector<perfgrp::Permutation>& gens) {
    std::vector<Raw> r;
    for (const auto& g : gens)
        r.push_back(raw(g));
    return closure(n, r);
}

// Subgroup generated by all [h,k], h in H, k in K (full element sets).
inline std::set<Raw> commutator_closure(std::size_t n, const std::set<Raw>& h,
                                        const std::set<Raw>& k) {
    std::set<Raw> comms;
    for (const auto& x : h)
        for (const auto& y : k)
            comms.insert(comm(x, y));
    return closure(n, std::vector<Raw>(comms.begin(), comms.end()));
}

inline std::set<Raw> centralizer(const std::set<Raw>& g, const Raw& x) {
    std::set<Raw> out;
    for (const auto& h : g)
        if (mul(h, x) == mul(x, h))
            out.insert(h);
    return out;
}

// All subgroups that are normal, by scanning closures of every subset
// generated by up to two elements (enough for the small groups tested).
inline std::set<std::set<Raw>> normal_subgroups_bruteforce(std::size_t n, const std::set<Raw>& g) {
    std::vector<Raw> elems(g.begin(), g.end());
    std::set<std::set<Raw>> subgroups;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j)
            subgroups.insert(closure(n, std::vector<Raw>{elems[i], elems[j]}));
    // joins of pairs pick up subgroups needing more generators
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<Raw>> list(subgroups.begin(), subgroups.end());
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                std::vector<Raw> gens(list[a].begin(), list[a].end());
                gens.insert(gens.end(), list[b].begin(), list[b].end());
                if (subgroups.insert(closure(n, gens)).second)
                    grew = true;
            }
        if (subgroups.size() > 2000)
            break;
    }
    std::set<std::set<Raw>> normal;
    for (const auto& s : subgroups) {
        bool ok = true;
        for (const auto& x : s) {
            for (const auto& y : elems)
                if (!s.count(mul(mul(inv(y), x), y))) {
                    ok = false;
                    break;
                }
            if (!ok)
                break;
        }
        if (ok)
            normal.insert(s);
    }
    return normal;
}

// Conjugacy classes by conjugating every element by every element.
inline std::vector<std::set<Raw>> classes_bruteforce(const std::set<Raw>& g) {
    std::vector<std::set<Raw>> out;
    std::set<Raw> seen;
    for (const auto& x : g) {
        if (seen.count(x))
            continue;
        std::set<Raw> cls;
        for (const auto& y : g)
            cls.insert(mul(mul(inv(y), x), y));
        seen.insert(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

// Normal subgroups as the unions of classes (with the identity) that are
// closed under multiplication and have order dividing |G|.
inline std::set<std::set<Raw>> normal_subgroups_by_classes(const std::set<Raw>& g) {
    auto classes = classes_bruteforce(g);
    const Raw one = id(g.begin()->size());
    std::vector<std::set<Raw>> rest;
    for (const auto& c : classes)
        if (!c.count(one))
            rest.push_back(c);
    std::set<std::set<Raw>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
        std::set<Raw> u{one};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1)
                u.insert(rest[i].begin(), rest[i].end());
        if (g.size() % u.size() != 0)
            continue;
        bool closed = true;
        for (auto x = u.begin(); closed && x != u.end(); ++x)
            for (auto y = u.begin(); closed && y != u.end(); ++y)
                closed = u.count(mul(*x, *y)) > 0;
        if (closed)
            out.insert(std::move(u));
    }
    return out;
}

// G_*: [G,G] intersected with every maximal normal subgroup whose quotient
// is nonabelian simple.
inline std::set<Raw> star_bruteforce(const std::set<Raw>& g) {
    const std::size_t n = g.begin()->size();
    auto normals = normal_subgroups_by_classes(g);
    auto derived = commutator_closure(n, g, g);
    auto result = derived;
    for (const auto& m : normals) {
        if (m.size() == g.size())
            continue;
        bool maximal = true;
        for (const auto& other : normals)
            if (other.size() > m.size() && other.size() < g.size() &&
                std::includes(other.begin(), other.end(), m.begin(), m.end()))
                maximal = false;
        if (!maximal || std::includes(m.begin(), m.end(), derived.begin(), derived.end()))
            continue;
        std::set<Raw> meet;
        for (const auto& x : result)
            if (m.count(x))
                meet.insert(x);
        result = std::move(meet);
    }
    return result;
}

} // namespace oracle
