#include "perfgrp/words_lifting.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

namespace perfgrp {

namespace {

struct Step {
    Word word;
    Permutation value;
};

std::vector<Step> commutator_steps(const std::vector<Permutation>& gens, std::size_t conj_depth) {
    const std::size_t m = gens.size();
    std::vector<Word> letters;
    for (std::size_t i = 0; i < m; ++i)
        for (int e : {1, -1})
            letters.push_back(Word::generator(m, i, e));

    std::vector<Word> base;
    for (const auto& a : letters)
        for (const auto& b : letters)
            if (a.letters()[0].index != b.letters()[0].index)
                base.push_back(word_commutator(a, b));

    std::vector<Word> conjugators{Word(m)};
    std::vector<Word> layer{Word(m)};
    for (std::size_t d = 0; d < conj_depth; ++d) {
        std::vector<Word> next;
        for (const auto& u : layer)
            for (const auto& l : letters) {
                auto v = u * l;
                if (v.length() == d + 1)
                    next.push_back(v);
            }
        conjugators.insert(conjugators.end(), next.begin(), next.end());
        layer = std::move(next);
    }

    std::vector<Step> steps;
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    for (const auto& u : conjugators)
        for (const auto& c : base) {
            auto w = word_conjugate(c, u);
            auto v = evaluate_word(w, gens);
            if (v.is_identity())
                continue;
            auto [it, fresh] = seen.emplace(v, steps.size());
            if (fresh)
                steps.push_back({w, v});
            else if (w.length() < steps[it->second].word.length())
                steps[it->second].word = w;
        }
    return steps;
}

struct Node {
    std::size_t parent;
    std::size_t step; // index into steps, unused for roots
    std::size_t length;
};

// Forward side: word(root -> x) multiplies steps on the right. Backward
// side stores x with target = x * (steps along the path).
struct Side {
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    std::vector<Permutation> elems;
    std::vector<Node> nodes;
    std::vector<std::size_t> frontier;

    explicit Side(const Permutation& root) {
        index.emplace(root, 0);
        elems.push_back(root);
        nodes.push_back({0, 0, 0});
        frontier.push_back(0);
    }

    std::vector<std::size_t> path(std::size_t i) const {
        std::vector<std::size_t> out;
        while (i != 0) {
            out.push_back(nodes[i].step);
            i = nodes[i].parent;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

std::optional<Word> search(const std::vector<Permutation>& gens, const Permutation& target,
                           const std::vector<Step>& steps, std::size_t cap, bool& exhausted) {
    const std::size_t m = gens.size();
    std::vector<Permutation> inverse_values;
    for (const auto& s : steps)
        inverse_values.push_back(s.value.inverse());

    Side fwd(Permutation::identity(target.degree()));
    Side bwd(target);
    exhausted = false;

    auto assemble = [&](std::size_t fi, std::size_t bi) {
        Word w(m);
        for (auto s : fwd.path(fi))
            w = w * steps[s].word;
        auto back = bwd.path(bi);
        for (auto it = back.rbegin(); it != back.rend(); ++it)
            w = w * steps[*it].word;
        return w;
    };

    if (auto hit = bwd.index.find(fwd.elems[0]); hit != bwd.index.end())
        return Word(m);

    while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
        bool forward = fwd.elems.size() <= bwd.elems.size();
        Side& side = forward ? fwd : bwd;
        Side& other = forward ? bwd : fwd;
        std::vector<std::size_t> next;
        std::optional<Word> best;
        for (auto i : side.frontier) {
            for (std::size_t s = 0; s < steps.size(); ++s) {
                std::size_t len = side.nodes[i].length + steps[s].word.length();
                if (len > cap)
                    continue;
                Permutation y = forward ? side.elems[i] * steps[s].value
                                        : side.elems[i] * inverse_values[s];
                if (side.index.count(y))
                    continue;
                std::size_t id = side.elems.size();
                side.index.emplace(y, id);
                side.elems.push_back(y);
                side.nodes.push_back({i, s, len});
                next.push_back(id);
                if (auto hit = other.index.find(y); hit != other.index.end()) {
                    auto w = forward ? assemble(id, hit->second) : assemble(hit->second, id);
                    if (w.length() <= cap && (!best || w.length() < best->length()))
                        best = w;
                }
            }
        }
        if (best)
            return best;
        side.frontier = std::move(next);
    }
    // one side closed off: everything reachable from it was seen
    exhausted = true;
    for (const auto& n : fwd.nodes)
        if (n.length + 4 > cap)
            exhausted = false;
    for (const auto& n : bwd.nodes)
        if (n.length + 4 > cap)
            exhausted = false;
    return std::nullopt;
}

} // namespace

Word commutator_word_for(const PermGroup& g, const std::vector<Permutation>& gens,
                         const Permutation& target, std::size_t depth_cap) {
    if (!g.contains(target))
        throw PreconditionError("commutator_word_for: target is not in the group");
    if (!generates(g, gens))
        throw PreconditionError("commutator_word_for: tuple does not generate the group");
    if (derived_subgroup(g).order() != g.order())
        throw PreconditionError("commutator_word_for: group is not perfect");
    const std::size_t m = gens.size();
    if (target.is_identity())
        return Word(m);

    std::size_t conj_depth = 1;
    auto steps = commutator_steps(gens, conj_depth);
    for (std::size_t cap = std::max<std::size_t>(depth_cap, 4); cap <= kMaxDepthCap;) {
        bool exhausted = false;
        auto w = search(gens, target, steps, cap, exhausted);
        if (w) {
            if (!w->in_commutator_subgroup() || evaluate_word(*w, gens) != target)
                throw InternalError("commutator_word_for: word does not evaluate to the target");
            return *w;
        }
        if (exhausted && conj_depth < 3) {
            // the steps generate a proper subgroup; use deeper conjugates
            steps = commutator_steps(gens, ++conj_depth);
            continue;
        }
        cap *= 2;
    }
    throw SearchError("commutator_word_for: no commutator word of length <= " +
                      std::to_string(kMaxDepthCap) + " found for " + target.to_string());
}

std::vector<Permutation> gaschutz_lift(const PermGroup& g, const PermGroup& n,
                                       const std::vector<Permutation>& reps, std::uint64_t seed) {
    if (!g.contains_all(n) || !is_normal(g, n))
        throw PreconditionError("gaschutz_lift: N is not a normal subgroup of G");
    for (const auto& a : reps)
        if (!g.contains(a))
            throw PreconditionError("gaschutz_lift: coset representative outside G");
    const std::size_t k = reps.size();
    {
        PermGroup span = n;
        for (const auto& a : reps)
            span.add_generator(a);
        if (span.order() != g.order())
            throw PreconditionError("gaschutz_lift: cosets do not generate G/N");
    }
    if (generates(g, reps))
        return reps;
    if (!min_generators(g, k, seed))
        throw PreconditionError("gaschutz_lift: G is not generated by " + std::to_string(k) +
                                " elements");

    auto finish = [&](std::vector<Permutation> b) {
        for (std::size_t i = 0; i < k; ++i)
            if (!n.contains(reps[i].inverse() * b[i]))
                throw InternalError("gaschutz_lift: lifted element left its coset");
        if (!generates(g, b))
            throw InternalError("gaschutz_lift: lifted tuple does not generate");
        return b;
    };

    std::mt19937_64 rng(seed);
    const double space = std::pow(static_cast<double>(n.order()), static_cast<double>(k));
    if (space <= 1e6) {
        auto elems = n.elements();
        const std::size_t total = static_cast<std::size_t>(std::llround(space));
        std::vector<std::uint32_t> order(total);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (auto code : order) {
            std::vector<Permutation> b;
            for (std::size_t i = 0; i < k; ++i) {
                b.push_back(reps[i] * elems[code % elems.size()]);
                code /= static_cast<std::uint32_t>(elems.size());
            }
            if (generates(g, b))
                return finish(std::move(b));
        }
        throw InternalError("gaschutz_lift: exhaustive search over N^k found no generating lift");
    }
    for (int trial = 0; trial < 100'000; ++trial) {
        std::vector<Permutation> b;
        for (std::size_t i = 0; i < k; ++i)
            b.push_back(reps[i] * n.random_element(rng));
        if (generates(g, b))
            return finish(std::move(b));
    }
    throw InternalError("gaschutz_lift: random search over N^k found no generating lift");
}

} // namespace perfgrp
