#include "perfgrp/quotient.hpp"

#include "perfgrp/errors.hpp"

#include <algorithm>
#include <map>

namespace perfgrp {

namespace {

std::vector<std::size_t> orbit_labels(const PermGroup& n, std::size_t& count) {
    std::vector<std::size_t> label(n.degree(), n.degree());
    count = 0;
    for (std::size_t p = 0; p < n.degree(); ++p) {
        if (label[p] != n.degree())
            continue;
        std::vector<std::size_t> stack{p};
        label[p] = count;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (const auto& g : n.reduced_generators()) {
                auto y = g[x];
                if (label[y] == n.degree()) {
                    label[y] = count;
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }
    return label;
}

Quotient finish(const PermGroup& g, std::size_t degree, std::vector<Permutation> images) {
    PermGroup q(degree, images);
    auto map = Homomorphism::from_images(g, q, std::move(images));
    return Quotient{std::move(q), std::move(map)};
}

} // namespace

Quotient quotient(const PermGroup& g, const PermGroup& n, std::uint64_t cap) {
    if (!is_normal(g, n))
        throw PreconditionError("quotient by a subgroup that is not normal");
    const auto& gens = g.generators();
    if (n.order() == g.order())
        return finish(g, 1, std::vector<Permutation>(gens.size(), Permutation::identity(1)));
    if (n.is_trivial())
        return finish(g, g.degree(), gens);

    // action on N-orbits
    std::size_t blocks = 0;
    auto label = orbit_labels(n, blocks);
    {
        std::vector<Permutation> images;
        for (const auto& x : gens) {
            std::vector<Point> img(blocks);
            for (std::size_t p = 0; p < g.degree(); ++p)
                img[label[p]] = static_cast<Point>(label[x[p]]);
            images.push_back(Permutation::from_images(std::move(img)));
        }
        PermGroup q(blocks, images);
        if (q.order() * n.order() == g.order())
            return finish(g, blocks, std::move(images));
    }

    // regular action on cosets; coset key is its least element
    if (g.order() / n.order() > cap)
        throw SizeError("quotient of order " + std::to_string(g.order() / n.order()) +
                        " exceeds enumeration cap");
    auto n_elems = n.elements(cap);
    auto key = [&](const Permutation& x) {
        Permutation best = x * n_elems.front();
        for (const auto& m : n_elems)
            best = std::min(best, x * m);
        return best;
    };
    std::map<Permutation, std::size_t> index;
    std::vector<Permutation> reps{Permutation::identity(g.degree())};
    index.emplace(key(reps.front()), 0);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& s : g.reduced_generators()) {
            auto y = reps[i] * s;
            auto k = key(y);
            if (!index.count(k)) {
                index.emplace(std::move(k), reps.size());
                reps.push_back(std::move(y));
            }
        }
    std::vector<Permutation> images;
    for (const auto& x : gens) {
        std::vector<Point> img(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            img[i] = static_cast<Point>(index.at(key(reps[i] * x)));
        images.push_back(Permutation::from_images(std::move(img)));
    }
    return finish(g, reps.size(), std::move(images));
}

} // namespace perfgrp
