#include "perfgrp/abelian.hpp"

#include "perfgrp/errors.hpp"

namespace perfgrp {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace

AbelianDecomposition::AbelianDecomposition(const PermGroup& a, std::uint64_t cap) : group_(a) {
    if (!is_abelian(a))
        throw PreconditionError("abelian decomposition of a non-abelian group");
    if (a.order() > cap)
        throw SizeError("abelian group of order " + std::to_string(a.order()) +
                        " exceeds enumeration cap");
    const auto& gens = a.reduced_generators();
    const std::size_t r = gens.size();
    if (r == 0) {
        table_.emplace(Permutation::identity(a.degree()), std::vector<std::int64_t>{});
        return;
    }

    // Enumerate A with exponent vectors over the generators; each
    // collision gives a relation.
    std::unordered_map<Permutation, std::vector<std::int64_t>, PermutationHash> exps;
    std::vector<Permutation> queue{Permutation::identity(a.degree())};
    exps.emplace(queue.front(), std::vector<std::int64_t>(r, 0));
    IntMatrix relations(0, r);
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<std::int64_t> rel(r, 0);
        rel[c] = static_cast<std::int64_t>(gens[c].order());
        relations.append_row(rel);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto x = queue[q];
        const auto xv = exps.at(x);
        for (std::size_t c = 0; c < r; ++c) {
            auto y = x * gens[c];
            auto yv = xv;
            ++yv[c];
            auto it = exps.find(y);
            if (it == exps.end()) {
                exps.emplace(y, std::move(yv));
                queue.push_back(std::move(y));
            } else {
                bool same = true;
                for (std::size_t k = 0; k < r; ++k) {
                    yv[k] -= it->second[k];
                    same = same && yv[k] == 0;
                }
                if (!same)
                    relations.append_row(yv);
            }
        }
        if (relations.rows() > 4 * r + 16)
            relations = row_hermite(relations);
    }
    relations = row_hermite(relations);

    auto f = smith_normal_form(relations);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < r; ++i) {
        std::int64_t d = i < f.rank ? f.D(i, i) : 0;
        if (d == 0)
            throw InternalError("relation lattice of a finite group is not of full rank");
        if (d > 1) {
            kept.push_back(i);
            orders_.push_back(d);
            auto b = Permutation::identity(a.degree());
            for (std::size_t c = 0; c < r; ++c)
                b *= power(gens[c], f.V_inverse(i, c));
            basis_.push_back(std::move(b));
        }
    }
    for (auto& [elem, x] : exps) {
        auto y = row_times(x, f.V);
        std::vector<std::int64_t> coords;
        for (std::size_t k = 0; k < kept.size(); ++k)
            coords.push_back(mod(y[kept[k]], orders_[k]));
        table_.emplace(elem, std::move(coords));
    }
}

std::vector<std::int64_t> AbelianDecomposition::encode(const Permutation& x) const {
    auto it = table_.find(x);
    if (it == table_.end())
        throw PreconditionError("element " + x.to_string() + " is not in the abelian group");
    return it->second;
}

std::vector<std::int64_t> AbelianDecomposition::reduce(std::span<const std::int64_t> coords) const {
    if (coords.size() != orders_.size())
        throw InputError("coordinate vector has wrong length");
    std::vector<std::int64_t> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        out[i] = mod(coords[i], orders_[i]);
    return out;
}

Permutation AbelianDecomposition::decode(std::span<const std::int64_t> coords) const {
    auto c = reduce(coords);
    auto x = Permutation::identity(group_.degree());
    for (std::size_t i = 0; i < c.size(); ++i)
        x *= power(basis_[i], c[i]);
    return x;
}

std::vector<std::int64_t> abelian_invariants(const PermGroup& a, std::uint64_t cap) {
    return AbelianDecomposition(a, cap).orders();
}

} // namespace perfgrp
