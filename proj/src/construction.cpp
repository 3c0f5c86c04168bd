#include "perfgrp/construction.hpp"

#include "perfgrp/covering.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/gmodule.hpp"
#include "perfgrp/quotient.hpp"
#include "perfgrp/structure.hpp"
#include "perfgrp/words_lifting.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace perfgrp {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::size_t k, std::size_t tag, std::size_t j = 0) {
    return mix(mix(mix(seed) ^ k) ^ (tag << 16 | j));
}

void check(bool ok, const std::string& what) {
    if (!ok)
        throw InternalError("construct: " + what);
}

PermGroup close_under_conjugation(PermGroup h, const std::vector<Permutation>& actors) {
    for (bool grew = true; grew;) {
        grew = false;
        auto gens = h.reduced_generators();
        for (const auto& x : gens)
            for (const auto& a : actors)
                grew = h.add_generator(conjugate(x, a)) || grew;
    }
    return h;
}

std::vector<Permutation> small_generating_tuple(const PermGroup& g, std::size_t d,
                                                std::uint64_t seed) {
    std::vector<Permutation> out;
    if (!g.is_trivial()) {
        std::mt19937_64 rng(seed);
        for (std::size_t t = 1; t <= 8 && out.empty(); ++t)
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<Permutation> tuple;
                for (std::size_t i = 0; i < t; ++i)
                    tuple.push_back(g.random_element(rng));
                if (generates(g, tuple)) {
                    out = std::move(tuple);
                    break;
                }
            }
        if (out.empty())
            out = g.reduced_generators();
    }
    // pad by repeating the last generator
    const auto fill = out.empty() ? Permutation::identity(g.degree()) : out.back();
    while (out.size() < d)
        out.push_back(fill);
    return out;
}

std::pair<Permutation, Permutation> split_residue(const Permutation& x,
                                                  const std::vector<Permutation>& a_elems,
                                                  const PermGroup& s) {
    for (const auto& k : a_elems) {
        auto rest = k.inverse() * x;
        if (s.contains(rest))
            return {k, rest};
    }
    throw InternalError("construct: residue is not in A x S");
}

struct LevelOutcome {
    ProductContext context;
    PermGroup gamma;
    std::vector<Permutation> marked;
};

class LevelBuilder {
public:
    LevelBuilder(std::size_t d, const ConstructOptions& opt, std::vector<LevelRecord>& out)
        : d_(d), opt_(opt), out_(out) {}

    LevelOutcome build(const std::vector<PermGroup>& groups, const std::vector<std::string>& names,
                       std::size_t k);

private:
    void align(std::size_t k, std::size_t j, const PermGroup& g, const LevelSplit& split,
               const std::vector<Word>& words, FactorRecord& rec);

    std::size_t d_;
    ConstructOptions opt_;
    std::vector<LevelRecord>& out_;
};

void LevelBuilder::align(std::size_t k, std::size_t j, const PermGroup& g, const LevelSplit& split,
                         const std::vector<Word>& words, FactorRecord& rec) {
    const std::size_t m = words.size();
    const auto a_elems = split.A.elements(opt_.cap);
    auto residues = [&] {
        rec.k.assign(m, Permutation::identity(g.degree()));
        rec.s.assign(m, Permutation::identity(g.degree()));
        for (std::size_t i = 0; i < m; ++i) {
            auto x = rec.a[i] * evaluate_word(words[i], rec.a).inverse();
            check(split.W.contains(x), "residue outside W");
            std::tie(rec.k[i], rec.s[i]) = split_residue(x, a_elems, split.S);
        }
    };
    residues();
    for (std::size_t i = 0; i < m; ++i)
        rec.a[i] = rec.a[i] * rec.k[i].inverse();
    residues();
    for (std::size_t i = 0; i < m; ++i)
        check(split.B.contains(rec.k[i]), "adjusted residue outside B");
    if (!generates(g, rec.a)) {
        rec.a = gaschutz_lift(g, join(split.B, split.S), rec.a, sub_seed(opt_.seed, k, 1, j));
        residues();
        for (std::size_t i = 0; i < m; ++i)
            check(split.B.contains(rec.k[i]), "lifted residue outside B");
    }
}

LevelOutcome LevelBuilder::build(const std::vector<PermGroup>& groups,
                                 const std::vector<std::string>& names, std::size_t k) {
    LevelRecord rec;
    rec.k = k;
    for (std::size_t j = 0; j < groups.size(); ++j)
        rec.groups.push_back({names[j], groups[j].degree(), groups[j].generators()});
    ProductContext ctx = groups.empty() ? ProductContext() : ProductContext(groups);

    if (k == 0 || groups.empty()) {
        for (const auto& g : groups)
            if (!g.is_trivial())
                throw PreconditionError("construct: nontrivial group at level 0");
        rec.marked.assign(d_, ctx.identity());
        out_.push_back(rec);
        return {ctx, PermGroup::trivial(ctx.degree()), rec.marked};
    }

    const std::size_t n = groups.size();
    std::vector<LevelSplit> splits;
    std::vector<Quotient> quotients;
    std::vector<PermGroup> qgroups;
    std::vector<std::string> qnames;
    for (std::size_t j = 0; j < n; ++j) {
        splits.push_back(split_level(groups[j], k, opt_.cap));
        quotients.push_back(quotient(groups[j], splits[j].W, opt_.cap));
        qgroups.push_back(quotients[j].group);
        qnames.push_back(names[j] + "/W");
    }
    auto sub = build(qgroups, qnames, k - 1);
    const std::size_t m = sub.marked.size();

    for (std::size_t i = 0; i < m; ++i)
        rec.words.push_back(commutator_word_for(sub.gamma, sub.marked, sub.marked[i]));

    // lifts and residues
    rec.factors.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto& f = rec.factors[j];
        const auto& split = splits[j];
        f.W = split.W.reduced_generators();
        f.A = split.A.reduced_generators();
        f.S = split.S.reduced_generators();
        f.B = split.B.reduced_generators();
        f.quotient_images = quotients[j].map.images();
        for (std::size_t i = 0; i < m; ++i)
            f.a.push_back(quotients[j].map.preimage(sub.context.project(sub.marked[i], j)));
        align(k, j, groups[j], split, rec.words, f);
    }

    std::vector<Permutation> delta;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Permutation> parts;
        for (const auto& f : rec.factors)
            parts.push_back(f.a[i]);
        delta.push_back(ctx.combine(parts));
    }
    auto bold = [&](auto pick) {
        std::vector<Permutation> parts;
        for (std::size_t j = 0; j < n; ++j)
            parts.push_back(pick(j));
        return ctx.combine(parts);
    };

    // Q
    std::vector<std::vector<std::vector<Permutation>>> q(n); // q[j][i][l]
    for (std::size_t j = 0; j < n; ++j) {
        auto& f = rec.factors[j];
        const auto id = Permutation::identity(groups[j].degree());
        f.q.assign(m, std::vector<std::vector<std::int64_t>>(m));
        q[j].assign(m, std::vector<Permutation>(m, id));
        if (splits[j].A.is_trivial())
            continue;
        GModule module(groups[j], splits[j].A, f.a, opt_.cap);
        f.A_basis = module.coordinates().basis();
        f.A_orders = module.orders();
        for (std::size_t i = 0; i < m; ++i) {
            q[j][i] = solve_commutator_decomposition(module, f.k[i]);
            for (std::size_t l = 0; l < m; ++l)
                f.q[i][l] = module.encode(q[j][i][l]);
        }
    }
    std::vector<Permutation> q_seeds;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l) {
            auto ql = bold([&](std::size_t j) { return q[j][i][l]; });
            for (const auto& at : delta)
                q_seeds.push_back(commutator(ql, at));
        }
    auto q_group = close_under_conjugation(PermGroup(ctx.degree(), q_seeds), delta);
    std::vector<Permutation> qd_seeds;
    for (const auto& x : q_group.reduced_generators())
        for (const auto& at : delta)
            qd_seeds.push_back(commutator(x, at));
    auto qd = close_under_conjugation(PermGroup(ctx.degree(), qd_seeds), delta);
    check(qd.order() == q_group.order(), "Q != [Q,Delta]");
    for (std::size_t i = 0; i < m; ++i)
        check(q_group.contains(bold([&](std::size_t j) { return rec.factors[j].k[i]; })),
              "k_i not in Q");

    // T
    std::vector<PermGroup> simple;
    for (std::size_t j = 0; j < n; ++j)
        for (auto& mi : simple_direct_factors(splits[j].S, opt_.cap)) {
            rec.cover.owners.push_back(j);
            rec.cover.factor_generators.push_back(mi.reduced_generators());
            simple.push_back(std::move(mi));
        }
    std::vector<Permutation> t_gens;
    if (!simple.empty()) {
        auto cover = semisimple_cover(simple, opt_.budget, sub_seed(opt_.seed, k, 2));
        rec.cover.tuples = cover.tuples;
        const std::size_t g = cover.size();
        std::size_t e = 1;
        for (std::size_t i = 0; i < simple.size(); ++i)
            e = std::max(e, class_product_covering_number(simple[i], cover.tuples[i]));
        rec.cover.e = e;

        auto owned_product = [&](std::size_t j, auto pick) {
            Permutation x = Permutation::identity(groups[j].degree());
            for (std::size_t i = 0; i < simple.size(); ++i)
                if (rec.cover.owners[i] == j)
                    x = x * pick(i);
            return x;
        };
        std::vector<Permutation> cover_gens;
        for (std::size_t c = 0; c < g; ++c)
            cover_gens.push_back(bold([&](std::size_t j) {
                return owned_product(j, [&](std::size_t i) { return cover.tuples[i][c]; });
            }));

        // component of s in M_i: the x in M_i with x^-1 s in the other factors
        auto component = [&](std::size_t i, const Permutation& s) {
            PermGroup rest = PermGroup::trivial(s.degree());
            std::size_t others = 0;
            for (std::size_t i2 = 0; i2 < simple.size(); ++i2)
                if (i2 != i && rec.cover.owners[i2] == rec.cover.owners[i]) {
                    rest = join(rest, simple[i2]);
                    ++others;
                }
            if (others == 0)
                return s;
            for (const auto& x : simple[i].elements(opt_.cap))
                if (rest.contains(x.inverse() * s))
                    return x;
            throw InternalError("construct: semisimple residue has no component");
        };

        std::set<Permutation> unique_t;
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<std::vector<std::vector<Permutation>>> r(simple.size()); // r[i][t][c]
            for (std::size_t i = 0; i < simple.size(); ++i) {
                const auto j = rec.cover.owners[i];
                r[i] = decompose_conjugate_product(simple[i], component(i, rec.factors[j].s[l]),
                                                   cover.tuples[i], e);
            }
            for (std::size_t t = 0; t < e; ++t)
                for (std::size_t c = 0; c < g; ++c) {
                    auto rr = bold([&](std::size_t j) {
                        return owned_product(j, [&](std::size_t i) { return r[i][t][c]; });
                    });
                    rec.cover.conjugators.push_back({l, c, t, rr});
                    for (const auto& mg : cover_gens)
                        unique_t.insert(conjugate(mg, rr));
                }
        }
        t_gens.assign(unique_t.begin(), unique_t.end());

        PermGroup t_group(ctx.degree(), t_gens);
        check(derived_subgroup(t_group).order() == t_group.order(), "T is not perfect");
        for (std::size_t l = 0; l < m; ++l) {
            Permutation prod = ctx.identity();
            for (const auto& cj : rec.cover.conjugators)
                if (cj.l == l)
                    prod = prod * conjugate(cover_gens[cj.j], cj.r);
            check(prod == bold([&](std::size_t j) { return rec.factors[j].s[l]; }), "s_l not in T");
        }
    } else {
        for (const auto& f : rec.factors)
            for (const auto& s : f.s)
                check(s.is_identity(), "semisimple residue without simple factors");
    }

    // Gamma
    std::vector<Permutation> gamma_gens = delta;
    gamma_gens.insert(gamma_gens.end(), q_group.reduced_generators().begin(),
                      q_group.reduced_generators().end());
    gamma_gens.insert(gamma_gens.end(), t_gens.begin(), t_gens.end());
    PermGroup gamma(ctx.degree(), gamma_gens);
    check(derived_subgroup(gamma).order() == gamma.order(), "Gamma is not perfect");
    for (std::size_t j = 0; j < n; ++j)
        check(ctx.projection(gamma, j).order() == groups[j].order(), "projection not surjective");

    rec.marked = small_generating_tuple(gamma, d_, sub_seed(opt_.seed, k, 3));
    rec.gamma_order = gamma.order();
    out_.push_back(rec);
    return {ctx, gamma, rec.marked};
}

} // namespace

LevelSplit split_level(const PermGroup& g, std::size_t k, std::uint64_t cap) {
    if (k == 0)
        throw PreconditionError("split_level: k must be positive");
    PermGroup w = g;
    for (std::size_t i = 0; i + 1 < k && !w.is_trivial(); ++i)
        w = star_subgroup(w, cap);
    auto split = split_star_trivial(w, cap);
    auto b = commutator_subgroup(g, split.abelian, g);
    return {w, split.abelian, split.semisimple, b};
}

ConstructionResult construct(const std::vector<PermGroup>& family, std::size_t d, std::size_t k,
                             const ConstructOptions& options, std::vector<std::string> names) {
    names.resize(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (names[j].empty())
            names[j] = "G" + std::to_string(j + 1);
        auto y = is_in_Y(family[j], d, k, options.seed, options.cap);
        if (!y)
            throw PreconditionError("construct: " + names[j] + " is not in Y(" + std::to_string(d) +
                                    "," + std::to_string(k) + "): " + y.reason);
    }
    ConstructionResult result;
    auto& cert = result.certificate;
    cert.seed = options.seed;
    cert.budget = options.budget;
    cert.d = d;
    cert.k = k;
    LevelBuilder builder(d, options, cert.levels);
    auto top = builder.build(family, names, k);
    std::reverse(cert.levels.begin(), cert.levels.end());
    result.context = top.context;
    result.gamma = top.gamma;
    return result;
}

} // namespace perfgrp
