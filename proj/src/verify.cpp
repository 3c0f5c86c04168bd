#include "perfgrp/verify.hpp"

#include "perfgrp/homomorphism.hpp"
#include "perfgrp/product.hpp"

#include <map>
#include <optional>

namespace perfgrp {

namespace {

struct StepFailure {
    std::string name;
    std::string detail;
};

class Checker {
public:
    Checker(VerificationReport& report, std::size_t level) : report_(report), level_(level) {}

    void operator()(const std::string& name, bool ok, const std::string& detail = {}) {
        if (!ok)
            throw StepFailure{name, detail};
        if (report_.steps.empty() || report_.steps.back().name != name ||
            report_.steps.back().level != level_)
            report_.steps.push_back({level_, name, true, {}});
    }

private:
    VerificationReport& report_;
    std::size_t level_;
};

PermGroup group_of(const GroupRecord& g) { return PermGroup(g.degree, g.generators); }

// Smallest subgroup containing h that is normalized by the actors.
PermGroup conjugation_closure(PermGroup h, const std::vector<Permutation>& actors) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> gens = h.generators();
        for (const auto& x : gens)
            for (const auto& a : actors)
                if (h.add_generator(conjugate(x, a)))
                    grew = true;
    }
    return h;
}

Permutation decode(const std::vector<Permutation>& basis, const std::vector<std::int64_t>& orders,
                   const std::vector<std::int64_t>& y, std::size_t degree) {
    Permutation out = Permutation::identity(degree);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        auto e = ((y[r] % orders[r]) + orders[r]) % orders[r];
        out = out * power(basis[r], e);
    }
    return out;
}

void verify_base(const Certificate& cert, const LevelRecord& lvl, Checker& step) {
    for (const auto& g : lvl.groups)
        step("base", group_of(g).is_trivial(), "nontrivial group at the base level");
    step("base", lvl.gamma_order == 1 && lvl.words.empty() && lvl.cover.conjugators.empty(),
         "base level carries construction data");
    step("marked generators", lvl.marked.size() >= cert.d, "fewer than d marked generators");
    for (const auto& x : lvl.marked)
        step("marked generators", x.is_identity(), "nontrivial marked generator at the base");
}

void verify_level(const Certificate& cert, const LevelRecord& lvl, const LevelRecord& next,
                  Checker& step, std::uint64_t cap) {
    const std::size_t n = lvl.groups.size();
    std::vector<PermGroup> groups;
    for (const auto& g : lvl.groups)
        groups.push_back(group_of(g));
    ProductContext ctx(groups);
    std::vector<PermGroup> next_groups;
    for (const auto& g : next.groups)
        next_groups.push_back(group_of(g));
    step("quotient maps", next_groups.size() == n && lvl.factors.size() == n,
         "quotient family has the wrong length");
    ProductContext next_ctx(next_groups);
    const std::size_t m = next.marked.size();

    // quotient maps with kernel W
    std::vector<std::optional<Homomorphism>> maps(n);
    std::vector<PermGroup> W, A, S, B;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& f = lvl.factors[j];
        W.emplace_back(groups[j].degree(), f.W);
        A.emplace_back(groups[j].degree(), f.A);
        S.emplace_back(groups[j].degree(), f.S);
        B.emplace_back(groups[j].degree(), f.B);
        try {
            maps[j] = Homomorphism::from_images(groups[j], next_groups[j], f.quotient_images);
        } catch (const std::exception& e) {
            step("quotient maps", false, e.what());
        }
        step("quotient maps", maps[j]->surjective(), "quotient map is not onto");
        step("quotient maps", groups[j].contains_all(W[j]) && is_normal(groups[j], W[j]),
             "W is not normal");
        for (const auto& w : f.W)
            step("quotient maps", maps[j]->apply(w).is_identity(), "W not in the kernel");
        step("quotient maps", groups[j].order() == W[j].order() * next_groups[j].order(),
             "kernel is larger than W");
    }

    step("w_i in [F,F]", lvl.words.size() == m, "wrong number of words");
    for (std::size_t i = 0; i < m; ++i)
        step("w_i in [F,F]", lvl.words[i].in_commutator_subgroup(),
             "w_" + std::to_string(i + 1) + " = " + lvl.words[i].to_string() +
                 " has nonzero exponent sum");
    for (std::size_t i = 0; i < m; ++i)
        step("w_i evaluation", evaluate_word(lvl.words[i], next.marked) == next.marked[i],
             "w_" + std::to_string(i + 1) + " does not evaluate to g_" + std::to_string(i + 1));

    for (std::size_t j = 0; j < n; ++j) {
        const auto& f = lvl.factors[j];
        step("lift images", f.a.size() == m && f.k.size() == m && f.s.size() == m,
             "wrong number of lifts");
        for (std::size_t i = 0; i < m; ++i)
            step("lift images",
                 groups[j].contains(f.a[i]) &&
                     maps[j]->apply(f.a[i]) == next_ctx.project(next.marked[i], j),
                 "a_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     "} does not lift g_" + std::to_string(i + 1));
        step("a_i generate G_j", PermGroup(groups[j].degree(), f.a).order() == groups[j].order(),
             "lifts do not generate factor " + std::to_string(j + 1));
    }

    for (std::size_t j = 0; j < n; ++j) {
        const auto& f = lvl.factors[j];
        step("equation (1)", W[j].contains_all(A[j]) && W[j].contains_all(S[j]) && is_abelian(A[j]),
             "A or S not in W, or A not abelian");
        step("equation (1)", A[j].order() * S[j].order() == W[j].order() &&
                                 join(A[j], S[j]).order() == W[j].order(),
             "W is not A x S");
        step("equation (1)", B[j].same_group(commutator_subgroup(groups[j], A[j], groups[j])),
             "B != [A,G]");
        for (std::size_t i = 0; i < m; ++i) {
            auto residue = f.a[i] * evaluate_word(lvl.words[i], f.a).inverse();
            step("equation (1)",
                 residue == f.k[i] * f.s[i] && B[j].contains(f.k[i]) && S[j].contains(f.s[i]),
                 "a w(a)^-1 != k s at i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1));
        }
    }

    std::vector<Permutation> delta;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Permutation> parts;
        for (const auto& f : lvl.factors)
            parts.push_back(f.a[i]);
        delta.push_back(ctx.combine(parts));
    }

    // q witnesses: q[j][i][l]
    std::vector<std::vector<std::vector<Permutation>>> q(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& f = lvl.factors[j];
        const std::size_t deg = groups[j].degree();
        step("k_i decomposition", f.A_basis.size() == f.A_orders.size() && f.q.size() == m,
             "malformed q coordinates");
        std::uint64_t prod = 1;
        for (std::size_t r = 0; r < f.A_basis.size(); ++r) {
            step("k_i decomposition",
                 f.A_orders[r] > 0 && A[j].contains(f.A_basis[r]) &&
                     f.A_basis[r].order() == static_cast<std::uint64_t>(f.A_orders[r]),
                 "A basis element has the wrong order");
            prod *= static_cast<std::uint64_t>(f.A_orders[r]);
        }
        step("k_i decomposition", prod == A[j].order(), "A basis orders do not multiply to |A|");
        q[j].resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            step("k_i decomposition", f.q[i].size() == m, "malformed q coordinates");
            Permutation k = Permutation::identity(deg);
            for (std::size_t l = 0; l < m; ++l) {
                step("k_i decomposition", f.q[i][l].size() == f.A_basis.size(),
                     "q coordinate vector has the wrong length");
                q[j][i].push_back(decode(f.A_basis, f.A_orders, f.q[i][l], deg));
                k = k * commutator(q[j][i][l], f.a[l]);
            }
            step("k_i decomposition", k == f.k[i],
                 "k_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     "} != prod_l [q_l, a_l]");
        }
    }
    std::vector<Permutation> q_seeds;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<Permutation> parts;
            for (std::size_t j = 0; j < n; ++j)
                parts.push_back(q[j][i][l]);
            auto ql = ctx.combine(parts);
            for (const auto& at : delta)
                q_seeds.push_back(commutator(ql, at));
        }
    auto Q = conjugation_closure(PermGroup(ctx.degree(), q_seeds), delta);
    std::vector<Permutation> qd_seeds;
    for (const auto& x : Q.generators())
        for (const auto& at : delta)
            qd_seeds.push_back(commutator(x, at));
    auto QD = conjugation_closure(PermGroup(ctx.degree(), qd_seeds), delta);
    step("Q = [Q,Delta]", Q.contains_all(QD) && QD.order() == Q.order(), "Q != [Q,Delta]");
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Permutation> parts;
        for (const auto& f : lvl.factors)
            parts.push_back(f.k[i]);
        step("k_i in Q", Q.contains(ctx.combine(parts)), "k_" + std::to_string(i + 1) + " not in Q");
    }

    // cover
    const auto& cover = lvl.cover;
    const std::size_t nf = cover.factor_generators.size();
    step("cover", cover.owners.size() == nf && cover.tuples.size() == nf, "malformed cover");
    const std::size_t g = nf ? cover.tuples[0].size() : 0;
    step("cover", g <= cert.budget, "more cover generators than the budget");
    std::vector<std::uint64_t> covered(n, 1);
    for (std::size_t i = 0; i < nf; ++i) {
        const auto j = cover.owners[i];
        PermGroup mi(groups[j].degree(), cover.factor_generators[i]);
        step("cover", S[j].contains_all(mi) && is_normal(S[j], mi), "M_i is not normal in S");
        step("cover", cover.tuples[i].size() == g, "cover tuples have different lengths");
        step("cover", PermGroup(mi.degree(), cover.tuples[i]).order() == mi.order() &&
                          mi.contains_all(PermGroup(mi.degree(), cover.tuples[i])),
             "cover tuple does not generate M_i");
        covered[j] *= mi.order();
    }
    for (std::size_t j = 0; j < n; ++j)
        step("cover", covered[j] == S[j].order(), "simple factors do not fill S");

    std::vector<Permutation> cover_gens;
    for (std::size_t c = 0; c < g; ++c) {
        std::vector<Permutation> parts;
        for (std::size_t j = 0; j < n; ++j)
            parts.push_back(Permutation::identity(groups[j].degree()));
        for (std::size_t i = 0; i < nf; ++i)
            parts[cover.owners[i]] = parts[cover.owners[i]] * cover.tuples[i][c];
        cover_gens.push_back(ctx.combine(parts));
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Permutation> r;
    for (const auto& cj : cover.conjugators) {
        step("s_l in T", cj.l < m && cj.j < g && cj.t < cover.e, "conjugator index out of range");
        step("s_l in T", r.emplace(std::tuple{cj.l, cj.t, cj.j}, cj.r).second,
             "duplicate conjugator entry");
    }
    std::vector<Permutation> t_gens;
    for (std::size_t l = 0; l < m; ++l) {
        std::vector<Permutation> parts;
        for (const auto& f : lvl.factors)
            parts.push_back(f.s[l]);
        const auto s_l = ctx.combine(parts);
        if (g == 0) {
            step("s_l in T", s_l.is_identity(), "nontrivial s_l without a cover");
            continue;
        }
        Permutation prod = ctx.identity();
        for (std::size_t t = 0; t < cover.e; ++t)
            for (std::size_t c = 0; c < g; ++c) {
                auto it = r.find({l, t, c});
                step("s_l in T", it != r.end(),
                     "missing conjugator r_{" + std::to_string(l + 1) + "," + std::to_string(c + 1) +
                         "," + std::to_string(t + 1) + "}");
                prod = prod * conjugate(cover_gens[c], it->second);
            }
        step("s_l in T", prod == s_l, "s_" + std::to_string(l + 1) + " != product of conjugates");
    }
    for (const auto& [key, rr] : r)
        for (const auto& mg : cover_gens)
            t_gens.push_back(conjugate(mg, rr));
    PermGroup T(ctx.degree(), t_gens);
    step("T perfect", derived_subgroup(T).order() == T.order(), "T is not perfect");

    std::vector<Permutation> gamma_gens = delta;
    gamma_gens.insert(gamma_gens.end(), Q.generators().begin(), Q.generators().end());
    gamma_gens.insert(gamma_gens.end(), t_gens.begin(), t_gens.end());
    PermGroup gamma(ctx.degree(), gamma_gens);
    step("Gamma perfect", derived_subgroup(gamma).order() == gamma.order(), "[Gamma,Gamma] != Gamma");
    step("Gamma perfect", gamma.order() == lvl.gamma_order, "recorded order of Gamma is wrong");
    for (std::size_t j = 0; j < n; ++j)
        step("projections surjective", ctx.projection(gamma, j).order() == groups[j].order(),
             "projection onto factor " + std::to_string(j + 1) + " is not onto");

    step("marked generators", lvl.marked.size() >= cert.d, "fewer than d marked generators");
    step("marked generators", PermGroup(ctx.degree(), lvl.marked).order() == gamma.order() &&
                                  gamma.contains_all(PermGroup(ctx.degree(), lvl.marked)),
         "marked generators do not generate Gamma");
    (void)cap;
}

} // namespace

VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& options) {
    VerificationReport report;
    std::size_t level = cert.k;
    try {
        Checker top(report, cert.k);
        top("format", cert.format == kCertificateFormat, "unknown certificate format");
        top("version", options.force || cert.version == kCertificateVersion,
            "certificate version " + cert.version + " differs from " + kCertificateVersion +
                " (use --force to re-check anyway)");
        const auto& levels = cert.levels;
        top("format", !levels.empty() && levels.front().k == cert.k, "missing top level");
        for (std::size_t i = 0; i < levels.size(); ++i)
            top("format", levels[i].k + i == cert.k, "levels are not consecutive");
        top("format", levels.back().factors.empty() &&
                          (levels.back().k == 0 || levels.back().groups.empty()),
            "recursion does not end at a trivial base");
        for (std::size_t i = levels.size(); i-- > 0;) {
            level = levels[i].k;
            Checker step(report, level);
            if (i + 1 == levels.size())
                verify_base(cert, levels[i], step);
            else
                verify_level(cert, levels[i], levels[i + 1], step, options.cap);
        }
        report.valid = true;
    } catch (const StepFailure& f) {
        report.failed_step = f.name;
        report.message = "level " + std::to_string(level) + ": " + f.detail;
        report.steps.push_back({level, f.name, false, f.detail});
    } catch (const std::exception& e) {
        report.failed_step = "internal";
        report.message = "level " + std::to_string(level) + ": " + e.what();
        report.steps.push_back({level, "internal", false, e.what()});
    }
    return report;
}

} // namespace perfgrp
