#include "doctest.h"

#include "module_pairs.hpp"
#include "oracles.hpp"

#include "perfgrp/catalog.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/gmodule.hpp"

#include <random>

using namespace perfgrp;

namespace {

Permutation p(std::size_t n, const char* s) { return Permutation::parse(n, s); }

// Span of {[m,g] : m in A, g in G}, by closure.
std::set<oracle::Raw> commutator_span(const PermGroup& g, const PermGroup& a) {
    std::vector<oracle::Raw> comms;
    for (const auto& m : a.elements())
        for (const auto& x : g.elements())
            comms.push_back(oracle::raw(commutator(m, x)));
    return oracle::closure(g.degree(), comms);
}

std::set<oracle::Raw> elements_of(const Submodule& v) {
    auto gens = v.generator_elements();
    return oracle::closure(v.module().carrier().degree(), gens);
}

// A generating set of g different from its stored generators.
std::vector<Permutation> other_generating_set(const PermGroup& g, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Permutation> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(g.random_element(rng));
        if (generates(g, gens))
            return gens;
    }
}

} // namespace

TEST_CASE("module of V4 under A4") {
    auto a4 = catalog_group("A4");
    auto v4 = PermGroup(4, {p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")});
    GModule m(a4, v4, {p(4, "(1 2 3)"), p(4, "(1 2)(3 4)")});
    CHECK(m.rank() == 2);
    CHECK(m.orders() == std::vector<std::int64_t>{2, 2});
    for (const auto& x : v4.elements())
        CHECK(m.decode(m.encode(x)) == x);
    // action matrices agree with conjugation
    for (std::size_t l = 0; l < m.acting().size(); ++l)
        for (const auto& x : v4.elements()) {
            auto y = row_times(m.encode(x), m.action(l));
            CHECK(m.decode(y) == conjugate(x, m.acting()[l]));
        }

    CHECK(augmentation_submodule(m, m.acting()).order() == 4);
    CHECK(submodule_generated(m, {p(4, "(1 2)(3 4)")}, false).order() == 4);
    CHECK(submodule_generated(m, {}, false).order() == 1);
    CHECK(is_perfect_module(augmentation_submodule(m, m.acting()), m.acting()));
    CHECK(is_perfect_module(submodule_generated(m, {}, false), m.acting()));

    auto q = solve_commutator_decomposition(m, p(4, "(1 3)(2 4)"));
    REQUIRE(q.size() == 2);
    CHECK(q[0] == p(4, "(1 2)(3 4)"));
    CHECK(commutator(q[0], m.acting()[0]) * commutator(q[1], m.acting()[1]) == p(4, "(1 3)(2 4)"));

    auto none = solve_commutator_decomposition(m, Permutation::identity(4));
    for (const auto& x : none)
        CHECK(x.is_identity());
}

TEST_CASE("trivial action gives identity matrices and zero augmentation") {
    auto z4 = catalog_group("Z4");
    GModule m(z4, z4, z4.generators());
    CHECK(m.action(0) == IntMatrix::identity(m.rank()));
    CHECK(augmentation_submodule(m, m.acting()).order() == 1);
    CHECK_THROWS_AS(solve_commutator_decomposition(m, p(4, "(1 2 3 4)")), PreconditionError);
}

TEST_CASE("module construction checks its inputs") {
    auto a4 = catalog_group("A4");
    CHECK_THROWS_AS(GModule(a4, a4, a4.generators()), PreconditionError);
    auto s4 = PermGroup(4, {p(4, "(1 2)"), p(4, "(1 2 3 4)")});
    CHECK_THROWS_AS(GModule(s4, PermGroup(4, {p(4, "(1 2)")}), s4.generators()), PreconditionError);
    auto v4 = PermGroup(4, {p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")});
    CHECK_THROWS_AS(GModule(a4, v4, {p(4, "(1 2)")}), PreconditionError);
}

TEST_CASE("2^4 under 2^4:A5") {
    auto g = catalog_group("2^4:A5");
    auto base = normal_closure(g, {g.generators()[0]});
    REQUIRE(base.order() == 16);
    GModule m(g, base, g.generators());
    CHECK(m.rank() == 4);
    CHECK(m.orders() == std::vector<std::int64_t>{2, 2, 2, 2});
    for (std::size_t l = 0; l < m.acting().size(); ++l)
        for (const auto& x : base.elements())
            CHECK(m.decode(row_times(m.encode(x), m.action(l))) == conjugate(x, m.acting()[l]));

    auto aug = augmentation_submodule(m, m.acting());
    CHECK(aug.order() == 16);
    CHECK(is_perfect_module(aug, m.acting()));
    for (const auto& x : base.elements())
        if (!x.is_identity())
            CHECK(submodule_generated(m, {x}, false).order() == 16);

    // SNF solutions against exhaustive search over (2^4)^1 for one acting element
    std::mt19937_64 rng(7);
    auto elems = base.elements();
    for (int trial = 0; trial < 20; ++trial) {
        auto target = elems[rng() % elems.size()];
        auto q = solve_commutator_decomposition(m, target);
        REQUIRE(q.size() == m.acting().size());
        Permutation prod = Permutation::identity(g.degree());
        for (std::size_t l = 0; l < q.size(); ++l) {
            CHECK(base.contains(q[l]));
            prod = prod * commutator(q[l], m.acting()[l]);
        }
        CHECK(prod == target);
    }
}

TEST_CASE("augmentation is independent of the generating set") {
    std::mt19937_64 rng(2024);
    auto pairs = catalog_module_pairs();
    CHECK(pairs.size() >= 5);
    for (const auto& [name, g, a] : pairs) {
        CAPTURE(name);
        CAPTURE(a.order());
        GModule m(g, a, g.generators());
        auto first = augmentation_submodule(m, g.generators());
        auto second = augmentation_submodule(m, other_generating_set(g, rng));
        CHECK(first == second);
        CHECK(elements_of(first) == commutator_span(g, a));
        for (const auto& x : a.elements())
            CHECK(m.decode(m.encode(x)) == x);
    }
}

TEST_CASE("submodules generated by augmented elements") {
    std::mt19937_64 rng(11);
    for (const auto& [name, g, a] : catalog_module_pairs()) {
        CAPTURE(name);
        GModule m(g, a, g.generators());
        auto elems = a.elements();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Permutation> chosen;
            for (int i = 0; i < 2; ++i)
                chosen.push_back(elems[rng() % elems.size()]);
            auto direct = submodule_generated(m, chosen, true);
            auto via = augmentation_of(submodule_generated(m, chosen, false), g.generators());
            CHECK(direct == via);
        }
    }
}

TEST_CASE("augmentation is perfect under a perfect acting group") {
    int perfect_pairs = 0;
    for (const auto& [name, g, a] : catalog_module_pairs()) {
        if (derived_subgroup(g).order() != g.order())
            continue;
        ++perfect_pairs;
        CAPTURE(name);
        GModule m(g, a, g.generators());
        CHECK(is_perfect_module(augmentation_submodule(m, g.generators()), g.generators()));
    }
    CHECK(perfect_pairs >= 2);
}

TEST_CASE("commutator decompositions verify on all pairs") {
    std::mt19937_64 rng(5);
    for (const auto& [name, g, a] : catalog_module_pairs()) {
        CAPTURE(name);
        GModule m(g, a, g.generators());
        auto aug = augmentation_submodule(m, g.generators());
        for (const auto& x : a.elements()) {
            if (!aug.contains(x)) {
                CHECK_THROWS_AS(solve_commutator_decomposition(m, x), PreconditionError);
                continue;
            }
            auto q = solve_commutator_decomposition(m, x);
            Permutation prod = Permutation::identity(g.degree());
            for (std::size_t l = 0; l < q.size(); ++l)
                prod = prod * commutator(q[l], g.generators()[l]);
            CHECK(prod == x);
        }
    }
}
