#include "doctest.h"

#include "perfgrp/catalog.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/structure.hpp"
#include "perfgrp/words_lifting.hpp"

#include <random>

using namespace perfgrp;

namespace {

Permutation p(std::size_t n, const char* s) { return Permutation::parse(n, s); }

} // namespace

TEST_CASE("commutator words in A5") {
    auto a5 = catalog_group("A5");
    std::vector<Permutation> gens{p(5, "(1 2 3 4 5)"), p(5, "(1 2 3)")};
    CHECK(commutator_word_for(a5, gens, Permutation::identity(5)).empty());

    auto w = commutator_word_for(a5, gens, p(5, "(1 2 3)"));
    CHECK(w.in_commutator_subgroup());
    CHECK(w.length() <= 24);
    CHECK(evaluate_word(w, gens) == p(5, "(1 2 3)"));

    for (const auto& x : a5.elements()) {
        auto v = commutator_word_for(a5, gens, x);
        CHECK(v.in_commutator_subgroup());
        CHECK(evaluate_word(v, gens) == x);
    }
}

TEST_CASE("commutator words in larger perfect groups") {
    std::mt19937_64 rng(3);
    for (const char* name : {"SL25", "PSL27", "2^4:A5", "A5xA5", "A6"}) {
        CAPTURE(name);
        auto g = catalog_group(name);
        const auto& gens = g.generators();
        for (int trial = 0; trial < 10; ++trial) {
            auto x = g.random_element(rng);
            auto w = commutator_word_for(g, gens, x);
            CHECK(w.in_commutator_subgroup());
            CHECK(evaluate_word(w, gens) == x);
        }
    }
}

TEST_CASE("commutator word preconditions") {
    auto z4 = catalog_group("Z4");
    CHECK_THROWS_AS(commutator_word_for(z4, z4.generators(), p(4, "(1 2 3 4)")), PreconditionError);
    auto a5 = catalog_group("A5");
    CHECK_THROWS_AS(commutator_word_for(a5, {p(5, "(1 2 3)")}, p(5, "(1 2 3)")), PreconditionError);
    CHECK_THROWS_AS(commutator_word_for(a5, a5.generators(), p(5, "(1 2)")), PreconditionError);
}

TEST_CASE("gaschutz lifts of the documented examples") {
    auto s3 = catalog_group("S3");
    auto a3 = PermGroup(3, {p(3, "(1 2 3)")});
    auto b = gaschutz_lift(s3, a3, {p(3, "(1 2)"), Permutation::identity(3)});
    REQUIRE(b.size() == 2);
    CHECK(generates(s3, b));
    CHECK(a3.contains(b[0] * p(3, "(1 2)")));
    CHECK(a3.contains(b[1]));

    auto sl = catalog_group("SL25");
    auto z = center(sl);
    CHECK(gaschutz_lift(sl, z, sl.generators()) == sl.generators());

    CHECK_THROWS_AS(gaschutz_lift(s3, a3, {Permutation::identity(3), Permutation::identity(3)}),
                    PreconditionError);
    auto v4 = catalog_group("V4");
    CHECK_THROWS_AS(gaschutz_lift(v4, PermGroup::trivial(4), {p(4, "(1 2)(3 4)")}), PreconditionError);
}

TEST_CASE("gaschutz lifting succeeds on 100 random instances") {
    std::mt19937_64 rng(20261016);
    struct Source {
        PermGroup g;
        std::vector<PermGroup> normals;
        std::size_t d;
    };
    std::vector<Source> sources;
    for (const auto& entry : catalog()) {
        auto g = entry.group();
        if (g.is_trivial())
            continue;
        auto d = min_generators(g, 4);
        REQUIRE(d);
        sources.push_back({g, normal_subgroups(g), *d});
    }
    int done = 0;
    while (done < 100) {
        const auto& src = sources[rng() % sources.size()];
        const auto& n = src.normals[rng() % src.normals.size()];
        std::size_t k = src.d + rng() % 2;
        std::vector<Permutation> reps;
        for (std::size_t i = 0; i < k; ++i)
            reps.push_back(src.g.random_element(rng));
        PermGroup span = n;
        for (const auto& a : reps)
            span.add_generator(a);
        if (span.order() != src.g.order())
            continue;
        auto b = gaschutz_lift(src.g, n, reps, rng());
        REQUIRE(b.size() == k);
        for (std::size_t i = 0; i < k; ++i)
            CHECK(n.contains(b[i] * reps[i].inverse()));
        CHECK(PermGroup(src.g.degree(), b).order() == src.g.order());
        ++done;
    }
}
