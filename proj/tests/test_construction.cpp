#include "doctest.h"

#include "perfgrp/catalog.hpp"
#include "perfgrp/construction.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/structure.hpp"
#include "perfgrp/verify.hpp"

#include "tamper.hpp"

using namespace perfgrp;

namespace {

std::vector<PermGroup> family_of(std::vector<std::string> names) {
    std::vector<PermGroup> out;
    for (const auto& n : names)
        out.push_back(catalog_group(n));
    return out;
}

ConstructionResult build(std::vector<std::string> names, std::size_t d, std::size_t k,
                         std::uint64_t seed = 1) {
    ConstructOptions opt;
    opt.seed = seed;
    return construct(family_of(names), d, k, opt, names);
}

void check_valid(const ConstructionResult& r) {
    CHECK(derived_subgroup(r.gamma).order() == r.gamma.order());
    for (std::size_t j = 0; j < r.context.size(); ++j)
        CHECK(r.context.projection(r.gamma, j).order() == r.context.factor(j).order());
    auto report = verify_certificate(r.certificate);
    CHECK_MESSAGE(report.valid, report.failed_step << ": " << report.message);
    auto reparsed = certificate_from_json(certificate_to_json(r.certificate));
    CHECK(certificate_to_json(reparsed) == certificate_to_json(r.certificate));
    CHECK(verify_certificate(reparsed).valid);
}

} // namespace

TEST_CASE("level splits") {
    auto sl = split_level(catalog_group("SL25"), 2);
    CHECK(sl.W.order() == 2);
    CHECK(sl.A.order() == 2);
    CHECK(sl.S.is_trivial());
    CHECK(sl.B.is_trivial());

    auto a5 = split_level(catalog_group("A5"), 1);
    CHECK(a5.W.order() == 60);
    CHECK(a5.A.is_trivial());
    CHECK(a5.S.order() == 60);

    auto aff = split_level(catalog_group("2^4:A5"), 2);
    CHECK(aff.W.order() == 16);
    CHECK(aff.A.order() == 16);
    CHECK(aff.S.is_trivial());
    CHECK(aff.B.order() == 16);

    CHECK_THROWS_AS(split_level(catalog_group("SL25"), 1), PreconditionError);
}

TEST_CASE("empty family gives the trivial group") {
    auto r = construct({}, 2, 3);
    CHECK(r.gamma.is_trivial());
    CHECK(verify_certificate(r.certificate).valid);
}

TEST_CASE("members outside Y(d,k) are rejected") {
    CHECK_THROWS_AS(build({"S3"}, 2, 2), PreconditionError);
    CHECK_THROWS_AS(build({"SL25"}, 2, 1), PreconditionError);
}

TEST_CASE("level one family of simple groups") {
    auto r = build({"A5", "PSL27"}, 2, 1);
    check_valid(r);
    CHECK(10080 % r.gamma.order() == 0);
    for (const auto& f : r.certificate.levels[0].factors)
        CHECK(f.A.empty());
}

TEST_CASE("single A5 at level one and two") {
    check_valid(build({"A5"}, 2, 1));
    check_valid(build({"A5"}, 2, 2));
}

TEST_CASE("SL(2,5) at level two") {
    auto r = build({"SL25"}, 2, 2);
    check_valid(r);
    const auto& top = r.certificate.levels[0];
    for (const auto& k : top.factors[0].k)
        CHECK(k.is_identity());
    for (const auto& w : top.words)
        CHECK(w.in_commutator_subgroup());
}

TEST_CASE("2^4:A5 at level two") {
    auto r = build({"2^4:A5"}, 2, 2);
    check_valid(r);
}

TEST_CASE("mixed level two family") {
    auto r = build({"SL25", "2^4:A5"}, 2, 2);
    check_valid(r);
    const auto& top = r.certificate.levels[0];
    for (const auto& coords : top.factors[0].q)
        for (const auto& v : coords)
            for (auto x : v)
                CHECK(x % 2 == 0); // Q lives in the second coordinate only
}

TEST_CASE("three simple groups at level one") {
    check_valid(build({"A5", "A6", "PSL27"}, 2, 1));
}

TEST_CASE("tampered certificates fail at the named step") {
    auto simple = build({"A5"}, 2, 1).certificate;
    auto dropped = drop_conjugator(simple);
    REQUIRE(dropped);
    CHECK(verify_certificate(*dropped).failed_step == "s_l in T");

    auto affine = build({"2^4:A5"}, 2, 2).certificate;
    auto perturbed = perturb_q(affine);
    REQUIRE(perturbed);
    CHECK(verify_certificate(*perturbed).failed_step == "k_i decomposition");

    auto word = non_commutator_word(simple);
    REQUIRE(word);
    CHECK(verify_certificate(*word).failed_step == "w_i in [F,F]");

    auto old = simple;
    old.version = "0.9.0";
    CHECK(verify_certificate(old).failed_step == "version");
    VerifyOptions force;
    force.force = true;
    CHECK(verify_certificate(old, force).valid);
}

TEST_CASE("construction is deterministic in the seed") {
    auto a = certificate_to_json(build({"SL25", "2^4:A5"}, 2, 2, 7).certificate);
    auto b = certificate_to_json(build({"SL25", "2^4:A5"}, 2, 2, 7).certificate);
    CHECK(a == b);
    auto other = build({"SL25", "2^4:A5"}, 2, 2, 8);
    CHECK(verify_certificate(other.certificate).valid);
}
