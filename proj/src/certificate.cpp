#include "perfgrp/certificate.hpp"

#include "perfgrp/errors.hpp"

#include <json.hpp>

#include <numeric>

namespace perfgrp {

namespace {

using nlohmann::json;

json perms(const std::vector<Permutation>& ps) {
    json out = json::array();
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

std::vector<Permutation> parse_perms(const json& j, std::size_t degree) {
    std::vector<Permutation> out;
    for (const auto& s : j)
        out.push_back(Permutation::parse(degree, s.get<std::string>()));
    return out;
}

std::size_t product_degree(const std::vector<GroupRecord>& groups) {
    if (groups.empty())
        return 1;
    return std::accumulate(groups.begin(), groups.end(), std::size_t{0},
                           [](std::size_t a, const GroupRecord& g) { return a + g.degree; });
}

json level_to_json(const LevelRecord& lvl) {
    json out;
    out["k"] = lvl.k;
    out["gamma_order"] = lvl.gamma_order;
    out["groups"] = json::array();
    for (const auto& g : lvl.groups)
        out["groups"].push_back({{"name", g.name}, {"degree", g.degree}, {"generators", perms(g.generators)}});
    out["factors"] = json::array();
    for (const auto& f : lvl.factors)
        out["factors"].push_back({{"W", perms(f.W)},
                                  {"A", perms(f.A)},
                                  {"S", perms(f.S)},
                                  {"B", perms(f.B)},
                                  {"quotient_images", perms(f.quotient_images)},
                                  {"A_basis", perms(f.A_basis)},
                                  {"A_orders", f.A_orders},
                                  {"a", perms(f.a)},
                                  {"k", perms(f.k)},
                                  {"s", perms(f.s)},
                                  {"q", f.q}});
    out["words"] = json::array();
    for (const auto& w : lvl.words)
        out["words"].push_back(w.to_string());
    json cover;
    cover["owners"] = lvl.cover.owners;
    cover["factor_generators"] = json::array();
    for (const auto& g : lvl.cover.factor_generators)
        cover["factor_generators"].push_back(perms(g));
    cover["tuples"] = json::array();
    for (const auto& t : lvl.cover.tuples)
        cover["tuples"].push_back(perms(t));
    cover["e"] = lvl.cover.e;
    cover["conjugators"] = json::array();
    for (const auto& c : lvl.cover.conjugators)
        cover["conjugators"].push_back({{"l", c.l}, {"j", c.j}, {"t", c.t}, {"r", c.r.to_string()}});
    out["cover"] = cover;
    out["marked"] = perms(lvl.marked);
    return out;
}

LevelRecord level_from_json(const json& j, std::size_t alphabet) {
    LevelRecord lvl;
    lvl.k = j.at("k").get<std::size_t>();
    lvl.gamma_order = j.at("gamma_order").get<std::uint64_t>();
    for (const auto& g : j.at("groups")) {
        GroupRecord rec;
        rec.name = g.at("name").get<std::string>();
        rec.degree = g.at("degree").get<std::size_t>();
        if (rec.degree == 0)
            throw InputError("certificate: group of degree 0");
        rec.generators = parse_perms(g.at("generators"), rec.degree);
        lvl.groups.push_back(std::move(rec));
    }
    const auto& factors = j.at("factors");
    if (!factors.empty() && factors.size() != lvl.groups.size())
        throw InputError("certificate: factor records do not match the family");
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const auto& f = factors[idx];
        std::size_t n = lvl.groups[idx].degree;
        FactorRecord rec;
        rec.W = parse_perms(f.at("W"), n);
        rec.A = parse_perms(f.at("A"), n);
        rec.S = parse_perms(f.at("S"), n);
        rec.B = parse_perms(f.at("B"), n);
        rec.A_basis = parse_perms(f.at("A_basis"), n);
        rec.A_orders = f.at("A_orders").get<std::vector<std::int64_t>>();
        rec.a = parse_perms(f.at("a"), n);
        rec.k = parse_perms(f.at("k"), n);
        rec.s = parse_perms(f.at("s"), n);
        rec.q = f.at("q").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
        // quotient images live on the next level's domains; parsed afterwards
        lvl.factors.push_back(std::move(rec));
    }
    for (const auto& w : j.at("words"))
        lvl.words.push_back(Word::parse(alphabet, w.get<std::string>()));
    const std::size_t degree = product_degree(lvl.groups);
    const auto& cover = j.at("cover");
    lvl.cover.owners = cover.at("owners").get<std::vector<std::size_t>>();
    for (std::size_t i = 0; i < cover.at("factor_generators").size(); ++i) {
        if (i >= lvl.cover.owners.size() || lvl.cover.owners[i] >= lvl.groups.size())
            throw InputError("certificate: cover factor without a valid owner");
        std::size_t n = lvl.groups[lvl.cover.owners[i]].degree;
        lvl.cover.factor_generators.push_back(parse_perms(cover.at("factor_generators")[i], n));
        lvl.cover.tuples.push_back(parse_perms(cover.at("tuples").at(i), n));
    }
    lvl.cover.e = cover.at("e").get<std::size_t>();
    for (const auto& c : cover.at("conjugators"))
        lvl.cover.conjugators.push_back({c.at("l").get<std::size_t>(), c.at("j").get<std::size_t>(),
                                         c.at("t").get<std::size_t>(),
                                         Permutation::parse(degree, c.at("r").get<std::string>())});
    lvl.marked = parse_perms(j.at("marked"), degree);
    return lvl;
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    json out;
    out["format"] = cert.format;
    out["version"] = cert.version;
    out["seed"] = cert.seed;
    out["budget"] = cert.budget;
    out["d"] = cert.d;
    out["k"] = cert.k;
    out["levels"] = json::array();
    for (const auto& lvl : cert.levels)
        out["levels"].push_back(level_to_json(lvl));
    return out.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    try {
        auto j = json::parse(text);
        Certificate cert;
        cert.format = j.at("format").get<std::string>();
        cert.version = j.at("version").get<std::string>();
        cert.seed = j.at("seed").get<std::uint64_t>();
        cert.budget = j.at("budget").get<std::size_t>();
        cert.d = j.at("d").get<std::size_t>();
        cert.k = j.at("k").get<std::size_t>();
        const auto& levels = j.at("levels");
        // words at a level use the marked tuple of the level below
        for (std::size_t i = 0; i < levels.size(); ++i) {
            std::size_t alphabet =
                i + 1 < levels.size() ? levels[i + 1].at("marked").size() : 0;
            cert.levels.push_back(level_from_json(levels[i], alphabet));
        }
        for (std::size_t i = 0; i + 1 < cert.levels.size(); ++i) {
            auto& lvl = cert.levels[i];
            const auto& next = cert.levels[i + 1];
            for (std::size_t f = 0; f < lvl.factors.size(); ++f) {
                if (f >= next.groups.size())
                    throw InputError("certificate: quotient family is shorter than the family");
                lvl.factors[f].quotient_images =
                    parse_perms(levels[i].at("factors")[f].at("quotient_images"), next.groups[f].degree);
            }
        }
        return cert;
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate: ") + e.what());
    }
}

} // namespace perfgrp
