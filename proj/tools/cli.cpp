#include "cli.hpp"

#include "perfgrp/catalog.hpp"
#include "perfgrp/construction.hpp"
#include "perfgrp/covering.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/io.hpp"
#include "perfgrp/structure.hpp"
#include "perfgrp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace perfgrp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t cap = kDefaultCap;
    std::size_t budget = 61;
    std::string output;
};

std::string join_numbers(const auto& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty())
            out += ",";
        out += std::to_string(v);
    }
    return out;
}

int analyze(const std::string& spec, std::size_t depth, std::size_t bound, const Globals& g,
            std::ostream& out) {
    auto group = load_group(spec);
    auto report = star_series(group, depth, bound, g.seed, g.cap);
    std::vector<std::uint64_t> orders;
    for (const auto& h : report.series)
        orders.push_back(h.order());
    out << "degree=" << group.degree() << "\n";
    out << "order=" << group.order() << "\n";
    out << "perfect=" << (report.perfect ? "true" : "false") << "\n";
    out << "series=" << join_numbers(orders) << "\n";
    out << "level=" << (report.level ? std::to_string(*report.level) : "none") << "\n";
    out << "min_generators="
        << (report.min_generators ? std::to_string(*report.min_generators)
                                  : ">" + std::to_string(report.generator_bound))
        << "\n";
    out << "abelianization=" << (report.perfect ? "trivial" : join_numbers(report.abelianization_invariants))
        << "\n";
    return kOk;
}

int construct_cmd(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
    auto family = parse_family_file(path);
    ConstructOptions opt;
    opt.seed = g.seed;
    opt.budget = g.budget;
    opt.cap = g.cap;
    auto result = construct(family.groups, family.d, family.k, opt, family.names);
    auto text = certificate_to_json(result.certificate);
    if (g.output.empty() || g.output == "-") {
        out << text;
    } else {
        std::ofstream file(g.output);
        if (!file)
            throw InputError("cannot write " + g.output);
        file << text;
        out << "wrote " << g.output << "\n";
    }
    auto& summary = g.output.empty() || g.output == "-" ? err : out;
    summary << "gamma_order=" << result.gamma.order() << " degree=" << result.gamma.degree()
        << " factors=" << family.groups.size() << "\n";
    return kOk;
}

int verify_cmd(const std::string& path, bool force, bool quiet, const Globals& g, std::ostream& out) {
    auto cert = certificate_from_json(read_text_file(path));
    VerifyOptions opt;
    opt.force = force;
    opt.cap = g.cap;
    auto report = verify_certificate(cert, opt);
    if (!quiet)
        for (const auto& s : report.steps)
            out << "level " << s.level << "  " << (s.ok ? "ok    " : "FAILED") << "  " << s.name
                << (s.detail.empty() ? "" : "  (" + s.detail + ")") << "\n";
    if (report.valid) {
        out << "certificate valid\n";
        return kOk;
    }
    out << "certificate invalid at step \"" << report.failed_step << "\": " << report.message << "\n";
    return kInvalid;
}

int cover_cmd(const std::string& spec, const std::vector<std::string>& elems, bool product,
              const std::string& witness, const Globals& g, std::ostream& out) {
    auto group = load_group(spec);
    std::vector<Permutation> reps;
    for (const auto& e : elems)
        reps.push_back(Permutation::parse(group.degree(), e));
    ElementSet x;
    if (product) {
        x = {Permutation::identity(group.degree())};
        for (const auto& r : reps)
            x = product_set(x, normal_set(group, {r}), g.cap);
    } else {
        x = normal_set(group, reps);
    }
    auto cert = covering_number(group, x, g.cap);
    out << "|S|=" << cert.group_order << " |X|=" << cert.set_size << " e=" << cert.e << "\n";
    if (!witness.empty()) {
        if (!product)
            throw PreconditionError("--witness needs --product");
        auto target = Permutation::parse(group.degree(), witness);
        auto r = decompose_conjugate_product(group, target, reps, cert.e);
        for (std::size_t t = 0; t < r.size(); ++t)
            for (std::size_t j = 0; j < r[t].size(); ++j)
                out << "r[" << t + 1 << "][" << j + 1 << "]=" << r[t][j].to_string() << "\n";
    }
    return kOk;
}

int catalog_cmd(bool check, std::ostream& out) {
    bool ok = true;
    for (const auto& entry : catalog()) {
        out << entry.name << "  degree " << entry.degree << "  order " << entry.documented_order;
        if (check) {
            auto computed = entry.group().order();
            out << (computed == entry.documented_order ? "  ok" : "  MISMATCH " + std::to_string(computed));
            ok = ok && computed == entry.documented_order;
        }
        out << "  " << entry.provenance << "\n";
    }
    return ok ? kOk : kInvalid;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perfect subdirect products of finite groups: analysis, construction, verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--cap", g.cap, "Element enumeration cap")->capture_default_str();
    app.add_option("--budget", g.budget, "Number of cover generators")->capture_default_str();
    app.add_option("-o,--output", g.output, "Output path");

    std::string target;
    std::size_t depth = 16, bound = 4;
    auto* analyze_app = app.add_subcommand("analyze", "Star series, level and generator count");
    analyze_app->add_option("group", target, "Group file or catalog:NAME")->required();
    analyze_app->add_option("--depth", depth, "Maximum series length")->capture_default_str();
    analyze_app->add_option("--gens-bound", bound, "Largest generating tuple tried")->capture_default_str();

    auto* construct_app = app.add_subcommand("construct", "Build and certify a perfect subdirect product");
    construct_app->add_option("family", target, "Family file")->required();

    bool force = false, quiet = false;
    auto* verify_app = app.add_subcommand("verify", "Re-check a certificate from scratch");
    verify_app->add_option("certificate", target, "Certificate JSON")->required();
    verify_app->add_flag("--force", force, "Check certificates from other versions");
    verify_app->add_flag("-q,--quiet", quiet, "Only print the verdict");

    std::vector<std::string> elems;
    bool product = false;
    std::string witness;
    auto* cover_app = app.add_subcommand("cover", "Covering number of a normal subset");
    cover_app->add_option("group", target, "Group file or catalog:NAME")->required();
    cover_app->add_option("elements", elems, "Class representatives in cycle notation")->required();
    cover_app->add_flag("--product", product, "Use the product of the classes, not their union");
    cover_app->add_option("--witness", witness, "Write this element as a product of conjugates");

    bool check = false;
    auto* catalog_app = app.add_subcommand("catalog", "List the built-in groups");
    catalog_app->add_flag("--check", check, "Recompute every order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        return kUsage;
    }

    try {
        if (*analyze_app)
            return analyze(target, depth, bound, g, out);
        if (*construct_app)
            return construct_cmd(target, g, out, err);
        if (*verify_app)
            return verify_cmd(target, force, quiet, g, out);
        if (*cover_app)
            return cover_cmd(target, elems, product, witness, g, out);
        return catalog_cmd(check, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

} // namespace perfgrp::cli
