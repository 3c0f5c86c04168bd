#include "perfgrp/catalog.hpp"

#include "perfgrp/errors.hpp"

#include <array>

namespace perfgrp {

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

int inverse_mod(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (mod(a * x, p) == 1)
            return x;
    throw InternalError("no inverse mod p");
}

// SL(2,p) on the p^2-1 nonzero row vectors; vector (a,b) has index a*p+b-1.
Permutation nonzero_vector_action(int p, const std::array<int, 4>& m) {
    const int n = p * p - 1;
    std::vector<Point> images(static_cast<std::size_t>(n));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            if (a == 0 && b == 0)
                continue;
            int x = mod(a * m[0] + b * m[2], p);
            int y = mod(a * m[1] + b * m[3], p);
            images[static_cast<std::size_t>(a * p + b - 1)] = static_cast<Point>(x * p + y - 1);
        }
    return Permutation::from_images(std::move(images));
}

// F_4 = {0, 1, w, w^2} encoded 0..3; addition is XOR.
int f4_mul(int a, int b) {
    static constexpr int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
}

// Affine map v -> vM + t on F_4^2 (16 points, index 4a+b).
Permutation affine_f4(const std::array<int, 4>& m, std::array<int, 2> t) {
    std::vector<Point> images(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int x = f4_mul(a, m[0]) ^ f4_mul(b, m[2]) ^ t[0];
            int y = f4_mul(a, m[1]) ^ f4_mul(b, m[3]) ^ t[1];
            images[static_cast<std::size_t>(4 * a + b)] = static_cast<Point>(4 * x + y);
        }
    return Permutation::from_images(std::move(images));
}

CatalogEntry cycles(std::string name, std::size_t degree, std::vector<std::string> gens,
                    std::string provenance, std::uint64_t order, bool perfect) {
    CatalogEntry e{std::move(name), degree, {}, std::move(provenance), order, perfect};
    for (const auto& g : gens)
        e.generators.push_back(Permutation::parse(degree, g));
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back(cycles("A5", 5, {"(1 2 3 4 5)", "(1 2 3)"}, "alternating group on 5 points", 60,
                         true));
    out.push_back(cycles("S3", 3, {"(1 2)", "(1 2 3)"}, "symmetric group on 3 points", 6, false));
    out.push_back(cycles("V4", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}, "Klein four-group, regular", 4,
                         false));
    out.push_back(cycles("A4", 4, {"(1 2 3)", "(1 2)(3 4)"}, "alternating group on 4 points", 12,
                         false));
    out.push_back(cycles("Z4", 4, {"(1 2 3 4)"}, "cyclic group of order 4, regular", 4, false));

    const std::array<int, 4> upper{1, 1, 0, 1};
    const std::array<int, 4> rotate{0, -1, 1, 0};
    out.push_back(CatalogEntry{
        "SL25",
        24,
        {nonzero_vector_action(5, upper), nonzero_vector_action(5, rotate)},
        "SL(2,5) acting on the 24 nonzero vectors of F_5^2, generated by [[1,1],[0,1]] and "
        "[[0,-1],[1,0]]",
        120,
        true});
    out.push_back(CatalogEntry{
        "PSL25",
        6,
        {projective_line_action(5, upper), projective_line_action(5, rotate)},
        "PSL(2,5) ~ A5 on the projective line over F_5 (same matrices as SL25)",
        60,
        true});
    out.push_back(CatalogEntry{
        "PSL27",
        8,
        {projective_line_action(7, upper), projective_line_action(7, rotate)},
        "PSL(2,7) on the projective line over F_7, generated by x->x+1 and x->-1/x",
        168,
        true});
    out.push_back(cycles("A6", 6, {"(1 2 3)", "(2 3 4 5 6)"}, "alternating group on 6 points",
                         360, true));

    const int w = 2;
    out.push_back(CatalogEntry{
        "2^4:A5",
        16,
        {affine_f4({1, 0, 0, 1}, {1, 0}), affine_f4({1, 1, 0, 1}, {0, 0}),
         affine_f4({1, w, 0, 1}, {0, 0}), affine_f4({1, 0, 1, 1}, {0, 0}),
         affine_f4({1, 0, w, 1}, {0, 0})},
        "2^4:A5 affine on F_4^2 = F_2^4 via A5 ~ SL(2,4); translations plus unitriangular "
        "matrices",
        960,
        true});
    out.push_back(cycles("A5xA5", 10,
                         {"(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10)", "(6 7 8)"},
                         "A5 x A5 on 5+5 points", 3600, true));
    return out;
}

} // namespace

Permutation projective_line_action(int p, const std::array<int, 4>& m) {
    std::vector<Point> images(static_cast<std::size_t>(p + 1));
    auto normalize = [&](int a, int b) -> Point {
        a = mod(a, p);
        b = mod(b, p);
        if (b == 0)
            return static_cast<Point>(p);
        return static_cast<Point>(mod(a * inverse_mod(b, p), p));
    };
    for (int x = 0; x <= p; ++x) {
        int a = x < p ? x : 1;
        int b = x < p ? 1 : 0;
        images[static_cast<std::size_t>(x)] = normalize(a * m[0] + b * m[2], a * m[1] + b * m[3]);
    }
    return Permutation::from_images(std::move(images));
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<CatalogEntry> find_catalog(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return e;
    return std::nullopt;
}

PermGroup catalog_group(const std::string& name) {
    auto e = find_catalog(name);
    if (!e)
        throw InputError("unknown catalog group '" + name + "'");
    return e->group();
}

} // namespace perfgrp
