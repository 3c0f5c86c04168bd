#pragma once

#include "perfgrp/permutation.hpp"
#include "perfgrp/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace perfgrp {

inline constexpr const char* kCertificateFormat = "perfgrp-certificate";
inline constexpr const char* kCertificateVersion = "1.0.0";

struct GroupRecord {
    std::string name;
    std::size_t degree = 1;
    std::vector<Permutation> generators;
};

/// Per-factor data of one level of the recursion. Generators are on the
/// factor's own domain.
struct FactorRecord {
    std::vector<Permutation> W, A, S, B;
    /// Images of the factor's generators in the next level's group.
    std::vector<Permutation> quotient_images;
    std::vector<Permutation> A_basis;
    std::vector<std::int64_t> A_orders;
    std::vector<Permutation> a, k, s;
    /// q[i][l]: coordinates of q_{i,l} in A_basis.
    std::vector<std::vector<std::vector<std::int64_t>>> q;
};

struct ConjugatorRecord {
    std::size_t l = 0; // residue index
    std::size_t j = 0; // cover generator index
    std::size_t t = 0; // round
    Permutation r;     // on the level's product domain
};

struct CoverRecord {
    std::vector<std::size_t> owners; // family index holding M_i
    std::vector<std::vector<Permutation>> factor_generators;
    std::vector<std::vector<Permutation>> tuples; // tuples[i][j] in M_i
    std::size_t e = 0;
    std::vector<ConjugatorRecord> conjugators;
};

struct LevelRecord {
    std::size_t k = 0;
    std::vector<GroupRecord> groups;
    std::vector<FactorRecord> factors; // empty at the base
    std::vector<Word> words;
    CoverRecord cover;
    std::vector<Permutation> marked; // on the level's product domain
    std::uint64_t gamma_order = 1;
};

struct Certificate {
    std::string format = kCertificateFormat;
    std::string version = kCertificateVersion;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    /// levels[0] is level k, levels.back() the trivial base.
    std::vector<LevelRecord> levels;
};

/// Deterministic JSON text (sorted keys, two-space indent).
std::string certificate_to_json(const Certificate& cert);
/// Throws InputError on malformed documents.
Certificate certificate_from_json(const std::string& text);

} // namespace perfgrp
