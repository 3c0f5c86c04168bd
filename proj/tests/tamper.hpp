#pragma once

#include "perfgrp/certificate.hpp"

#include <optional>

// Certificate mutations for negative controls. Each returns nullopt when
// the certificate has nothing of the required kind.

// Drops the first conjugator entry of the top level.
inline std::optional<perfgrp::Certificate> drop_conjugator(perfgrp::Certificate cert) {
    for (auto& lvl : cert.levels)
        if (!lvl.cover.conjugators.empty()) {
            lvl.cover.conjugators.erase(lvl.cover.conjugators.begin());
            return cert;
        }
    return std::nullopt;
}

// Adds one to a q coordinate whose basis element delta has [delta, a_l] != 1,
// so the product of commutators changes.
inline std::optional<perfgrp::Certificate> perturb_q(perfgrp::Certificate cert) {
    for (auto& lvl : cert.levels)
        for (auto& f : lvl.factors)
            for (std::size_t r = 0; r < f.A_basis.size(); ++r)
                for (auto& row : f.q)
                    for (std::size_t l = 0; l < row.size(); ++l)
                        if (!perfgrp::commutator(f.A_basis[r], f.a[l]).is_identity()) {
                            row[l][r] += 1;
                            return cert;
                        }
    return std::nullopt;
}

// Replaces the first word with the generator x1, which is not in [F,F].
inline std::optional<perfgrp::Certificate> non_commutator_word(perfgrp::Certificate cert) {
    for (auto& lvl : cert.levels)
        if (!lvl.words.empty()) {
            lvl.words[0] = perfgrp::Word::generator(lvl.words[0].alphabet_size(), 0);
            return cert;
        }
    return std::nullopt;
}
