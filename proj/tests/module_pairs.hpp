#pragma once

#include "perfgrp/catalog.hpp"
#include "perfgrp/structure.hpp"

#include <string>

// Every (G, A) with G from the catalog and A a nontrivial abelian normal
// subgroup of G with |A| <= 2^12.
struct ModulePair {
    std::string name;
    perfgrp::PermGroup ambient;
    perfgrp::PermGroup carrier;
};

inline std::vector<ModulePair> catalog_module_pairs() {
    std::vector<ModulePair> out;
    for (const auto& entry : perfgrp::catalog()) {
        auto g = entry.group();
        for (const auto& n : perfgrp::normal_subgroups(g))
            if (!n.is_trivial() && n.order() <= 4096 && perfgrp::is_abelian(n))
                out.push_back({entry.name, g, n});
    }
    return out;
}
