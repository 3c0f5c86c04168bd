#pragma once

#include "perfgrp/perm_group.hpp"

#include <filesystem>
#include <string>

namespace perfgrp {

/// Group text: `degree N`, then one permutation per line in cycle
/// notation; `#` starts a comment. Throws InputError with the line number.
PermGroup parse_group_text(const std::string& text, const std::string& origin = "<input>");
PermGroup parse_group_file(const std::filesystem::path& path);

/// `catalog:NAME` or a path to a group file.
PermGroup load_group(const std::string& spec);

struct FamilySpec {
    std::vector<std::string> names;
    std::vector<PermGroup> groups;
    std::size_t d = 0;
    std::size_t k = 0;
};

/// Lines `group <name> <path-or-catalog:NAME>` and one `params d=<d> k=<k>`.
/// Relative paths resolve against the family file's directory.
FamilySpec parse_family_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

} // namespace perfgrp
