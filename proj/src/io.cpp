#include "perfgrp/io.hpp"

#include "perfgrp/catalog.hpp"
#include "perfgrp/errors.hpp"

#include <fstream>
#include <sstream>

namespace perfgrp {

namespace {

std::string strip(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw InputError(where + ": expected a number, got '" + text + "'");
    }
    if (pos != text.size())
        throw InputError(where + ": expected a number, got '" + text + "'");
    return static_cast<std::size_t>(value);
}

} // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PermGroup parse_group_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::size_t degree = 0;
    std::vector<Permutation> gens;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = strip(raw);
        if (line.empty())
            continue;
        const std::string where = origin + ":" + std::to_string(line_no);
        if (degree == 0) {
            std::istringstream words(line);
            std::string key, value, extra;
            words >> key >> value;
            if (key != "degree" || value.empty() || (words >> extra))
                throw InputError(where + ": expected 'degree N'");
            degree = parse_count(value, where);
            if (degree == 0)
                throw InputError(where + ": degree must be positive");
            continue;
        }
        try {
            gens.push_back(Permutation::parse(degree, line));
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (degree == 0)
        throw InputError(origin + ": missing 'degree N' line");
    return PermGroup(degree, std::move(gens));
}

PermGroup parse_group_file(const std::filesystem::path& path) {
    return parse_group_text(read_text_file(path), path.string());
}

PermGroup load_group(const std::string& spec) {
    constexpr std::string_view prefix = "catalog:";
    if (spec.starts_with(prefix))
        return catalog_group(spec.substr(prefix.size()));
    return parse_group_file(spec);
}

FamilySpec parse_family_file(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path));
    FamilySpec family;
    bool have_params = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = strip(raw);
        if (line.empty())
            continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        std::istringstream words(line);
        std::string key;
        words >> key;
        if (key == "group") {
            std::string name, source, extra;
            words >> name >> source;
            if (source.empty() || (words >> extra))
                throw InputError(where + ": expected 'group <name> <path>'");
            if (!source.starts_with("catalog:")) {
                std::filesystem::path p(source);
                if (p.is_relative())
                    source = (path.parent_path() / p).string();
            }
            try {
                family.groups.push_back(load_group(source));
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
            family.names.push_back(name);
        } else if (key == "params") {
            std::string item;
            bool have_d = false, have_k = false;
            while (words >> item) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw InputError(where + ": expected key=value, got '" + item + "'");
                auto name = item.substr(0, eq);
                auto value = parse_count(item.substr(eq + 1), where);
                if (name == "d") {
                    family.d = value;
                    have_d = true;
                } else if (name == "k") {
                    family.k = value;
                    have_k = true;
                } else {
                    throw InputError(where + ": unknown parameter '" + name + "'");
                }
            }
            if (!have_d || !have_k)
                throw InputError(where + ": params needs both d= and k=");
            have_params = true;
        } else {
            throw InputError(where + ": unknown directive '" + key + "'");
        }
    }
    if (!have_params)
        throw InputError(path.string() + ": missing 'params d=<d> k=<k>' line");
    return family;
}

} // namespace perfgrp
