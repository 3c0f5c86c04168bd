#include "perfgrp/permutation.hpp"

#include "perfgrp/errors.hpp"

#include <cctype>
#include <numeric>

namespace perfgrp {

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
        if (p >= images.size() || seen[p])
            throw InputError("permutation images are not a bijection");
        seen[p] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw InputError("expected '(' in cycle notation: " + std::string(text));
        ++pos;
        std::vector<Point> cycle;
        for (;;) {
            skip_ws();
            if (pos >= text.size())
                throw InputError("unterminated cycle: " + std::string(text));
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw InputError("unexpected character in cycle: " + std::string(text));
            std::size_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
                if (value > degree)
                    break;
                ++pos;
            }
            if (value == 0 || value > degree)
                throw InputError("point out of range 1.." + std::to_string(degree) + ": " +
                                 std::string(text));
            Point p = static_cast<Point>(value - 1);
            if (used[p])
                throw InputError("repeated point " + std::to_string(value) + " in " +
                                 std::string(text));
            used[p] = true;
            cycle.push_back(p);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::embed(std::size_t new_degree, std::size_t offset) const {
    auto result = identity(new_degree);
    for (std::size_t i = 0; i < images_.size(); ++i)
        result.images_[offset + i] = static_cast<Point>(offset + images_[i]);
    return result;
}

Permutation Permutation::restrict(std::size_t offset, std::size_t len) const {
    std::vector<Point> images(len);
    for (std::size_t i = 0; i < len; ++i) {
        Point q = images_[offset + i];
        if (q < offset || q >= offset + len)
            throw InputError("restriction to a non-invariant block");
        images[i] = static_cast<Point>(q - offset);
    }
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i)
            continue;
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (!first)
                out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<Point> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = b.images_[a.images_[i]];
    return Permutation(std::move(images));
}

Permutation& Permutation::operator*=(const Permutation& b) {
    for (auto& p : images_)
        p = b.images_[p];
    return *this;
}

Permutation conjugate(const Permutation& x, const Permutation& y) {
    return y.inverse() * x * y;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
    return x.inverse() * y.inverse() * x * y;
}

Permutation power(const Permutation& x, std::int64_t e) {
    Permutation base = e < 0 ? x.inverse() : x;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    auto result = Permutation::identity(x.degree());
    while (n) {
        if (n & 1)
            result *= base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace perfgrp
