#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perfgrp {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, printed 1-based in cycle notation.
///
/// Products compose left to right: (a * b)[i] == b[a[i]], i.e. the left
/// factor is applied first. Every module relies on this convention.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t degree);

    /// Throws InputError unless `images` is a bijection of 0..n-1.
    static Permutation from_images(std::vector<Point> images);

    /// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
    static Permutation parse(std::size_t degree, std::string_view text);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](std::size_t i) const noexcept { return images_[i]; }
    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    std::uint64_t order() const;

    /// Same permutation acting on a larger domain (extra points fixed) or
    /// shifted by `offset` inside a domain of size `new_degree`.
    Permutation embed(std::size_t new_degree, std::size_t offset) const;
    /// Restriction to [offset, offset+len); the block must be invariant.
    Permutation restrict(std::size_t offset, std::size_t len) const;

    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation& operator*=(const Permutation& b);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
    std::vector<Point> images_;
};

/// x^y = y^-1 x y
Permutation conjugate(const Permutation& x, const Permutation& y);
/// [x,y] = x^-1 y^-1 x y
Permutation commutator(const Permutation& x, const Permutation& y);
Permutation power(const Permutation& x, std::int64_t e);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace perfgrp
