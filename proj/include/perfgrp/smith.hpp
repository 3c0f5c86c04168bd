#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace perfgrp {

/// Dense row-major integer matrix. Arithmetic is checked: overflow throws
/// InternalError rather than wrapping.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<std::int64_t> row(std::size_t i) const;
    void append_row(std::span<const std::int64_t> r);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Row vector times matrix.
std::vector<std::int64_t> row_times(std::span<const std::int64_t> x, const IntMatrix& a);

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all diagonal entries non-negative. V_inverse is tracked alongside V.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Some integer row vector x with x * A == b, or nullopt.
std::optional<std::vector<std::int64_t>> solve_left(const IntMatrix& a,
                                                    std::span<const std::int64_t> b);

/// Row-style Hermite normal form of the row lattice: upper triangular,
/// positive pivots, entries above each pivot reduced into [0, pivot);
/// zero rows dropped. Canonical for the lattice.
IntMatrix row_hermite(const IntMatrix& a);

} // namespace perfgrp
