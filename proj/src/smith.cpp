#include "perfgrp/smith.hpp"

#include "perfgrp/errors.hpp"

#include <cstdlib>
#include <utility>

namespace perfgrp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InternalError("integer overflow in matrix arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw InternalError("integer overflow in matrix arithmetic");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// row_i += c * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t c) {
    if (c == 0)
        return;
    for (std::size_t k = 0; k < m.cols(); ++k)
        m(i, k) = checked_add(m(i, k), checked_mul(c, m(j, k)));
}

// col_i += c * col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t c) {
    if (c == 0)
        return;
    for (std::size_t k = 0; k < m.rows(); ++k)
        m(k, i) = checked_add(m(k, i), checked_mul(c, m(k, j)));
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(i, k), m(j, k));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < m.rows(); ++k)
        std::swap(m(k, i), m(k, j));
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k)
        m(i, k) = -m(i, k);
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(std::span<const std::int64_t> r) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = r.size();
    if (r.size() != cols_)
        throw InputError("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
        }
    return c;
}

std::vector<std::int64_t> row_times(std::span<const std::int64_t> x, const IntMatrix& a) {
    if (x.size() != a.rows())
        throw InputError("row_times: dimension mismatch");
    std::vector<std::int64_t> out(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[j] = checked_add(out[j], checked_mul(x[i], a(i, j)));
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()),
                IntMatrix::identity(a.cols()), 0};
    auto& d = f.D;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    // Column op col_i += c*col_j on D and V; inverse row op on V_inverse.
    auto col_add = [&](std::size_t i, std::size_t j, std::int64_t c) {
        add_col(d, i, j, c);
        add_col(f.V, i, j, c);
        add_row(f.V_inverse, j, i, -c);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        swap_cols(d, i, j);
        swap_cols(f.V, i, j);
        swap_rows(f.V_inverse, i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t j, std::int64_t c) {
        add_row(d, i, j, c);
        add_row(f.U, i, j, c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        swap_rows(d, i, j);
        swap_rows(f.U, i, j);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry in the trailing block becomes the pivot
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0 &&
                        (pi == rows || std::llabs(d(i, j)) < std::llabs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done;
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                row_add(i, t, -floor_div(d(i, t), d(t, t)));
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                col_add(j, t, -floor_div(d(t, j), d(t, t)));
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility: pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(f.U, t);
        }
        f.rank = t + 1;
    }
done:
    return f;
}

std::optional<std::vector<std::int64_t>> solve_left(const IntMatrix& a,
                                                    std::span<const std::int64_t> b) {
    if (b.size() != a.cols())
        throw InputError("solve_left: right-hand side has wrong length");
    auto f = smith_normal_form(a);
    auto bv = row_times(b, f.V);
    std::vector<std::int64_t> y(a.rows(), 0);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        if (i < f.rank) {
            if (bv[i] % f.D(i, i) != 0)
                return std::nullopt;
            y[i] = bv[i] / f.D(i, i);
        } else if (bv[i] != 0) {
            return std::nullopt;
        }
    }
    return row_times(y, f.U);
}

IntMatrix row_hermite(const IntMatrix& a) {
    IntMatrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        for (;;) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m(i, c) != 0 && (best == m.rows() || std::llabs(m(i, c)) < std::llabs(m(best, c))))
                    best = i;
            if (best == m.rows())
                break;
            swap_rows(m, r, best);
            bool single = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0)
                    continue;
                add_row(m, i, r, -floor_div(m(i, c), m(r, c)));
                if (m(i, c) != 0)
                    single = false;
            }
            if (single)
                break;
        }
        if (m(r, c) == 0)
            continue;
        if (m(r, c) < 0)
            negate_row(m, r);
        for (std::size_t i = 0; i < r; ++i)
            add_row(m, i, r, -floor_div(m(i, c), m(r, c)));
        ++r;
    }
    IntMatrix out(0, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        out.append_row(m.row(i));
    return out;
}

} // namespace perfgrp
