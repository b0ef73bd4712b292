#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ptile {

/// Dense row-major integer matrix. Arithmetic in the algorithms below is
/// overflow-checked and throws Error(overflow) instead of wrapping.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
    void negate_row(std::size_t r);

    IntMatrix transposed() const;
    bool is_zero() const noexcept;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);

struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
    std::vector<std::int64_t> invariants;
    std::size_t rank() const noexcept { return invariants.size(); }
};

/// Reduces `m` in place to Smith normal form P * m * Q = diag(d_1..d_r, 0..).
/// Every row operation is mirrored on `carry` (which must have m.rows() rows),
/// so on return carry = P * carry_in.
SmithForm smith_normal_form(IntMatrix& m, IntMatrix* carry = nullptr);

}  // namespace ptile
