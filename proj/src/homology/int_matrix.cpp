#include <algorithm>
#include <cstdlib>
#include <limits>
#include <utility>

#include "ptile/error.hpp"
#include "ptile/int_matrix.hpp"

namespace ptile {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
        throw Error(ErrorCode::overflow, "integer matrix entry exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::bad_input, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) = narrow(static_cast<Wide>((*this)(dst, c)) + static_cast<Wide>(factor) * (*this)(src, c));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) = narrow(static_cast<Wide>((*this)(r, dst)) + static_cast<Wide>(factor) * (*this)(r, src));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::length_mismatch, "matrix product shape mismatch");
    IntMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) {
            Wide acc = 0;
            for (std::size_t k = 0; k < lhs.cols(); ++k) acc += static_cast<Wide>(lhs(r, k)) * rhs(k, c);
            out(r, c) = narrow(acc);
        }
    return out;
}

std::size_t exact_rank(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    std::int64_t prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m(r, col) != 0 && (pivot == rows || abs64(m(r, col)) < abs64(m(pivot, col)))) pivot = r;
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);
        // Bareiss step: every division below is exact.
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                const Wide v = static_cast<Wide>(m(rank, col)) * m(r, c) -
                                   static_cast<Wide>(m(r, col)) * m(rank, c);
                m(r, c) = narrow(v / prev_pivot);
            }
            m(r, col) = 0;
        }
        prev_pivot = m(rank, col);
        ++rank;
    }
    return rank;
}

SmithForm smith_normal_form(IntMatrix& m, IntMatrix* carry) {
    if (carry && carry->rows() != m.rows())
        throw Error(ErrorCode::length_mismatch, "carry matrix must have as many rows as the reduced matrix");

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        if (carry) carry->swap_rows(a, b);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t f) {
        m.add_row_multiple(dst, src, f);
        if (carry) carry->add_row_multiple(dst, src, f);
    };
    auto negate_row = [&](std::size_t r) {
        m.negate_row(r);
        if (carry) carry->negate_row(r);
    };

    SmithForm form;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (m(r, c) != 0 && (pr == rows || abs64(m(r, c)) < abs64(m(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        swap_rows(t, pr);
        m.swap_cols(t, pc);

        for (;;) {
            bool changed = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m(r, t) == 0) continue;
                add_row(r, t, -(m(r, t) / m(t, t)));
                if (m(r, t) != 0) {
                    swap_rows(t, r);
                    changed = true;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m(t, c) == 0) continue;
                m.add_col_multiple(c, t, -(m(t, c) / m(t, t)));
                if (m(t, c) != 0) {
                    m.swap_cols(t, c);
                    changed = true;
                }
            }
            if (changed) continue;

            // Pivot row and column are clear; enforce divisibility of the rest.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m(r, c) % m(t, t) != 0) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            add_row(t, bad, 1);
        }
        if (m(t, t) < 0) negate_row(t);
        form.invariants.push_back(m(t, t));
    }
    return form;
}

}  // namespace ptile
