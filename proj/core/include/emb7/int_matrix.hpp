#pragma once

#include "emb7/ints.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace emb7 {

/// Dense integer matrix with exact entries, row-major storage.
/// Empty shapes (0 x n, n x 0) are valid and behave as expected under
/// multiplication and transposition.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols)
    {
    }

    IntMatrix(std::size_t rows, std::size_t cols, IntVec entries);

    /// Convenience builder from nested braces: IntMatrix::of({{2, 4}, {6, 8}}).
    static IntMatrix of(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    static IntMatrix column(const IntVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const IntVec& entries() const { return entries_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec apply(const IntVec& v) const; // this * v
    IntMatrix operator-() const;

    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_symmetric() const;
    /// Entrywise congruence a == b (mod d); d = 0 means equality.
    static bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Int& d);

    IntVec col_vec(std::size_t c) const;
    void set_col(std::size_t c, const IntVec& v);
    IntMatrix cols_appended(const IntMatrix& extra) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, const Int& s);
    void scale_col(std::size_t j, const Int& s);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q); // row dst += q * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

    /// Exact determinant (Bareiss fraction-free elimination); square only.
    Int det() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec entries_;
};

} // namespace emb7
