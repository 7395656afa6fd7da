#include "emb7/int_matrix.hpp"

#include "emb7/error.hpp"

#include <sstream>
#include <utility>

namespace emb7 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, IntVec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw Error(errc::dimension, "entry count does not match matrix shape");
}

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(errc::dimension, "ragged initializer");
        std::size_t j = 0;
        for (long long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v)
{
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_) throw Error(errc::dimension, "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const
{
    if (v.size() != cols_) throw Error(errc::dimension, "matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out = *this;
    for (Int& x : out.entries_) x = -x;
    return out;
}

bool IntMatrix::is_zero() const
{
    for (const Int& x : entries_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::congruent_mod(const IntMatrix& a, const IntMatrix& b, const Int& d)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        Int diff = a.entries_[i] - b.entries_[i];
        if (d == 0 ? diff != 0 : floormod(diff, d) != 0) return false;
    }
    return true;
}

IntVec IntMatrix::col_vec(std::size_t c) const
{
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void IntMatrix::set_col(std::size_t c, const IntVec& v)
{
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

IntMatrix IntMatrix::cols_appended(const IntMatrix& extra) const
{
    if (extra.rows_ != rows_) throw Error(errc::dimension, "row count mismatch when appending columns");
    IntMatrix out(rows_, cols_ + extra.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < extra.cols_; ++j) out.at(i, cols_ + j) = extra.at(i, j);
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::scale_row(std::size_t i, const Int& s)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) *= s;
}

void IntMatrix::scale_col(std::size_t j, const Int& s)
{
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) *= s;
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q)
{
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q)
{
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

Int IntMatrix::det() const
{
    if (rows_ != cols_) throw Error(errc::dimension, "determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;

    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev; // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

} // namespace emb7
