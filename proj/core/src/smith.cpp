#include "emb7/smith.hpp"

#include <algorithm>

namespace emb7 {

IntVec SmithDecomposition::diagonal() const
{
    std::size_t n = std::min(s.rows(), s.cols());
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    for (const Int& x : diagonal())
        if (x != 0) ++r;
    return r;
}

namespace {

// Elementary operations applied to S are mirrored on U (rows) or V (cols),
// and inverted on u_inv / v_inv, keeping  U*A*V = S  and  U*U_inv = I,
// V_inv*V = I  as loop invariants.
struct Worker {
    SmithDecomposition d;

    explicit Worker(const IntMatrix& a)
    {
        d.source = a;
        d.s = a;
        d.u = IntMatrix::identity(a.rows());
        d.u_inv = IntMatrix::identity(a.rows());
        d.v = IntMatrix::identity(a.cols());
        d.v_inv = IntMatrix::identity(a.cols());
    }

    void row_swap(std::size_t i, std::size_t j)
    {
        d.s.swap_rows(i, j);
        d.u.swap_rows(i, j);
        d.u_inv.swap_cols(i, j);
    }

    void col_swap(std::size_t i, std::size_t j)
    {
        d.s.swap_cols(i, j);
        d.v.swap_cols(i, j);
        d.v_inv.swap_rows(i, j);
    }

    // row dst += q * row src
    void row_add(std::size_t dst, std::size_t src, const Int& q)
    {
        d.s.add_row_multiple(dst, src, q);
        d.u.add_row_multiple(dst, src, q);
        d.u_inv.add_col_multiple(src, dst, -q);
    }

    // col dst += q * col src
    void col_add(std::size_t dst, std::size_t src, const Int& q)
    {
        d.s.add_col_multiple(dst, src, q);
        d.v.add_col_multiple(dst, src, q);
        d.v_inv.add_row_multiple(src, dst, -q);
    }

    void row_negate(std::size_t i)
    {
        d.s.scale_row(i, -1);
        d.u.scale_row(i, -1);
        d.u_inv.scale_col(i, -1);
    }

    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const
    {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < d.s.rows(); ++i)
            for (std::size_t j = t; j < d.s.cols(); ++j) {
                const Int& x = d.s.at(i, j);
                if (x == 0) continue;
                Int ax = abs_int(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    void run()
    {
        std::size_t n = std::min(d.s.rows(), d.s.cols());
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(t, pr, pc)) break; // remaining block is zero
            row_swap(t, pr);
            col_swap(t, pc);

            for (;;) {
                // Clear column t below the pivot, then row t to its right.
                bool dirty = false;
                for (std::size_t i = t + 1; i < d.s.rows(); ++i) {
                    if (d.s.at(i, t) == 0) continue;
                    Int q = floordiv(d.s.at(i, t), d.s.at(t, t));
                    row_add(i, t, -q);
                    if (d.s.at(i, t) != 0) {
                        // remainder smaller than the pivot: promote it
                        row_swap(t, i);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                for (std::size_t j = t + 1; j < d.s.cols(); ++j) {
                    if (d.s.at(t, j) == 0) continue;
                    Int q = floordiv(d.s.at(t, j), d.s.at(t, t));
                    col_add(j, t, -q);
                    if (d.s.at(t, j) != 0) {
                        col_swap(t, j);
                        dirty = true;
                    }
                }
                if (dirty) continue;

                // Pivot must divide every remaining entry; if not, fold the
                // offending row into row t and resume.
                bool divides = true;
                for (std::size_t i = t + 1; i < d.s.rows() && divides; ++i)
                    for (std::size_t j = t + 1; j < d.s.cols() && divides; ++j)
                        if (floormod(d.s.at(i, j), d.s.at(t, t)) != 0) {
                            row_add(t, i, 1);
                            divides = false;
                        }
                if (divides) break;
            }

            if (d.s.at(t, t) < 0) row_negate(t);
        }
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    Worker w(a);
    w.run();
    return std::move(w.d);
}

} // namespace emb7
