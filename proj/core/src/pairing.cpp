#include "emb7/pairing.hpp"

#include "emb7/error.hpp"

#include <set>

namespace emb7 {

bool PairingContext::symmetric_mod_d() const
{
    return IntMatrix::congruent_mod(doubled_form, doubled_form.transpose(), modulus);
}

PairingContext make_pairing_context(const IntMatrix& l_matrix, const Int& d)
{
    if (l_matrix.rows() != l_matrix.cols())
        throw Error(errc::dimension, "form matrix must be square");
    if (d < 0) throw Error(errc::parse, "negative modulus");
    IntMatrix doubled = l_matrix;
    for (std::size_t i = 0; i < doubled.rows(); ++i)
        for (std::size_t j = 0; j < doubled.cols(); ++j) doubled.at(i, j) *= 2;
    KernelLattice kernel = kernel_mod(doubled, d);
    FgAbelianGroup coker = cokernel_mod(doubled, d);
    return PairingContext{l_matrix.rows(), l_matrix, std::move(doubled), d, std::move(kernel), std::move(coker)};
}

static Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int cap_d(const PairingContext& ctx, const GroupElement& c, const IntVec& y)
{
    if (!c.group().same_presentation(ctx.cokernel))
        throw Error(errc::dimension, "pairing element is not in this context's cokernel");
    if (y.size() != ctx.rank) throw Error(errc::dimension, "pairing vector has wrong length");
    if (!ctx.kernel.contains(y))
        throw Error(errc::not_in_kernel, "pairing vector is not in the kernel lattice");
    return mod_reduce(dot(c.coords(), y), ctx.modulus);
}

bool check_cap_well_defined(const PairingContext& ctx)
{
    // Representatives of a coker class differ by columns of 2L (and by
    // multiples of d, which vanish mod d); so the pairing is well defined
    // iff (2L)^T y == 0 (mod d) on every kernel basis vector y.
    IntMatrix doubled_t = ctx.doubled_form.transpose();
    for (std::size_t j = 0; j < ctx.kernel.basis_rank(); ++j) {
        IntVec image = doubled_t.apply(ctx.kernel.basis_vector(j));
        for (const Int& x : image)
            if (mod_reduce(x, ctx.modulus) != 0) return false;
    }
    return true;
}

static void require_coker_element(const IntMatrix& m, const Int& d, const GroupElement& c)
{
    FgAbelianGroup expected = cokernel_mod(m, d);
    if (!c.group().same_presentation(expected))
        throw Error(errc::dimension, "element does not belong to coker(m mod d)");
}

Int unimzd_index(std::size_t v_rank, const IntMatrix& m, const Int& d, const GroupElement& c)
{
    if (m.rows() != v_rank || m.cols() != v_rank)
        throw Error(errc::dimension, "index computation needs a square matrix on V");
    if (!IntMatrix::congruent_mod(m, m.transpose(), d))
        throw Error(errc::symmetry_mod_d, "polarization is not symmetric mod d");
    require_coker_element(m, d, c);

    if (d == 0) return divisibility_mod_torsion(c);

    std::optional<Int> ord = element_order(c);
    if (!ord) throw Error(errc::non_integral, "element of infinite order in a finite cokernel");
    if (d % *ord != 0) throw Error(errc::non_integral, "element order does not divide the modulus");
    return d / *ord;
}

Int unimzd_brute(std::size_t v_rank, const IntMatrix& m, const Int& d, const GroupElement& c)
{
    if (m.rows() != v_rank || m.cols() != v_rank)
        throw Error(errc::dimension, "index computation needs a square matrix on V");
    require_coker_element(m, d, c);

    if (d == 0) {
        KernelLattice kernel = kernel_mod(m, 0);
        IntVec values;
        for (std::size_t j = 0; j < kernel.basis_rank(); ++j)
            values.push_back(dot(c.coords(), kernel.basis_vector(j)));
        return vec_gcd(values);
    }

    if (v_rank > 4 || d > 24)
        throw Error(errc::budget, "enumeration bound exceeded (rank <= 4, d <= 24)");

    long long dd = to_ll(d);
    std::vector<long long> mm(v_rank * v_rank), cc(v_rank);
    for (std::size_t i = 0; i < v_rank; ++i) {
        cc[i] = to_ll(mod_reduce(c.coords()[i], d));
        for (std::size_t j = 0; j < v_rank; ++j) mm[i * v_rank + j] = to_ll(mod_reduce(m.at(i, j), d));
    }

    std::set<long long> values;
    std::vector<long long> v(v_rank, 0);
    for (;;) {
        bool in_kernel = true;
        for (std::size_t i = 0; i < v_rank && in_kernel; ++i) {
            long long acc = 0;
            for (std::size_t j = 0; j < v_rank; ++j) acc += mm[i * v_rank + j] * v[j];
            in_kernel = (acc % dd == 0);
        }
        if (in_kernel) {
            long long val = 0;
            for (std::size_t j = 0; j < v_rank; ++j) val += cc[j] * v[j];
            values.insert(((val % dd) + dd) % dd);
        }
        std::size_t i = v_rank;
        for (;;) {
            if (i == 0) {
                // values form a subgroup of Z_d, so the index is exact
                return Int(dd / static_cast<long long>(values.size()));
            }
            --i;
            if (++v[i] < dd) break;
            v[i] = 0;
        }
    }
}

} // namespace emb7
