#include "emb7/manifold.hpp"

#include "emb7/error.hpp"

#include <algorithm>

namespace emb7 {

namespace {

// Characteristic polynomial of q by the Faddeev-LeVerrier recurrence; the
// divisions are exact. Returns [1, c1, ..., cn] for x^n + c1 x^{n-1} + ... + cn.
IntVec char_poly(const IntMatrix& q)
{
    std::size_t n = q.rows();
    IntVec coeff(n + 1);
    coeff[0] = 1;
    IntMatrix b = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix a = q * b;
        Int trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += a.at(i, i);
        coeff[k] = -trace / Int(k);
        b = a;
        for (std::size_t i = 0; i < n; ++i) b.at(i, i) += coeff[k];
    }
    return coeff;
}

int sign_variations(const IntVec& coeff)
{
    int variations = 0;
    int last = 0;
    for (const Int& c : coeff) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

} // namespace

Int signature_of(const IntMatrix& q)
{
    if (q.rows() != q.cols()) throw Error(errc::dimension, "signature of a non-square matrix");
    IntVec p = char_poly(q);
    int positive = sign_variations(p);
    IntVec p_neg = p; // coefficients of p(-x), up to an overall sign
    for (std::size_t k = 1; k < p_neg.size(); k += 2) p_neg[k] = -p_neg[k];
    int negative = sign_variations(p_neg);
    return Int(positive) - Int(negative);
}

ManifoldData validate(ManifoldData data)
{
    std::size_t n = data.h2_rank;
    if (data.intersection_form.rows() != n || data.intersection_form.cols() != n)
        throw Error(errc::dimension, "intersection form must be h2_rank x h2_rank");
    if (data.w2_dual.size() != n)
        throw Error(errc::dimension, "w2 dual vector must have length h2_rank");
    for (int b : data.w2_dual)
        if (b != 0 && b != 1) throw Error(errc::parse, "w2 dual entries must be 0 or 1");

    if (!data.intersection_form.is_symmetric())
        throw Error(errc::symmetry, "intersection form is not symmetric");
    if (signature_of(data.intersection_form) != data.signature)
        throw Error(errc::signature_mismatch, "declared signature does not match the form");
    if (abs_int(data.intersection_form.det()) != 1)
        throw Error(errc::unimodular, "intersection form is not unimodular");

    // Wu compatibility: x^T Q x == x^T Q w (mod 2) for all x; it is enough
    // to test the standard basis because x -> x^T Q x is linear mod 2.
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = data.w2_dual[i];
    IntVec qw = data.intersection_form.apply(w);
    for (std::size_t i = 0; i < n; ++i)
        if (floormod(data.intersection_form.at(i, i) - qw[i], 2) != 0)
            throw Error(errc::not_characteristic, "w2 dual fails the characteristic-element check");

    return data;
}

bool h2diff_contains(const ManifoldData& data, const H2Class& u)
{
    if (u.coords.size() != data.h2_rank)
        throw Error(errc::dimension, "class length does not match h2_rank");
    for (std::size_t i = 0; i < data.h2_rank; ++i)
        if (floormod(u.coords[i] - data.w2_dual[i], 2) != 0) return false;
    IntVec qu = data.intersection_form.apply(u.coords);
    Int self = 0;
    for (std::size_t i = 0; i < data.h2_rank; ++i) self += u.coords[i] * qu[i];
    return self == data.signature;
}

std::vector<H2Class> h2diff_enumerate(const ManifoldData& data, const Int& coeff_bound)
{
    std::vector<H2Class> out;
    std::size_t n = data.h2_rank;
    IntVec v(n, -coeff_bound);
    for (;;) {
        H2Class u{v};
        if (h2diff_contains(data, u)) out.push_back(u);
        std::size_t i = n;
        bool done = (n == 0);
        while (i > 0) {
            --i;
            v[i] += 1;
            if (v[i] <= coeff_bound) break;
            v[i] = -coeff_bound;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), [](const H2Class& a, const H2Class& b) { return a.coords < b.coords; });
    return out;
}

} // namespace emb7
