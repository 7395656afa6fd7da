#pragma once

#include "emb7/int_matrix.hpp"

#include <string>
#include <vector>

namespace emb7 {

/// Homological input for a closed connected orientable 4-manifold with
/// torsion-free first homology. The third-homology rank equals h1_rank by
/// duality and is not stored separately.
struct ManifoldData {
    std::string name;
    std::size_t h1_rank = 0;
    std::size_t h2_rank = 0;
    IntMatrix intersection_form; // h2_rank x h2_rank, unimodular symmetric
    std::vector<int> w2_dual;    // length h2_rank, entries 0/1
    Int signature = 0;
};

/// Exact signature of a symmetric integer matrix: positive minus negative
/// eigenvalue count, via the characteristic polynomial and Descartes' rule
/// (exact for real-rooted polynomials).
Int signature_of(const IntMatrix& q);

/// Checks all structural invariants; throws Error with codes SYMMETRY,
/// SIGNATURE_MISMATCH, UNIMODULAR, NOT_CHARACTERISTIC (in that order).
ManifoldData validate(ManifoldData data);

/// A second-homology class together with its divisibility (gcd of the
/// coordinates, 0 for the zero class).
struct H2Class {
    IntVec coords;

    Int divisibility() const { return vec_gcd(coords); }
    bool operator==(const H2Class&) const = default;
};

/// Membership in the set of possible kappa-values: mod-2 reduction equals
/// the dual of w2 and self-intersection equals the signature.
bool h2diff_contains(const ManifoldData& data, const H2Class& u);

/// All members with coordinates bounded by coeff_bound in absolute value,
/// sorted lexicographically.
std::vector<H2Class> h2diff_enumerate(const ManifoldData& data, const Int& coeff_bound);

} // namespace emb7
