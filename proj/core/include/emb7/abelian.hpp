#pragma once

#include "emb7/int_matrix.hpp"
#include "emb7/smith.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace emb7 {

/// gcd(n, 24); by the usual gcd convention gcd_hat(0) = 24.
Int gcd_hat(const Int& n);

/// A full-rank-or-smaller sublattice of Z^n, presented by a basis and
/// remembered together with the congruence  A v == 0 (mod d)  that cut it
/// out (d = 0 meaning equality over Z). Membership is decided by the
/// congruence, which the basis generates exactly.
class KernelLattice {
public:
    KernelLattice(IntMatrix defining, Int modulus, IntMatrix basis);

    std::size_t ambient_rank() const { return basis_.rows(); }
    std::size_t basis_rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    IntVec basis_vector(std::size_t j) const { return basis_.col_vec(j); }
    const IntMatrix& defining_matrix() const { return defining_; }
    const Int& modulus() const { return modulus_; }

    bool contains(const IntVec& v) const;

    /// [Z^n : K] for a full-rank lattice; |det| of the basis.
    Int index_in_ambient() const;

private:
    IntMatrix defining_;
    Int modulus_;
    IntMatrix basis_; // columns form a Z-basis
};

/// Z-basis of {v : A v == 0 (mod d)}; for d = 0 the exact integer kernel.
/// For d > 0 the lattice has full rank.
KernelLattice kernel_mod(const IntMatrix& a, const Int& d);

class GroupElement;

/// Finitely generated abelian group presented as Z^n modulo the column
/// span of a relation matrix. The Smith form of the relations gives the
/// invariant factors and a canonical coordinate for every element, which
/// makes equality, order and divisibility decidable.
///
/// Cheap to copy: the presentation data is shared and immutable.
class FgAbelianGroup {
public:
    FgAbelianGroup(std::size_t generator_count, IntMatrix relations);

    std::size_t generator_count() const;
    const IntMatrix& relations() const;

    /// Length generator_count; entry i is the invariant factor of the i-th
    /// canonical summand, 0 for a free summand. Normalized nonnegative,
    /// ones first, zeros last.
    const IntVec& invariant_factors() const;

    /// Invariant factors with the trivial (= 1) summands dropped.
    IntVec nontrivial_factors() const;

    std::size_t free_rank() const;
    bool is_finite() const { return free_rank() == 0; }
    std::optional<Int> order() const; // nullopt when infinite

    GroupElement element(IntVec coords) const;
    GroupElement zero() const;
    GroupElement element_from_canonical(const IntVec& canonical) const;

    /// Canonical coordinate of a raw representative: the image under the
    /// change of basis to invariant-factor form, reduced per factor.
    IntVec canonical_form(const IntVec& coords) const;

    /// All elements of a finite group, in canonical coordinate order.
    std::vector<GroupElement> all_elements() const;

    bool same_presentation(const FgAbelianGroup& other) const;

private:
    struct Data {
        std::size_t generators;
        IntMatrix relations;
        SmithDecomposition snf;
        IntVec factors; // length = generators
    };
    std::shared_ptr<const Data> data_;
};

/// Element of a presented group. Keeps the raw coordinate representative
/// (needed wherever the element is paired against honest integer vectors)
/// plus the canonical form used for equality.
class GroupElement {
public:
    GroupElement(FgAbelianGroup group, IntVec coords);

    const FgAbelianGroup& group() const { return group_; }
    const IntVec& coords() const { return coords_; }
    const IntVec& canonical() const { return canonical_; }

    bool is_zero() const;
    GroupElement operator+(const GroupElement& rhs) const;
    GroupElement operator-(const GroupElement& rhs) const;
    GroupElement scaled(const Int& k) const;

    bool operator==(const GroupElement& rhs) const;

private:
    FgAbelianGroup group_;
    IntVec coords_;
    IntVec canonical_;
};

/// coker(A mod d): Z_d^rows / im(A), presented with relations A together
/// with d times each basis vector; for d = 0 just Z^rows / im(A).
FgAbelianGroup cokernel_mod(const IntMatrix& a, const Int& d);

/// Smallest k >= 1 with k g = 0, nullopt when no such k exists.
std::optional<Int> element_order(const GroupElement& g);

/// Largest q >= 0 with g in qG + Tors(G); 0 exactly when g is torsion.
Int divisibility_mod_torsion(const GroupElement& g);

/// A retraction of the ambient group onto the subgroup generated by the
/// given columns: the image of each canonical ambient generator.
struct Retraction {
    std::vector<GroupElement> generator_images;
};

/// Enumerate the subgroup generated by the columns of gens (closure under
/// addition); ambient must be finite.
std::vector<GroupElement> subgroup_elements(const IntMatrix& gens, const FgAbelianGroup& ambient);

/// Exhaustive search for a retraction ambient -> <gens> restricting to the
/// identity on the subgroup. Throws errc::infinite_ambient on infinite
/// groups and errc::budget when the search space exceeds the budget.
std::optional<Retraction> find_retraction(const IntMatrix& gens, const FgAbelianGroup& ambient,
                                          std::uint64_t budget = 200'000'000);

bool is_direct_summand(const IntMatrix& gens, const FgAbelianGroup& ambient,
                       std::uint64_t budget = 200'000'000);

} // namespace emb7
