#pragma once

#include "emb7/manifold.hpp"
#include "emb7/pairing.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace emb7 {

/// Derived data attached to a pair (u, l): the divisibility d of u, its
/// gcd with 24, and the kernel/cokernel of the doubled form mod d.
struct ClassCore {
    std::optional<H2Class> u; // present when built from manifold data
    Int d = 0;
    Int d_hat = 24;
    PairingContext ctx;
    std::vector<std::string> warnings;

    const IntMatrix& form() const { return ctx.form; }
    const KernelLattice& kernel() const { return ctx.kernel; }
    const FgAbelianGroup& cokernel() const { return ctx.cokernel; }
    std::size_t h1_rank() const { return ctx.rank; }

    /// True when the doubled form vanishes identically mod d.
    bool doubled_form_zero_mod_d() const;
};

/// Core from the divisibility alone; the entry point for sweeps that do
/// not model a particular manifold. Throws SYMMETRY_MOD_D when the doubled
/// form is not symmetric mod d.
ClassCore make_core(const Int& d, const IntMatrix& l_matrix);

/// Core from manifold data and an explicit class u. Realizability of the
/// pair is only partially checkable; membership failure is recorded as a
/// warning, not an error.
ClassCore build_core(const ManifoldData& data, const H2Class& u, const IntMatrix& l_matrix);

enum class ThetaStatus { Determined, Conditional, Unknown };

enum class Assumption { Cond3 };

/// What is known about the image of the theta homomorphism for a class b,
/// in the gauge where the zero class has zero theta.
struct ThetaImage {
    ThetaStatus status = ThetaStatus::Unknown;
    std::string assumption;    // "cond-1" or "cond-3" when Conditional
    std::optional<int> order;  // set when Determined or Conditional
    int divisor_bound = 1;     // |im theta| always divides this
    int d_hat = 24;
    std::string note;          // e.g. when the cond-1 search was skipped

    bool resolved() const { return order.has_value(); }
    /// Modulus of the quotient Z_{d_hat}/im(theta) when resolved.
    std::optional<int> quotient_modulus() const;
};

/// Determinacy resolution, in priority order: d = 0 or doubled form zero
/// mod d; kernel image a direct summand mod d_hat; the Cond3 assumption;
/// otherwise unknown with only the divisor bound.
ThetaImage theta_image(const ClassCore& core, const GroupElement& b,
                       const std::set<Assumption>& assumptions = {});

/// theta_b(y) - theta_b'(y) = 4 * (b - b') paired with y, reduced mod d_hat.
Int theta_difference(const ClassCore& core, const GroupElement& b, const GroupElement& b_prime,
                     const IntVec& y);

struct ClassificationReport {
    std::string manifold_name;
    IntVec u_coords;
    bool u_present = false;
    Int d = 0;
    int d_hat = 24;
    std::size_t h1_rank = 0;
    std::size_t kernel_rank = 0;
    IntVec cokernel_factors; // nontrivial invariant factors, 0 = free
    IntVec b_coords;
    ThetaImage theta;
    std::optional<int> orbit;          // set when determined
    std::vector<int> orbit_candidates; // otherwise, the possible values
    std::optional<int> inertia;
    std::vector<int> inertia_candidates;
    std::vector<std::string> notes;
};

/// Orbit of the knot-group action on the classes with the given invariants:
/// d_hat / (gcd(d,2) * |im theta|), with candidate sets when theta is
/// unresolved. Also fills the inertia order (12 / orbit) and the standing
/// convention notes.
ClassificationReport orbit_size(const ClassCore& core, const GroupElement& b, const ThetaImage& theta);

/// Residue class of eta + 2a in Z_{d_hat}/im(theta); requires theta
/// resolved.
Int eta_shift(const Int& eta_rep, int a, const ThetaImage& theta);

/// Whether connected sum with the knots a and a' yields the same class.
/// nullopt = indeterminate (theta unresolved and no closed-form branch).
std::optional<bool> knot_action_equiv(const ClassCore& core, const GroupElement& b, int a, int a_prime,
                                      const std::set<Assumption>& assumptions = {});

/// The congruence modulus behind knot_action_equiv, when determined.
std::optional<Int> knot_action_modulus(const ClassCore& core, const GroupElement& b,
                                       const std::set<Assumption>& assumptions = {});

} // namespace emb7
