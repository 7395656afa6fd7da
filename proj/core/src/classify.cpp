#include "emb7/classify.hpp"

#include "emb7/error.hpp"

#include <algorithm>

namespace emb7 {

bool ClassCore::doubled_form_zero_mod_d() const
{
    for (const Int& x : ctx.doubled_form.entries())
        if (mod_reduce(x, d) != 0) return false;
    return true;
}

ClassCore make_core(const Int& d, const IntMatrix& l_matrix)
{
    if (d < 0) throw Error(errc::parse, "divisibility must be nonnegative");
    PairingContext ctx = make_pairing_context(l_matrix, d);
    if (!ctx.symmetric_mod_d())
        throw Error(errc::symmetry_mod_d, "doubled form is not symmetric mod d");
    ClassCore core{std::nullopt, d, gcd_hat(d), std::move(ctx), {}};
    return core;
}

ClassCore build_core(const ManifoldData& data, const H2Class& u, const IntMatrix& l_matrix)
{
    if (u.coords.size() != data.h2_rank)
        throw Error(errc::dimension, "class u has wrong length for this manifold");
    if (l_matrix.rows() != data.h1_rank || l_matrix.cols() != data.h1_rank)
        throw Error(errc::dimension, "form matrix must be h1_rank x h1_rank");
    ClassCore core = make_core(u.divisibility(), l_matrix);
    core.u = u;
    if (!h2diff_contains(data, u))
        core.warnings.push_back("u is not in the admissible set (mod-2 class or self-intersection "
                                "mismatch); results describe the formal core only");
    return core;
}

std::optional<int> ThetaImage::quotient_modulus() const
{
    if (!order) return std::nullopt;
    return d_hat / *order;
}

namespace {

int divisor_bound_for(int d_hat)
{
    return d_hat / static_cast<int>(to_ll(gcd_int(d_hat, 4)));
}

// |subgroup of Z_{d_hat} generated by 4*(b . y_j) over the kernel basis|,
// in the gauge where the zero class has zero theta.
int theta_order_from_pairing(const ClassCore& core, const GroupElement& b)
{
    Int g = core.d_hat;
    for (std::size_t j = 0; j < core.kernel().basis_rank(); ++j) {
        IntVec y = core.kernel().basis_vector(j);
        Int value = 0;
        for (std::size_t i = 0; i < y.size(); ++i) value += b.coords()[i] * y[i];
        g = gcd_int(g, 4 * value);
    }
    return static_cast<int>(to_ll(core.d_hat / g));
}

} // namespace

ThetaImage theta_image(const ClassCore& core, const GroupElement& b, const std::set<Assumption>& assumptions)
{
    if (!b.group().same_presentation(core.cokernel()))
        throw Error(errc::dimension, "b does not belong to the core's cokernel");

    ThetaImage theta;
    theta.d_hat = static_cast<int>(to_ll(core.d_hat));
    theta.divisor_bound = divisor_bound_for(theta.d_hat);

    const bool strongest = (core.d == 0) || core.doubled_form_zero_mod_d();
    bool summand = false;
    if (!strongest) {
        // Is the kernel's image mod d_hat a direct summand of Z_{d_hat}^r?
        IntMatrix gens(core.h1_rank(), core.kernel().basis_rank());
        for (std::size_t j = 0; j < core.kernel().basis_rank(); ++j) {
            IntVec col = core.kernel().basis_vector(j);
            for (Int& x : col) x = mod_reduce(x, core.d_hat);
            gens.set_col(j, col);
        }
        IntMatrix scaled = IntMatrix::identity(core.h1_rank());
        for (std::size_t i = 0; i < core.h1_rank(); ++i) scaled.at(i, i) = core.d_hat;
        FgAbelianGroup ambient(core.h1_rank(), scaled);
        try {
            summand = is_direct_summand(gens, ambient, 4'000'000);
        } catch (const Error& e) {
            if (e.code() != errc::budget) throw;
            // the search is an oracle, not a proof of absence; fall through
            theta.note = "cond-1 summand search skipped (budget); resolution may be conservative";
        }
    }

    if (strongest) {
        theta.status = ThetaStatus::Determined;
        theta.order = theta_order_from_pairing(core, b);
    } else if (summand) {
        theta.status = ThetaStatus::Conditional;
        theta.assumption = "cond-1";
        theta.order = theta_order_from_pairing(core, b);
    } else if (assumptions.count(Assumption::Cond3)) {
        theta.status = ThetaStatus::Conditional;
        theta.assumption = "cond-3";
        theta.order = theta_order_from_pairing(core, b);
    } else {
        theta.status = ThetaStatus::Unknown;
    }
    return theta;
}

Int theta_difference(const ClassCore& core, const GroupElement& b, const GroupElement& b_prime,
                     const IntVec& y)
{
    GroupElement diff = b - b_prime;
    Int paired = cap_d(core.ctx, diff, y);
    return mod_reduce(4 * paired, core.d_hat);
}

ClassificationReport orbit_size(const ClassCore& core, const GroupElement& b, const ThetaImage& theta)
{
    if (!b.group().same_presentation(core.cokernel()))
        throw Error(errc::dimension, "b does not belong to the core's cokernel");

    ClassificationReport report;
    report.u_present = core.u.has_value();
    if (core.u) report.u_coords = core.u->coords;
    report.d = core.d;
    report.d_hat = static_cast<int>(to_ll(core.d_hat));
    report.h1_rank = core.h1_rank();
    report.kernel_rank = core.kernel().basis_rank();
    report.cokernel_factors = core.cokernel().nontrivial_factors();
    report.b_coords = b.coords();
    report.theta = theta;

    const Int even_gcd = gcd_int(core.d, 2); // = 2 for d = 0
    auto orbit_for = [&](int order) -> int {
        Int denom = even_gcd * order;
        if (core.d_hat % denom != 0)
            throw Error(errc::non_integral, "orbit count formula failed to divide");
        return static_cast<int>(to_ll(core.d_hat / denom));
    };

    if (theta.order) {
        report.orbit = orbit_for(*theta.order);
    } else {
        std::vector<int> candidates;
        for (int t = 1; t <= theta.divisor_bound; ++t)
            if (theta.divisor_bound % t == 0) candidates.push_back(orbit_for(t));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.size() == 1) {
            // the bound pins the order even though theta itself is unresolved
            report.orbit = candidates.front();
        } else {
            report.orbit_candidates = candidates;
        }
    }

    auto inertia_for = [](int orbit) {
        if (12 % orbit != 0) throw Error(errc::non_integral, "orbit does not divide 12");
        return 12 / orbit;
    };
    if (report.orbit) {
        report.inertia = inertia_for(*report.orbit);
    } else {
        for (int o : report.orbit_candidates) report.inertia_candidates.push_back(inertia_for(o));
        std::sort(report.inertia_candidates.begin(), report.inertia_candidates.end());
    }

    report.notes.push_back("numeric occurrences of the class u are read through its divisibility d");
    report.notes.push_back("theta image is computed in the gauge where the zero class has zero theta");
    if (report.u_present)
        report.notes.push_back("realizability of (u, l) is checked only up to the necessary "
                               "conditions; UNVERIFIED beyond them");
    if (theta.status == ThetaStatus::Conditional)
        report.notes.push_back("theta resolution is conditional on " + theta.assumption);
    if (!theta.note.empty()) report.notes.push_back(theta.note);
    if (theta.status == ThetaStatus::Unknown && !report.orbit)
        report.notes.push_back("theta image undetermined; orbit reported as a candidate set");
    for (const std::string& w : core.warnings) report.notes.push_back("warning: " + w);
    return report;
}

Int eta_shift(const Int& eta_rep, int a, const ThetaImage& theta)
{
    std::optional<int> modulus = theta.quotient_modulus();
    if (!modulus) throw Error(errc::unresolved_theta, "eta shift needs a resolved theta image");
    return mod_reduce(eta_rep + 2 * Int(a), Int(*modulus));
}

std::optional<Int> knot_action_modulus(const ClassCore& core, const GroupElement& b,
                                       const std::set<Assumption>& assumptions)
{
    if (core.d == 0) {
        Int div_b = divisibility_mod_torsion(b);
        return 2 * gcd_int(div_b, 6);
    }
    if (core.doubled_form_zero_mod_d()) {
        // ord(4b) read as the order of the element 4b in the cokernel
        std::optional<Int> ord = element_order(b.scaled(4));
        if (!ord) throw Error(errc::non_integral, "4b has infinite order with d nonzero");
        if (core.d % *ord != 0) throw Error(errc::non_integral, "ord(4b) does not divide d");
        Int modulus = gcd_hat(core.d / *ord) / gcd_int(core.d, 2);
        return modulus;
    }
    ThetaImage theta = theta_image(core, b, assumptions);
    ClassificationReport report = orbit_size(core, b, theta);
    if (report.orbit) return Int(*report.orbit);
    return std::nullopt;
}

std::optional<bool> knot_action_equiv(const ClassCore& core, const GroupElement& b, int a, int a_prime,
                                      const std::set<Assumption>& assumptions)
{
    std::optional<Int> modulus = knot_action_modulus(core, b, assumptions);
    if (!modulus) return std::nullopt;
    return floormod(Int(a) - Int(a_prime), *modulus) == 0;
}

} // namespace emb7
