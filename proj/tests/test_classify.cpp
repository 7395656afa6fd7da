#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emb7/classify.hpp"
#include "emb7/error.hpp"
#include "emb7/s1s3.hpp"

using namespace emb7;

namespace {

ClassCore s1s3_core(long long l)
{
    IntMatrix form(1, 1);
    form.at(0, 0) = l;
    return make_core(0, form);
}

} // namespace

TEST_CASE("build_core on the S1xS3 shape")
{
    ClassCore nonzero = s1s3_core(5);
    CHECK(nonzero.d == 0);
    CHECK(nonzero.d_hat == 24);
    CHECK(nonzero.kernel().basis_rank() == 0);
    CHECK(nonzero.cokernel().nontrivial_factors() == IntVec{10});

    ClassCore zero = s1s3_core(0);
    CHECK(zero.kernel().basis_rank() == 1);
    CHECK(zero.cokernel().free_rank() == 1);
}

TEST_CASE("build_core flags non-admissible u as a warning, not an error")
{
    ManifoldData cp2{"odd", 0, 1, IntMatrix::of({{1}}), {1}, 1};
    cp2 = validate(cp2);
    ClassCore core = build_core(cp2, H2Class{{5}}, IntMatrix(0, 0));
    CHECK(core.d == 5);
    CHECK(!core.warnings.empty()); // 25 != signature

    ClassCore fine = build_core(cp2, H2Class{{1}}, IntMatrix(0, 0));
    CHECK(fine.warnings.empty());
}

TEST_CASE("build_core rejects asymmetric forms mod d")
{
    ManifoldData torus_like{"t", 2, 0, IntMatrix(0, 0), {}, 0};
    torus_like = validate(torus_like);
    IntMatrix bad = IntMatrix::of({{0, 1}, {0, 0}});
    CHECK_THROWS_AS((void)build_core(torus_like, H2Class{{}}, bad), Error);
}

TEST_CASE("degenerate simply-connected core")
{
    ClassCore core = make_core(0, IntMatrix(0, 0));
    GroupElement b = core.cokernel().zero();
    ThetaImage theta = theta_image(core, b);
    CHECK(theta.status == ThetaStatus::Determined);
    CHECK(*theta.order == 1);
    ClassificationReport report = orbit_size(core, b, theta);
    CHECK(*report.orbit == 12);

    ClassCore d24 = make_core(24, IntMatrix(0, 0));
    ClassificationReport r24 = orbit_size(d24, d24.cokernel().zero(), theta_image(d24, d24.cokernel().zero()));
    CHECK(*r24.orbit == 12);

    ClassCore d2 = make_core(2, IntMatrix(0, 0));
    ClassificationReport r2 = orbit_size(d2, d2.cokernel().zero(), theta_image(d2, d2.cokernel().zero()));
    CHECK(*r2.orbit == 1);
}

TEST_CASE("theta difference on pinned inputs")
{
    ClassCore zero8 = make_core(8, IntMatrix(2, 2));
    GroupElement b = zero8.cokernel().element(IntVec{1, 0});
    GroupElement b0 = zero8.cokernel().zero();
    CHECK(theta_difference(zero8, b, b, IntVec{2, 1}) == 0);
    CHECK(theta_difference(zero8, b, b0, IntVec{2, 1}) == 0); // 4 * 2 mod 8

    ClassCore zero0 = make_core(0, IntMatrix(1, 1));
    GroupElement c = zero0.cokernel().element(IntVec{1});
    CHECK(theta_difference(zero0, c, zero0.cokernel().zero(), IntVec{1}) == 4); // 4 mod 24
}

TEST_CASE("theta difference is a cocycle and linear in y")
{
    ClassCore core = make_core(12, IntMatrix::of({{3, 0}, {0, 6}}));
    std::vector<IntVec> reps = {{0, 0}, {1, 0}, {0, 1}, {2, 3}, {5, 1}};
    for (const IntVec& rb : reps)
        for (const IntVec& rb2 : reps)
            for (const IntVec& rb3 : reps) {
                GroupElement b1 = core.cokernel().element(rb);
                GroupElement b2 = core.cokernel().element(rb2);
                GroupElement b3 = core.cokernel().element(rb3);
                for (std::size_t i = 0; i < core.kernel().basis_rank(); ++i) {
                    IntVec y = core.kernel().basis_vector(i);
                    Int ab = theta_difference(core, b1, b2, y);
                    Int bc = theta_difference(core, b2, b3, y);
                    Int ac = theta_difference(core, b1, b3, y);
                    CHECK(mod_reduce(ab + bc, core.d_hat) == ac);

                    for (std::size_t j = 0; j < core.kernel().basis_rank(); ++j) {
                        IntVec y2 = core.kernel().basis_vector(j);
                        IntVec sum(y.size());
                        for (std::size_t k = 0; k < y.size(); ++k) sum[k] = y[k] + y2[k];
                        Int lhs = theta_difference(core, b1, b2, sum);
                        Int rhs = mod_reduce(theta_difference(core, b1, b2, y) +
                                                 theta_difference(core, b1, b2, y2),
                                             core.d_hat);
                        CHECK(lhs == rhs);
                    }
                }
            }
}

TEST_CASE("theta image resolution ladder")
{
    // (i) d = 0
    ClassCore l0 = s1s3_core(0);
    GroupElement b3 = l0.cokernel().element(IntVec{3});
    ThetaImage t3 = theta_image(l0, b3);
    CHECK(t3.status == ThetaStatus::Determined);
    CHECK(*t3.order == 2); // subgroup generated by 12 in Z_24
    CHECK(*orbit_size(l0, b3, t3).orbit == 6);

    // trivial kernel forces order 1
    ClassCore l5 = s1s3_core(5);
    GroupElement b = l5.cokernel().element(IntVec{1});
    ThetaImage t = theta_image(l5, b);
    CHECK(t.status == ThetaStatus::Determined);
    CHECK(*t.order == 1);

    // (i) second branch: doubled form vanishing mod d
    ClassCore flat = make_core(24, IntMatrix::of({{12}}));
    GroupElement b24 = flat.cokernel().element(IntVec{3}); // 4b = 12, order 2
    ThetaImage t24 = theta_image(flat, b24);
    CHECK(t24.status == ThetaStatus::Determined);
    CHECK(*t24.order == 2);
    CHECK(*orbit_size(flat, b24, t24).orbit == 6);

    // (ii) kernel image a direct summand mod d_hat
    ClassCore cond1 = make_core(8, IntMatrix::of({{2}}));
    // 2L = [4], kernel mod 8 = 2Z, image mod 8 = {0,2,4,6} = a summand? no:
    // 2Z_8 inside Z_8 is not a summand, so this stays unresolved
    GroupElement bc = cond1.cokernel().element(IntVec{1});
    ThetaImage tc = theta_image(cond1, bc);
    CHECK(tc.status == ThetaStatus::Unknown);
    CHECK(tc.divisor_bound == 2);

    // but the user may assert cond-3
    ThetaImage tc3 = theta_image(cond1, bc, {Assumption::Cond3});
    CHECK(tc3.status == ThetaStatus::Conditional);
    CHECK(tc3.assumption == "cond-3");

    // genuine cond-1: kernel reduces to the whole ambient group mod d_hat
    ClassCore cond1b = make_core(9, IntMatrix::of({{3}}));
    // d_hat = 3, 2L = [6], kernel mod 9 = 3Z, mod 3 that is {0}, a summand
    GroupElement b9 = cond1b.cokernel().element(IntVec{1});
    ThetaImage t9 = theta_image(cond1b, b9);
    CHECK(t9.status == ThetaStatus::Conditional);
    CHECK(t9.assumption == "cond-1");
}

TEST_CASE("unknown theta yields candidate orbit sets")
{
    ClassCore cond1 = make_core(8, IntMatrix::of({{2}}));
    GroupElement bc = cond1.cokernel().element(IntVec{1});
    ThetaImage tc = theta_image(cond1, bc);
    REQUIRE(tc.status == ThetaStatus::Unknown);
    ClassificationReport report = orbit_size(cond1, bc, tc);
    CHECK(!report.orbit);
    CHECK(report.orbit_candidates == std::vector<int>{2, 4});
    CHECK(report.inertia_candidates == std::vector<int>{3, 6});
}

TEST_CASE("orbit and inertia multiply to 12 whenever determined")
{
    for (int d : {0, 1, 2, 3, 4, 5, 6, 8, 10, 12, 24})
        for (long long l : {0, 1, 2, 3, 6, 12}) {
            IntMatrix form(1, 1);
            form.at(0, 0) = l;
            IntMatrix doubled = form;
            doubled.at(0, 0) *= 2;
            if (!IntMatrix::congruent_mod(doubled, doubled.transpose(), d)) continue;
            ClassCore core = make_core(d, form);
            for (long long bb = -6; bb <= 6; ++bb) {
                GroupElement b = core.cokernel().element(IntVec{bb});
                ThetaImage theta = theta_image(core, b);
                ClassificationReport report = orbit_size(core, b, theta);
                if (report.orbit) {
                    CHECK(*report.orbit * *report.inertia == 12);
                    CHECK(12 % *report.orbit == 0);
                } else {
                    for (std::size_t i = 0; i < report.orbit_candidates.size(); ++i)
                        CHECK(report.orbit_candidates[i] * report.inertia_candidates[report.inertia_candidates.size() - 1 - i] == 12);
                }
            }
        }
}

TEST_CASE("orbit 1 whenever d is prime to 4 and 3")
{
    for (int d : {1, 2, 5, 7, 10, 11, 13, 14})
        for (long long l : {0, 1, 3, 7}) {
            IntMatrix form(1, 1);
            form.at(0, 0) = l;
            IntMatrix doubled = form;
            doubled.at(0, 0) *= 2;
            if (!IntMatrix::congruent_mod(doubled, doubled.transpose(), d)) continue;
            ClassCore core = make_core(d, form);
            for (long long bb : {0, 1, 2, 5}) {
                GroupElement b = core.cokernel().element(IntVec{bb});
                ClassificationReport report = orbit_size(core, b, theta_image(core, b));
                REQUIRE(report.orbit.has_value());
                CHECK(*report.orbit == 1);
            }
        }
}

TEST_CASE("even-image identity: orbit equals |2Z_dhat| / theta order")
{
    for (int d : {0, 2, 4, 6, 8, 12, 24}) {
        Int scale = d == 0 ? Int(0) : Int(d) / gcd_int(d, 2);
        IntMatrix form(2, 2);
        form.at(0, 0) = scale;
        form.at(1, 1) = 2 * scale;
        ClassCore core = make_core(d, form);
        for (const IntVec& coords : std::vector<IntVec>{{0, 0}, {1, 0}, {3, 2}, {1, 5}}) {
            GroupElement b = core.cokernel().element(coords);
            ThetaImage theta = theta_image(core, b);
            REQUIRE(theta.status == ThetaStatus::Determined);
            ClassificationReport report = orbit_size(core, b, theta);
            Int even_count = core.d_hat / gcd_int(core.d_hat, 2);
            CHECK(Int(*report.orbit) * *theta.order == even_count);
        }
    }
}

TEST_CASE("d = 0 orbit equals the closed form 2 gcd(div b, 6)")
{
    for (long long l : {0, 1, 4})
        for (long long bb = -12; bb <= 12; ++bb) {
            IntMatrix form(1, 1);
            form.at(0, 0) = l;
            ClassCore core = make_core(0, form);
            GroupElement b = core.cokernel().element(IntVec{bb});
            ClassificationReport report = orbit_size(core, b, theta_image(core, b));
            Int div_b = divisibility_mod_torsion(b);
            CHECK(Int(*report.orbit) == 2 * gcd_int(div_b, 6));
            // the derivation: gcd_hat(4 div b) / 2 is the same number
            CHECK(Int(*report.orbit) == gcd_hat(4 * div_b) / 2);
        }
}

TEST_CASE("eta shift")
{
    ThetaImage trivial;
    trivial.status = ThetaStatus::Determined;
    trivial.order = 1;
    trivial.d_hat = 24;
    trivial.divisor_bound = 6;
    CHECK(eta_shift(3, 0, trivial) == 3);
    CHECK(eta_shift(0, 6, trivial) == 12);

    ThetaImage half = trivial;
    half.order = 2; // image generated by 12
    CHECK(eta_shift(0, 6, half) == 0);

    ThetaImage unknown;
    unknown.status = ThetaStatus::Unknown;
    unknown.d_hat = 24;
    CHECK_THROWS_AS((void)eta_shift(0, 1, unknown), Error);
}

TEST_CASE("eta shifts by a and a' agree exactly modulo the orbit size")
{
    std::vector<ClassCore> cores;
    cores.push_back(s1s3_core(0));
    cores.push_back(s1s3_core(2));
    cores.push_back(make_core(24, IntMatrix::of({{12}})));
    cores.push_back(make_core(12, IntMatrix::of({{6}})));
    for (const ClassCore& core : cores) {
        for (long long bb : {0, 1, 2, 3, 6}) {
            GroupElement b = core.cokernel().element(IntVec{bb});
            ThetaImage theta = theta_image(core, b);
            ClassificationReport report = orbit_size(core, b, theta);
            REQUIRE(report.orbit.has_value());
            for (int a = 0; a < 12; ++a)
                for (int a2 = 0; a2 < 12; ++a2) {
                    bool same_shift = eta_shift(0, a, theta) == eta_shift(0, a2, theta);
                    bool same_mod_orbit = (a - a2) % *report.orbit == 0;
                    CHECK(same_shift == same_mod_orbit);
                }
        }
    }
}

TEST_CASE("knot action equivalence")
{
    // d = 0 branch
    ClassCore l0 = s1s3_core(0);
    GroupElement b6 = l0.cokernel().element(IntVec{6});
    CHECK(*knot_action_equiv(l0, b6, 0, 12) == true);
    CHECK(*knot_action_equiv(l0, b6, 0, 1) == false);
    GroupElement b0 = l0.cokernel().zero();
    CHECK(*knot_action_equiv(l0, b0, 0, 12) == true);
    CHECK(*knot_action_modulus(l0, b0) == 12);

    // d != 0, doubled form vanishing mod d
    ClassCore flat = make_core(24, IntMatrix::of({{12}}));
    GroupElement b3 = flat.cokernel().element(IntVec{3});
    CHECK(*knot_action_modulus(flat, b3) == 6);
    CHECK(*knot_action_equiv(flat, b3, 1, 7) == true);
    CHECK(*knot_action_equiv(flat, b3, 1, 2) == false);

    // unresolved theta with a nontrivial divisor bound -> indeterminate
    ClassCore cond1 = make_core(8, IntMatrix::of({{2}}));
    GroupElement bc = cond1.cokernel().element(IntVec{1});
    CHECK(!knot_action_equiv(cond1, bc, 0, 1).has_value());
    // with cond-3 asserted it resolves
    CHECK(knot_action_equiv(cond1, bc, 0, 1, {Assumption::Cond3}).has_value());

    // closed-form branch modulus always matches the engine's orbit size
    for (long long l : {0, 3})
        for (long long bb : {0, 1, 2, 4, 6}) {
            ClassCore core = s1s3_core(l);
            GroupElement b = core.cokernel().element(IntVec{bb});
            ClassificationReport report = orbit_size(core, b, theta_image(core, b));
            CHECK(*knot_action_modulus(core, b) == Int(*report.orbit));
        }
}

TEST_CASE("report carries the standing notes")
{
    ClassCore core = s1s3_core(0);
    GroupElement b = core.cokernel().element(IntVec{3});
    ClassificationReport report = orbit_size(core, b, theta_image(core, b));
    bool has_gauge_note = false;
    for (const std::string& n : report.notes)
        if (n.find("gauge") != std::string::npos) has_gauge_note = true;
    CHECK(has_gauge_note);
}
