#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "emb7/error.hpp"
#include "emb7/pairing.hpp"

using namespace emb7;

namespace {

template <typename Fn>
void for_each_square(std::size_t rank, int bound, Fn&& fn)
{
    std::size_t cells = rank * rank;
    std::vector<int> e(cells, -bound);
    for (;;) {
        IntMatrix m(rank, rank);
        for (std::size_t i = 0; i < cells; ++i) m.at(i / rank, i % rank) = e[i];
        fn(m);
        std::size_t i = cells;
        bool done = false;
        while (i > 0) {
            --i;
            if (++e[i] <= bound) break;
            e[i] = -bound;
            if (i == 0) done = true;
        }
        if (done) break;
    }
}

} // namespace

TEST_CASE("cap_d on pinned inputs")
{
    // zero form, d = 4: kernel and cokernel are everything
    PairingContext zero = make_pairing_context(IntMatrix(2, 2), 4);
    CHECK(cap_d(zero, zero.cokernel.element(IntVec{1, 0}), IntVec{2, 1}) == 2);
    CHECK(cap_d(zero, zero.cokernel.zero(), IntVec{2, 1}) == 0);

    // L = [1], d = 6: kernel is 3Z and both representatives agree
    PairingContext one = make_pairing_context(IntMatrix::of({{1}}), 6);
    GroupElement c = one.cokernel.element(IntVec{1});
    GroupElement c_shifted = one.cokernel.element(IntVec{3}); // 1 + the relation 2
    CHECK(c == c_shifted);
    CHECK(cap_d(one, c, IntVec{3}) == 3);
    CHECK(cap_d(one, c_shifted, IntVec{3}) == 3);

    CHECK_THROWS_AS((void)cap_d(one, c, IntVec{1}), Error); // 1 is not in 3Z
}

TEST_CASE("cap well-definedness check")
{
    PairingContext good = make_pairing_context(IntMatrix::of({{1, 2}, {2, 0}}), 6);
    CHECK(good.symmetric_mod_d());
    CHECK(check_cap_well_defined(good));

    PairingContext bad = make_pairing_context(IntMatrix::of({{0, 1}, {0, 0}}), 4);
    CHECK(!bad.symmetric_mod_d());
    CHECK(!check_cap_well_defined(bad));

    PairingContext exact = make_pairing_context(IntMatrix::of({{2, -1}, {-1, 5}}), 0);
    CHECK(check_cap_well_defined(exact));
}

TEST_CASE("unimzd index formula on pinned inputs")
{
    IntMatrix m2 = IntMatrix::of({{2}});
    GroupElement c = cokernel_mod(m2, 6).element(IntVec{1});
    CHECK(unimzd_index(1, m2, 6, c) == 3);
    CHECK(unimzd_brute(1, m2, 6, c) == 3);

    IntMatrix diag20 = IntMatrix::of({{2, 0}, {0, 0}});
    GroupElement c2 = cokernel_mod(diag20, 0).element(IntVec{1, 3});
    CHECK(unimzd_index(2, diag20, 0, c2) == 3);
    CHECK(unimzd_brute(2, diag20, 0, c2) == 3);

    IntMatrix zero1(1, 1);
    GroupElement c0 = cokernel_mod(zero1, 5).zero();
    CHECK(unimzd_index(1, zero1, 5, c0) == 5);
    CHECK(unimzd_brute(1, zero1, 5, c0) == 5);

    GroupElement c4 = cokernel_mod(zero1, 0).element(IntVec{4});
    CHECK(unimzd_index(1, zero1, 0, c4) == 4);
    CHECK(unimzd_brute(1, zero1, 0, c4) == 4);

    // identity mod 3: trivial kernel, index = d
    GroupElement any = cokernel_mod(IntMatrix::identity(2), 3).element(IntVec{1, 2});
    CHECK(unimzd_brute(2, IntMatrix::identity(2), 3, any) == 3);
    CHECK(unimzd_index(2, IntMatrix::identity(2), 3, any) == 3);
}

TEST_CASE("unimzd rejects asymmetric input and oversized enumerations")
{
    IntMatrix bad = IntMatrix::of({{0, 1}, {0, 0}});
    GroupElement c = cokernel_mod(bad, 4).element(IntVec{0, 1});
    CHECK_THROWS_AS((void)unimzd_index(2, bad, 4, c), Error);

    IntMatrix big = IntMatrix::identity(5);
    GroupElement cb = cokernel_mod(big, 6).zero();
    CHECK_THROWS_AS((void)unimzd_brute(5, big, 6, cb), Error);
}

TEST_CASE("oracle equivalence on a small grid")
{
    for (int d : {1, 2, 3, 4, 6}) {
        for_each_square(2, 2, [&](const IntMatrix& m) {
            if (!IntMatrix::congruent_mod(m, m.transpose(), d)) return;
            FgAbelianGroup coker = cokernel_mod(m, d);
            for (const GroupElement& c : coker.all_elements())
                CHECK(unimzd_index(2, m, d, c) == unimzd_brute(2, m, d, c));
        });
    }
}

TEST_CASE("cap_d is bilinear and representative-independent")
{
    for (int d : {4, 6, 0}) {
        PairingContext ctx = make_pairing_context(IntMatrix::of({{1, 2}, {2, -1}}), d);
        REQUIRE(ctx.symmetric_mod_d());
        REQUIRE(check_cap_well_defined(ctx));

        std::vector<IntVec> reps = {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {-1, 3}};
        for (const IntVec& rc : reps)
            for (const IntVec& rc2 : reps) {
                GroupElement c1 = ctx.cokernel.element(rc);
                GroupElement c2 = ctx.cokernel.element(rc2);
                for (std::size_t i = 0; i < ctx.kernel.basis_rank(); ++i)
                    for (std::size_t j = 0; j < ctx.kernel.basis_rank(); ++j) {
                        IntVec y = ctx.kernel.basis_vector(i);
                        IntVec y2 = ctx.kernel.basis_vector(j);
                        IntVec y_sum(y.size());
                        for (std::size_t k = 0; k < y.size(); ++k) y_sum[k] = y[k] + y2[k];

                        Int lhs = cap_d(ctx, c1 + c2, y);
                        Int rhs = mod_reduce(cap_d(ctx, c1, y) + cap_d(ctx, c2, y), ctx.modulus);
                        CHECK(lhs == rhs);

                        Int lhs2 = cap_d(ctx, c1, y_sum);
                        Int rhs2 = mod_reduce(cap_d(ctx, c1, y) + cap_d(ctx, c1, y2), ctx.modulus);
                        CHECK(lhs2 == rhs2);
                    }
            }
    }
}
