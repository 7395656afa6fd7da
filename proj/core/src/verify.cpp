#include "emb7/verify.hpp"

#include "emb7/classify.hpp"
#include "emb7/error.hpp"
#include "emb7/pairing.hpp"
#include "emb7/s1s3.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace emb7 {

void VerificationRun::record(const std::string& instance, const std::string& expected, const std::string& got)
{
    ++failure_count;
    if (failures.size() < 25) failures.push_back(Failure{instance, expected, got});
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Deterministic across platforms (unlike uniform_int_distribution).
long long rand_in(std::mt19937_64& rng, long long lo, long long hi)
{
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string describe(const IntMatrix& m, const Int& d, const IntVec& c)
{
    std::ostringstream os;
    os << "m=" << m.to_string() << " d=" << d.str() << " c=[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].str();
    }
    os << "]";
    return os.str();
}

Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// The closed-formula side without the symmetry precondition, so that
// negative controls can exercise the comparison on broken input.
Int index_formula_unchecked(const Int& d, const GroupElement& c)
{
    if (d == 0) return divisibility_mod_torsion(c);
    std::optional<Int> ord = element_order(c);
    return d / *ord;
}

// Iterate all matrices of the given shape with entries in [-bound, bound].
template <typename Fn>
void for_each_matrix(std::size_t rank, int bound, Fn&& fn)
{
    std::size_t cells = rank * rank;
    std::vector<int> e(cells, -bound);
    for (;;) {
        IntMatrix m(rank, rank);
        for (std::size_t i = 0; i < cells; ++i) m.at(i / rank, i % rank) = e[i];
        fn(m);
        std::size_t i = cells;
        bool done = (cells == 0);
        while (i > 0) {
            --i;
            if (++e[i] <= bound) break;
            e[i] = -bound;
            if (i == 0) done = true;
        }
        if (done) break;
    }
}

// All coordinate vectors of the given length with entries in [lo, hi].
template <typename Fn>
void for_each_vector(std::size_t len, long long lo, long long hi, Fn&& fn)
{
    std::vector<long long> v(len, lo);
    for (;;) {
        IntVec w(len);
        for (std::size_t i = 0; i < len; ++i) w[i] = v[i];
        fn(w);
        std::size_t i = len;
        bool done = (len == 0);
        while (i > 0) {
            --i;
            if (++v[i] <= hi) break;
            v[i] = lo;
            if (i == 0) done = true;
        }
        if (done) break;
    }
}

void check_unimzd_instance(VerificationRun& run, const IntMatrix& m, const Int& d, const GroupElement& c)
{
    ++run.instances;
    Int by_formula = unimzd_index(m.rows(), m, d, c);
    Int by_enum = unimzd_brute(m.rows(), m, d, c);
    if (by_formula != by_enum)
        run.record(describe(m, d, c.coords()), by_formula.str(), by_enum.str());
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

} // namespace

VerificationRun verify_unimzd(const UnimzdConfig& cfg)
{
    Stopwatch clock;
    VerificationRun run;
    run.suite = "unimzd";
    run.seed = cfg.seed;
    std::mt19937_64 rng(cfg.seed);

    // Estimated grid size; per-class enumeration multiplies it further, so
    // stay conservative and degrade (or refuse) before starting.
    std::uint64_t projected = 0;
    for (int rank = 1; rank <= cfg.max_rank; ++rank)
        projected += cfg.d_values.size() * pow_u64(2 * cfg.entry_bound + 1, rank * rank);
    bool sample_grid = false;
    if (projected > cfg.cap) {
        if (!cfg.allow_sampling) throw Error(errc::budget, "instance cap exceeded; rerun with sampling");
        sample_grid = true;
        run.sampled = true;
    }

    for (int rank = 1; rank <= cfg.max_rank; ++rank) {
        for (int dv : cfg.d_values) {
            Int d = dv;
            for_each_matrix(rank, cfg.entry_bound, [&](const IntMatrix& m) {
                if (sample_grid && rng() % 16 != 0) return;
                if (!IntMatrix::congruent_mod(m, m.transpose(), d)) return;
                FgAbelianGroup coker = cokernel_mod(m, d);
                for (const GroupElement& c : coker.all_elements()) check_unimzd_instance(run, m, d, c);
            });
        }

        if (cfg.include_d0) {
            // Exactly symmetric matrices, representatives of the cokernel
            // sampled from a small coordinate window.
            for_each_matrix(rank, cfg.entry_bound, [&](const IntMatrix& m) {
                if (!m.is_symmetric()) return;
                if (sample_grid && rng() % 16 != 0) return;
                FgAbelianGroup coker = cokernel_mod(m, Int(0));
                for_each_vector(rank, -2, 2, [&](const IntVec& coords) {
                    check_unimzd_instance(run, m, Int(0), coker.element(coords));
                });
            });
        }
    }

    // Seeded larger instances: symmetric mod d but generally not symmetric
    // over Z, random class representatives.
    for (int s = 0; s < cfg.sample_count; ++s) {
        int dv = cfg.sample_d[static_cast<std::size_t>(rand_in(rng, 0, static_cast<long long>(cfg.sample_d.size()) - 1))];
        Int d = dv;
        std::size_t rank = cfg.sample_rank;
        IntMatrix m(rank, rank);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < rank; ++j) {
                long long v = rand_in(rng, -3, 3);
                m.at(i, j) = v;
                m.at(j, i) = v + dv * rand_in(rng, -1, 1); // asymmetric lift, symmetric mod d
            }
        FgAbelianGroup coker = cokernel_mod(m, d);
        IntVec coords(rank);
        for (std::size_t i = 0; i < rank; ++i) coords[i] = rand_in(rng, -24, 24);
        check_unimzd_instance(run, m, d, coker.element(coords));
    }

    if (cfg.negative_controls) {
        // A non-symmetric matrix where formula and enumeration disagree;
        // the comparison must notice, otherwise the suite cannot fail.
        struct Control {
            IntMatrix m;
            Int d;
            IntVec c;
        };
        std::vector<Control> controls;
        controls.push_back({IntMatrix::of({{0, 1}, {0, 0}}), Int(4), IntVec{Int(0), Int(1)}});
        controls.push_back({IntMatrix::of({{0, 1}, {0, 0}}), Int(6), IntVec{Int(0), Int(1)}});
        for (const Control& ctl : controls) {
            ++run.controls_injected;
            GroupElement c = cokernel_mod(ctl.m, ctl.d).element(ctl.c);
            Int by_formula = index_formula_unchecked(ctl.d, c);
            Int by_enum = unimzd_brute(ctl.m.rows(), ctl.m, ctl.d, c);
            if (by_formula != by_enum) {
                ++run.controls_detected;
                run.control_notes.push_back("control " + describe(ctl.m, ctl.d, ctl.c) + " caught: " +
                                            by_formula.str() + " vs " + by_enum.str());
            } else {
                run.control_notes.push_back("control " + describe(ctl.m, ctl.d, ctl.c) + " NOT caught");
            }
        }
    }

    run.wall_ms = clock.ms();
    return run;
}

namespace {

// Representative-independence check for one context; reports through `record`.
template <typename Record>
void check_context_welldef(const PairingContext& ctx, std::uint64_t& instances, Record&& record)
{
    ++instances;
    if (!check_cap_well_defined(ctx)) {
        record("ctx L=" + ctx.form.to_string() + " d=" + ctx.modulus.str(), "well-defined pairing",
               "kernel pairs nontrivially with the image");
    }

    // Perturb representatives by the relation generators and compare on
    // every kernel basis vector.
    std::vector<IntVec> reps;
    if (ctx.cokernel.is_finite() && to_ll(*ctx.cokernel.order()) <= 64) {
        for (const GroupElement& g : ctx.cokernel.all_elements()) reps.push_back(g.coords());
    } else {
        for_each_vector(ctx.rank, -2, 2, [&](const IntVec& v) { reps.push_back(v); });
    }
    for (const IntVec& coords : reps) {
        GroupElement c = ctx.cokernel.element(coords);
        for (std::size_t g = 0; g < ctx.doubled_form.cols(); ++g) {
            IntVec shifted = coords;
            IntVec col = ctx.doubled_form.col_vec(g);
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += col[i];
            GroupElement c2 = ctx.cokernel.element(shifted);
            for (std::size_t j = 0; j < ctx.kernel.basis_rank(); ++j) {
                IntVec y = ctx.kernel.basis_vector(j);
                Int lhs = cap_d(ctx, c, y);
                Int rhs = cap_d(ctx, c2, y);
                if (lhs != rhs)
                    record("ctx L=" + ctx.form.to_string() + " d=" + ctx.modulus.str() + " c=" +
                               IntMatrix::column(coords).transpose().to_string() + " gen=" + std::to_string(g) +
                               " y=" + IntMatrix::column(y).transpose().to_string(),
                           lhs.str(), rhs.str());
            }
        }
    }
}

} // namespace

VerificationRun verify_cap_welldef(const CapWelldefConfig& cfg)
{
    Stopwatch clock;
    VerificationRun run;
    run.suite = "cap-welldef";
    run.seed = cfg.seed;

    for (int rank = 1; rank <= cfg.max_rank; ++rank) {
        for (int dv : cfg.d_values) {
            Int d = dv;
            for_each_matrix(rank, cfg.entry_bound, [&](const IntMatrix& l) {
                IntMatrix doubled = l;
                for (std::size_t i = 0; i < doubled.rows(); ++i)
                    for (std::size_t j = 0; j < doubled.cols(); ++j) doubled.at(i, j) *= 2;
                if (!IntMatrix::congruent_mod(doubled, doubled.transpose(), d)) return;
                PairingContext ctx = make_pairing_context(l, d);
                check_context_welldef(ctx, run.instances,
                                      [&](const std::string& inst, const std::string& exp, const std::string& got) {
                                          run.record(inst, exp, got);
                                      });
            });
        }
    }

    if (cfg.negative_controls) {
        std::vector<std::pair<IntMatrix, Int>> controls;
        controls.emplace_back(IntMatrix::of({{0, 1}, {0, 0}}), Int(4));
        controls.emplace_back(IntMatrix::of({{0, 2}, {0, 0}}), Int(8));
        controls.emplace_back(IntMatrix::of({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), Int(3));
        for (const auto& [l, d] : controls) {
            ++run.controls_injected;
            PairingContext ctx = make_pairing_context(l, d);
            std::uint64_t ignored = 0;
            std::uint64_t caught = 0;
            check_context_welldef(ctx, ignored,
                                  [&](const std::string&, const std::string&, const std::string&) { ++caught; });
            if (caught > 0) {
                ++run.controls_detected;
                run.control_notes.push_back("control L=" + l.to_string() + " d=" + d.str() + " caught (" +
                                            std::to_string(caught) + " violations)");
            } else {
                run.control_notes.push_back("control L=" + l.to_string() + " d=" + d.str() + " NOT caught");
            }
        }
    }

    run.wall_ms = clock.ms();
    return run;
}

VerificationRun verify_s1s3_crosscheck(const Int& l_lo, const Int& l_hi, const Int& b_lo, const Int& b_hi)
{
    Stopwatch clock;
    VerificationRun run;
    run.suite = "s1s3-crosscheck";

    for (Int l = l_lo; l <= l_hi; ++l) {
        IntMatrix form(1, 1);
        form.at(0, 0) = l;
        ClassCore core = make_core(Int(0), form);
        for (Int b = b_lo; b <= b_hi; ++b) {
            ++run.instances;
            GroupElement cls = core.cokernel().element(IntVec{b});
            ThetaImage theta = theta_image(core, cls);
            ClassificationReport report = orbit_size(core, cls, theta);
            int table = p_size(l, b);
            if (!report.orbit || *report.orbit != table)
                run.record("l=" + l.str() + " b=" + b.str(), std::to_string(table),
                           report.orbit ? std::to_string(*report.orbit) : "unresolved");
        }
    }

    run.wall_ms = clock.ms();
    return run;
}

VerificationRun verify_cgen_arithmetic(const CgenConfig& cfg)
{
    Stopwatch clock;
    VerificationRun run;
    run.suite = "cgen-arithmetic";
    run.seed = cfg.seed;
    std::mt19937_64 rng(cfg.seed);

    auto check_instance = [&](const ClassCore& core, const GroupElement& b) {
        ++run.instances;
        const Int& d = core.d;
        Int even_gcd = gcd_int(d, 2);

        // (A) the engine's orbit count
        ThetaImage theta = theta_image(core, b);
        ClassificationReport report = orbit_size(core, b, theta);
        Int count_engine = report.orbit ? Int(*report.orbit) : Int(-1);

        // (B) the closed-form modulus count
        Int count_closed;
        if (d == 0) {
            count_closed = 2 * gcd_int(divisibility_mod_torsion(b), 6);
        } else {
            std::optional<Int> ord = element_order(b.scaled(4));
            count_closed = gcd_hat(d / *ord) / even_gcd;
        }

        // (C) the direct subgroup-order count: index of {4 (b . y)} in Z_d
        Int index_direct;
        if (d == 0) {
            IntVec values;
            for (std::size_t j = 0; j < core.kernel().basis_rank(); ++j)
                values.push_back(4 * dot(b.coords(), core.kernel().basis_vector(j)));
            index_direct = vec_gcd(values); // generator of the value subgroup of Z
        } else {
            std::set<long long> subgroup{0};
            long long dd = to_ll(d);
            std::vector<long long> gens;
            for (std::size_t j = 0; j < core.kernel().basis_rank(); ++j)
                gens.push_back(to_ll(mod_reduce(4 * dot(b.coords(), core.kernel().basis_vector(j)), d)));
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<long long> members(subgroup.begin(), subgroup.end());
                for (long long x : members)
                    for (long long g : gens)
                        if (subgroup.insert((x + g) % dd).second) grew = true;
            }
            index_direct = dd / static_cast<long long>(subgroup.size());
        }
        Int count_direct = gcd_hat(index_direct) / even_gcd;

        if (count_engine != count_closed || count_closed != count_direct)
            run.record("d=" + d.str() + " L=" + core.form().to_string() + " b=" +
                           IntMatrix::column(b.coords()).transpose().to_string(),
                       "engine=closed=direct",
                       count_engine.str() + "/" + count_closed.str() + "/" + count_direct.str());
    };

    auto check_core = [&](const ClassCore& core, int rank) {
        const FgAbelianGroup& coker = core.cokernel();
        if (coker.is_finite() && *coker.order() <= Int(cfg.coker_cap)) {
            for (const GroupElement& b : coker.all_elements()) check_instance(core, b);
        } else if (rank == 1) {
            for (Int b = -cfg.b_window; b <= cfg.b_window; ++b)
                check_instance(core, coker.element(IntVec{b}));
        } else {
            for (int s = 0; s < 16; ++s) {
                IntVec coords(rank);
                long long w = to_ll(cfg.b_window);
                for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = rand_in(rng, -w, w);
                check_instance(core, coker.element(coords));
            }
        }
    };

    for (int dv : cfg.d_values) {
        Int d = dv;
        for (int rank = 1; rank <= cfg.max_rank; ++rank) {
            if (dv == 0) {
                // the only form with vanishing double over Z is zero itself
                check_core(make_core(d, IntMatrix(rank, rank)), rank);
                continue;
            }
            Int scale = d / gcd_int(d, 2); // 2*scale*T == 0 (mod d) for every integer T
            for_each_matrix(rank, cfg.scale_bound, [&](const IntMatrix& t) {
                IntMatrix form(rank, rank);
                for (std::size_t i = 0; i < t.rows(); ++i)
                    for (std::size_t j = 0; j < t.cols(); ++j) form.at(i, j) = scale * t.at(i, j);
                check_core(make_core(d, form), rank);
            });
        }
    }

    run.wall_ms = clock.ms();
    return run;
}

} // namespace emb7
