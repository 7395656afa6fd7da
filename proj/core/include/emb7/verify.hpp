#pragma once

#include "emb7/ints.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace emb7 {

/// One mismatch found by a verifier suite.
struct Failure {
    std::string instance;
    std::string expected;
    std::string got;
};

/// Outcome of one suite run. Genuine failures and detected negative
/// controls are tracked separately: a run passes when it found no genuine
/// failure and every injected control was caught.
struct VerificationRun {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures; // first few, for reporting
    std::uint64_t controls_injected = 0;
    std::uint64_t controls_detected = 0;
    std::vector<std::string> control_notes;
    double wall_ms = 0;
    std::uint64_t seed = 0;
    bool sampled = false;

    bool passed() const { return failure_count == 0 && controls_detected == controls_injected; }
    void record(const std::string& instance, const std::string& expected, const std::string& got);
};

/// Closed-formula index vs direct enumeration over a full grid of small
/// symmetric-mod-d matrices, all cokernel classes, plus an optional seeded
/// sample of larger instances. include_d0 adds the exact (d = 0) branch.
struct UnimzdConfig {
    int max_rank = 2;
    std::vector<int> d_values = {1, 2, 3, 4, 5, 6, 7, 8};
    int entry_bound = 2;
    bool include_d0 = true;
    int sample_count = 500;
    int sample_rank = 3;
    std::vector<int> sample_d = {12, 24};
    std::uint64_t cap = 20'000'000; // instance budget for the full grid
    bool allow_sampling = false;    // degrade to sampling instead of BUDGET
    bool negative_controls = true;
    std::uint64_t seed = 1;
};
VerificationRun verify_unimzd(const UnimzdConfig& cfg);

/// Pairing well-definedness: every symmetric-mod-d context passes the
/// representative-independence check, and injected non-symmetric contexts
/// are caught as failures.
struct CapWelldefConfig {
    int max_rank = 2;
    std::vector<int> d_values = {0, 1, 2, 3, 4, 6, 8, 12, 24};
    int entry_bound = 2;
    bool negative_controls = true;
    std::uint64_t cap = 20'000'000;
    std::uint64_t seed = 1;
};
VerificationRun verify_cap_welldef(const CapWelldefConfig& cfg);

/// The general engine against the closed-form orbit table on a grid of
/// (l, b), via the rank-one core with d = 0.
VerificationRun verify_s1s3_crosscheck(const Int& l_lo = -6, const Int& l_hi = 6, const Int& b_lo = -12,
                                       const Int& b_hi = 12);

/// For cores whose doubled form vanishes mod d: the engine's orbit count,
/// the closed-form modulus count, and a direct subgroup-order count must
/// coincide for every class b.
struct CgenConfig {
    std::vector<int> d_values = {0, 2, 3, 4, 6, 8, 12, 24};
    int max_rank = 2;
    int scale_bound = 1;        // form = (d / gcd(d,2)) * T, T entries in [-bound, bound]
    Int b_window = 12;          // coordinate window for infinite cokernels
    std::uint64_t coker_cap = 48; // enumerate all b when |coker| is at most this
    std::uint64_t seed = 1;
};
VerificationRun verify_cgen_arithmetic(const CgenConfig& cfg);

} // namespace emb7
