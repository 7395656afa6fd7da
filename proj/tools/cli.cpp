#include "cli.hpp"

#include "emb7/classify.hpp"
#include "emb7/error.hpp"
#include "emb7/json_io.hpp"
#include "emb7/manifold.hpp"
#include "emb7/s1s3.hpp"
#include "emb7/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace emb7::cli {

namespace {

IntVec parse_csv(const std::string& text, const char* what)
{
    IntVec out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw Error(errc::parse, std::string("bad integer '") + item + "' in " + what);
        }
    }
    return out;
}

IntMatrix parse_square(const std::string& text, std::size_t rank, const char* what)
{
    IntVec entries = parse_csv(text, what);
    if (entries.size() != rank * rank)
        throw Error(errc::dimension, std::string(what) + " needs " + std::to_string(rank * rank) +
                                         " entries, got " + std::to_string(entries.size()));
    return IntMatrix(rank, rank, std::move(entries));
}

std::pair<Int, Int> parse_range(const std::string& text, const char* what)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(errc::parse, std::string(what) + " must look like LO:HI");
    try {
        Int lo(text.substr(0, colon));
        Int hi(text.substr(colon + 1));
        if (lo > hi) throw Error(errc::parse, std::string(what) + " has LO > HI");
        return {lo, hi};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(errc::parse, std::string("bad range '") + text + "' for " + what);
    }
}

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case errc::dimension: return 3;
    case errc::psi_format: return 4;
    case errc::budget: return 5;
    default: return 2;
    }
}

struct ClassifyArgs {
    std::string manifold_path;
    std::string u_csv, l_csv, b_csv;
    std::vector<std::string> assume;
    std::string psi_path;
    int a = -1, a_prime = -1;
    bool json = false;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out)
{
    ManifoldData data = validate(load_manifold_file(args.manifold_path));

    IntVec u_coords = parse_csv(args.u_csv, "--u");
    if (u_coords.empty()) u_coords.assign(data.h2_rank, Int(0));
    if (u_coords.size() != data.h2_rank)
        throw Error(errc::dimension, "--u needs h2_rank = " + std::to_string(data.h2_rank) + " entries");
    H2Class u{u_coords};

    IntMatrix form = parse_square(args.l_csv, data.h1_rank, "--l");

    IntVec b_coords = parse_csv(args.b_csv, "--b");
    if (b_coords.empty()) b_coords.assign(data.h1_rank, Int(0));
    if (b_coords.size() != data.h1_rank)
        throw Error(errc::dimension, "--b needs h1_rank = " + std::to_string(data.h1_rank) + " entries");

    std::set<Assumption> assumptions;
    for (const std::string& tag : args.assume) {
        if (tag == "COND3") assumptions.insert(Assumption::Cond3);
        else throw Error(errc::parse, "unknown assumption tag " + tag);
    }

    if (!args.psi_path.empty()) (void)load_psi_file(args.psi_path); // validated even when unused

    ClassCore core = build_core(data, u, form);
    GroupElement b = core.cokernel().element(b_coords);
    ThetaImage theta = theta_image(core, b, assumptions);
    ClassificationReport report = orbit_size(core, b, theta);
    report.manifold_name = data.name;

    nlohmann::json doc = report_to_json(report);

    if (args.a >= 0 && args.a_prime >= 0) {
        std::optional<bool> equal = knot_action_equiv(core, b, args.a, args.a_prime, assumptions);
        std::optional<Int> modulus = knot_action_modulus(core, b, assumptions);
        nlohmann::json action;
        action["a"] = args.a;
        action["a_prime"] = args.a_prime;
        action["equivalent"] = equal ? nlohmann::json(*equal) : nlohmann::json("INDETERMINATE");
        if (modulus) action["modulus"] = int_to_json(*modulus);
        doc["knot_action"] = action;
        report.notes.push_back("knot action decided via the congruence modulus when determined");
    }

    if (args.json) {
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "manifold: " << data.name << "\n";
    out << "d = " << report.d.str() << ", d_hat = " << report.d_hat << "\n";
    out << "kernel rank = " << report.kernel_rank << ", cokernel factors = [";
    for (std::size_t i = 0; i < report.cokernel_factors.size(); ++i)
        out << (i ? "," : "") << report.cokernel_factors[i].str();
    out << "]\n";
    out << "theta: " << doc["theta"]["status"].get<std::string>();
    if (report.theta.order) out << ", order " << *report.theta.order;
    out << ", bound " << report.theta.divisor_bound << "\n";
    if (report.orbit) {
        out << "orbit size = " << *report.orbit << ", inertia order = " << *report.inertia << "\n";
    } else {
        out << "orbit size in {";
        for (std::size_t i = 0; i < report.orbit_candidates.size(); ++i)
            out << (i ? "," : "") << report.orbit_candidates[i];
        out << "}\n";
    }
    if (doc.contains("knot_action"))
        out << "knot action a=" << args.a << " vs a'=" << args.a_prime << ": "
            << doc["knot_action"]["equivalent"].dump() << "\n";
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    return 0;
}

struct S1s3Args {
    std::string l_range = "-6:6";
    std::string b_range = "-12:12";
    std::string psi_path;
    std::string pairs;
    bool json = false;
};

int cmd_s1s3(const S1s3Args& args, std::ostream& out)
{
    PsiOracle psi;
    if (!args.psi_path.empty()) psi = load_psi_file(args.psi_path);

    if (!args.pairs.empty()) {
        std::stringstream ss(args.pairs);
        std::string first, second;
        if (!(ss >> first >> second))
            throw Error(errc::parse, "--pairs wants two labels: \"a,l,b a,l,b\"");
        auto parse_label = [](const std::string& text) {
            IntVec v = parse_csv(text, "--pairs");
            if (v.size() != 3) throw Error(errc::parse, "each label is a,l,b");
            return TauLabel{static_cast<int>(to_ll(v[0])), v[1], v[2]};
        };
        TauLabel x = parse_label(first);
        TauLabel y = parse_label(second);
        std::optional<bool> equal = tau_equiv(x, y, psi);
        if (args.json) {
            nlohmann::json doc;
            doc["pair"] = {first, second};
            doc["equivalent"] = equal ? nlohmann::json(*equal) : nlohmann::json("INDETERMINATE");
            out << doc.dump(2) << "\n";
        } else {
            out << "equivalent: " << (equal ? (*equal ? "true" : "false") : "INDETERMINATE") << "\n";
        }
        return 0;
    }

    auto [l_lo, l_hi] = parse_range(args.l_range, "--l-range");
    auto [b_lo, b_hi] = parse_range(args.b_range, "--b-range");
    std::vector<OrbitRow> rows = orbit_table(l_lo, l_hi, b_lo, b_hi);
    if (args.json) {
        out << orbit_table_to_json(rows).dump(2) << "\n";
    } else {
        out << "l\tb\t|P|\tinertia\n";
        for (const OrbitRow& r : rows)
            out << r.l.str() << "\t" << r.b.str() << "\t" << r.p << "\t" << r.inertia << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    int max_rank = 2;
    int max_d = 8;
    int bound = 2;
    std::uint64_t seed = 1;
    int sample = 500;
    std::uint64_t cap = 20'000'000;
    bool allow_sampling = false;
    bool negative_controls = false;
    std::string l_range = "-6:6";
    std::string b_range = "-12:12";
    bool json = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out)
{
    std::vector<std::string> selected = args.suites;
    if (selected.empty()) selected = {"unimzd", "cap-welldef", "s1s3-crosscheck", "cgen-arithmetic"};

    std::vector<VerificationRun> runs;
    for (const std::string& name : selected) {
        if (name == "unimzd") {
            UnimzdConfig cfg;
            cfg.max_rank = args.max_rank;
            cfg.d_values.clear();
            for (int d = 1; d <= args.max_d; ++d) cfg.d_values.push_back(d);
            cfg.entry_bound = args.bound;
            cfg.sample_count = args.sample;
            cfg.cap = args.cap;
            cfg.allow_sampling = args.allow_sampling;
            cfg.negative_controls = args.negative_controls;
            cfg.seed = args.seed;
            runs.push_back(verify_unimzd(cfg));
        } else if (name == "cap-welldef") {
            CapWelldefConfig cfg;
            cfg.max_rank = args.max_rank;
            cfg.entry_bound = args.bound;
            cfg.negative_controls = args.negative_controls;
            cfg.cap = args.cap;
            cfg.seed = args.seed;
            runs.push_back(verify_cap_welldef(cfg));
        } else if (name == "s1s3-crosscheck") {
            auto [l_lo, l_hi] = parse_range(args.l_range, "--l-range");
            auto [b_lo, b_hi] = parse_range(args.b_range, "--b-range");
            runs.push_back(verify_s1s3_crosscheck(l_lo, l_hi, b_lo, b_hi));
        } else if (name == "cgen-arithmetic") {
            CgenConfig cfg;
            cfg.seed = args.seed;
            runs.push_back(verify_cgen_arithmetic(cfg));
        } else {
            throw Error(errc::parse, "unknown suite " + name);
        }
    }

    bool all_pass = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const VerificationRun& run : runs) {
        all_pass = all_pass && run.passed();
        doc.push_back(run_to_json(run));
        if (!args.json) {
            out << (run.passed() ? "PASS" : "FAIL") << " " << run.suite << ": instances=" << run.instances
                << " failures=" << run.failure_count;
            if (run.controls_injected)
                out << " controls=" << run.controls_detected << "/" << run.controls_injected;
            out << " time=" << static_cast<long long>(run.wall_ms) << "ms\n";
            for (const Failure& f : run.failures)
                out << "  mismatch " << f.instance << ": expected " << f.expected << ", got " << f.got
                    << "\n";
            for (const std::string& note : run.control_notes) out << "  " << note << "\n";
        }
    }
    if (args.json) out << doc.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact classification counts for embeddings of 4-manifolds in 7-space"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "Classification report for one (u, l, b) query");
    classify->add_option("--manifold", classify_args.manifold_path, "manifold spec JSON file")->required();
    classify->add_option("--u", classify_args.u_csv, "class u as CSV (defaults to 0)");
    classify->add_option("--l", classify_args.l_csv, "form matrix as row-major CSV");
    classify->add_option("--b", classify_args.b_csv, "class b as CSV (defaults to 0)");
    classify->add_option("--assume", classify_args.assume, "assumption tags (COND3)");
    classify->add_option("--psi", classify_args.psi_path, "psi table JSON file");
    classify->add_option("--a", classify_args.a, "first knot class in 0..11");
    classify->add_option("--a-prime", classify_args.a_prime, "second knot class in 0..11");
    classify->add_flag("--json", classify_args.json, "emit the JSON report");

    S1s3Args s1s3_args;
    CLI::App* s1s3 = app.add_subcommand("s1s3", "Closed-form orbit table for S1 x S3");
    s1s3->add_option("--l-range", s1s3_args.l_range, "inclusive range LO:HI for l");
    s1s3->add_option("--b-range", s1s3_args.b_range, "inclusive range LO:HI for b");
    s1s3->add_option("--psi", s1s3_args.psi_path, "psi table JSON file");
    s1s3->add_option("--pairs", s1s3_args.pairs, "decide equivalence of two labels: \"a,l,b a,l,b\"");
    s1s3->add_flag("--json", s1s3_args.json, "emit JSON");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the brute-force verifier suites");
    verify->add_option("suites", verify_args.suites,
                       "suites to run (unimzd, cap-welldef, s1s3-crosscheck, cgen-arithmetic)");
    verify->add_option("--max-rank", verify_args.max_rank, "grid rank bound");
    verify->add_option("--max-d", verify_args.max_d, "grid modulus bound");
    verify->add_option("--bound", verify_args.bound, "entry bound for grid matrices");
    verify->add_option("--seed", verify_args.seed, "seed for sampled instances");
    verify->add_option("--sample", verify_args.sample, "sampled large-instance count");
    verify->add_option("--cap", verify_args.cap, "instance budget");
    verify->add_flag("--allow-sampling", verify_args.allow_sampling, "sample instead of failing on budget");
    verify->add_flag("--negative-controls", verify_args.negative_controls, "inject broken instances");
    verify->add_option("--l-range", verify_args.l_range, "crosscheck range for l");
    verify->add_option("--b-range", verify_args.b_range, "crosscheck range for b");
    verify->add_flag("--json", verify_args.json, "emit JSON");

    try {
        app.parse(argc, argv);
        if (*classify) return cmd_classify(classify_args, out);
        if (*s1s3) return cmd_s1s3(s1s3_args, out);
        if (*verify) return cmd_verify(verify_args, out);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace emb7::cli
