#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "emb7");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = emb7::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& rel)
{
    return std::string(EMB7_DATA_DIR) + "/" + rel;
}

} // namespace

TEST_CASE("classify on the bundled specs")
{
    CliResult r = run_cli({"classify", "--manifold", data_path("manifolds/s1s3.json"), "--l", "5", "--b",
                           "1", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["orbit_size"] == 12);
    CHECK(doc["inertia_order"] == 1);
    CHECK(doc["theta"]["status"] == "DETERMINED");

    CliResult r2 = run_cli({"classify", "--manifold", data_path("manifolds/s1s3.json"), "--l", "0", "--b",
                            "1", "--json"});
    REQUIRE(r2.code == 0);
    CHECK(nlohmann::json::parse(r2.out)["orbit_size"] == 2);

    CliResult r3 = run_cli({"classify", "--manifold", data_path("manifolds/s2s2.json"), "--u", "0,0",
                            "--json"});
    REQUIRE(r3.code == 0);
    nlohmann::json doc3 = nlohmann::json::parse(r3.out);
    CHECK(doc3["orbit_size"] == 12);
    CHECK(doc3["d"] == 0);

    CliResult r4 = run_cli({"classify", "--manifold", data_path("manifolds/s2s2_nonspin.json"), "--u",
                            "1,1", "--json"});
    REQUIRE(r4.code == 0);
    CHECK(nlohmann::json::parse(r4.out)["d"] == 1);
}

TEST_CASE("classify resolves theta only under the asserted assumption")
{
    // d = 8 with a non-vanishing doubled form: undetermined without help
    std::vector<std::string> base = {"classify", "--manifold", data_path("manifolds/s1s3_cp2.json"),
                                     "--u", "8", "--l", "2", "--b", "1", "--json"};
    CliResult r = run_cli(base);
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["theta"]["status"] == "UNKNOWN");
    CHECK(doc["orbit_candidates"] == nlohmann::json({2, 4}));

    std::vector<std::string> assumed = base;
    assumed.push_back("--assume");
    assumed.push_back("COND3");
    CliResult r2 = run_cli(assumed);
    REQUIRE(r2.code == 0);
    nlohmann::json doc2 = nlohmann::json::parse(r2.out);
    CHECK(doc2["theta"]["status"] == "CONDITIONAL");
    CHECK(doc2["theta"]["assumption"] == "cond-3");
    CHECK(doc2["orbit_size"] == 4);
    CHECK(doc2["inertia_order"] == 3);
}

TEST_CASE("classify reports the knot action when asked")
{
    CliResult r = run_cli({"classify", "--manifold", data_path("manifolds/s1s3.json"), "--l", "0", "--b",
                           "6", "--a", "0", "--a-prime", "1", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["knot_action"]["equivalent"] == false);
    CHECK(doc["knot_action"]["modulus"] == 12);
}

TEST_CASE("classify emits canonical JSON that round-trips")
{
    CliResult r = run_cli({"classify", "--manifold", data_path("manifolds/s1s3.json"), "--l", "3", "--b",
                           "2", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(nlohmann::json::parse(doc.dump(2)) == doc);
}

TEST_CASE("classify exit codes")
{
    // dimension mismatch: wrong --l size for h1_rank = 1
    CliResult r = run_cli({"classify", "--manifold", data_path("manifolds/s1s3.json"), "--l", "1,2"});
    CHECK(r.code == 3);

    // validation error: file with a broken signature
    std::string bad = std::string(EMB7_DATA_DIR) + "/../tests/bad_signature.json";
    CliResult r2 = run_cli({"classify", "--manifold", bad, "--l", ""});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("SIGNATURE_MISMATCH") != std::string::npos);
}

TEST_CASE("s1s3 table and pairs")
{
    CliResult r = run_cli({"s1s3", "--l-range", "0:2", "--b-range", "0:3", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json rows = nlohmann::json::parse(r.out);
    CHECK(rows.size() == 12);

    CliResult pairs = run_cli({"s1s3", "--pairs", "0,0,2 1,0,2"});
    REQUIRE(pairs.code == 0);
    CHECK(pairs.out.find("false") != std::string::npos);

    CliResult same = run_cli({"s1s3", "--pairs", "4,1,3 4,1,3"});
    CHECK(same.out.find("true") != std::string::npos);

    CliResult indet = run_cli({"s1s3", "--pairs", "0,1,0 1,1,2"});
    CHECK(indet.out.find("INDETERMINATE") != std::string::npos);

    // with the synthetic table the same pair becomes decidable
    CliResult withpsi = run_cli({"s1s3", "--psi", data_path("psi/psi_synthetic.json"), "--pairs",
                                 "0,1,0 1,1,2"});
    CHECK(withpsi.out.find("INDETERMINATE") == std::string::npos);

    CliResult badpsi = run_cli({"s1s3", "--psi", data_path("manifolds/s1s3.json"), "--pairs",
                                "0,1,0 1,1,2"});
    CHECK(badpsi.code == 4);
}

TEST_CASE("verify subcommand wiring")
{
    CliResult r = run_cli({"verify", "s1s3-crosscheck", "--l-range", "-2:2", "--b-range", "-3:3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    CliResult ctl = run_cli({"verify", "cap-welldef", "--max-rank", "1", "--bound", "1",
                             "--negative-controls"});
    CHECK(ctl.code == 0);
    CHECK(ctl.out.find("controls=3/3") != std::string::npos);
    CHECK(ctl.out.find("caught") != std::string::npos);

    CliResult r2 = run_cli({"verify", "unimzd", "--max-d", "3", "--bound", "1", "--sample", "20",
                            "--negative-controls", "--json"});
    REQUIRE(r2.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r2.out);
    CHECK(doc[0]["pass"] == true);
    CHECK(doc[0]["controls_detected"] == doc[0]["controls_injected"]);

    // budget exhaustion without sampling permission
    CliResult r5 = run_cli({"verify", "unimzd", "--bound", "3", "--cap", "10"});
    CHECK(r5.code == 5);

    CliResult r6 = run_cli({"verify", "nonsense"});
    CHECK(r6.code == 2);
}
