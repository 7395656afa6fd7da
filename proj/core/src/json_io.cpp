#include "emb7/json_io.hpp"

#include "emb7/error.hpp"

#include <fstream>

namespace emb7 {

using nlohmann::json;

json int_to_json(const Int& value)
{
    static const Int safe = Int(1) << 53;
    if (value >= -safe && value <= safe) return json(value.convert_to<std::int64_t>());
    return json(value.str());
}

Int int_from_json(const json& value)
{
    if (value.is_number_integer()) return Int(value.get<std::int64_t>());
    if (value.is_string()) return Int(value.get<std::string>());
    throw Error(errc::parse, "expected an integer or a decimal string");
}

namespace {

json vec_to_json(const IntVec& v)
{
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

IntVec vec_from_json(const json& arr, const char* what)
{
    if (!arr.is_array()) throw Error(errc::parse, std::string(what) + " must be an array");
    IntVec out;
    for (const auto& x : arr) out.push_back(int_from_json(x));
    return out;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(errc::parse, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(errc::parse, "malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

} // namespace

ManifoldData manifold_from_json(const json& doc)
{
    try {
        ManifoldData data;
        data.name = doc.value("name", std::string("unnamed"));
        data.h1_rank = doc.at("h1_rank").get<std::size_t>();
        data.h2_rank = doc.at("h2_rank").get<std::size_t>();
        IntVec q = vec_from_json(doc.at("intersection_form"), "intersection_form");
        if (q.size() != data.h2_rank * data.h2_rank)
            throw Error(errc::dimension, "intersection_form must have h2_rank^2 entries");
        data.intersection_form = IntMatrix(data.h2_rank, data.h2_rank, std::move(q));
        for (const auto& x : doc.at("w2_dual")) data.w2_dual.push_back(x.get<int>());
        data.signature = int_from_json(doc.at("signature"));
        return data;
    } catch (const json::exception& e) {
        throw Error(errc::parse, std::string("manifold spec: ") + e.what());
    }
}

ManifoldData load_manifold_file(const std::string& path)
{
    return manifold_from_json(load_json_file(path));
}

PsiOracle psi_from_json(const json& doc)
{
    PsiOracle psi;
    try {
        if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array())
            throw Error(errc::psi_format, "psi table must be an object with an 'entries' array");
        for (const auto& e : doc.at("entries")) {
            Int l = int_from_json(e.at("l"));
            if (l == 0) throw Error(errc::psi_format, "psi entries require l != 0");
            int value = e.at("value").get<int>();
            if (value < 0 || value > 11) throw Error(errc::psi_format, "psi value must be in 0..11");
            psi.insert(l, int_from_json(e.at("k")), int_from_json(e.at("b_residue")), value,
                       e.value("provenance", std::string("unspecified")));
        }
    } catch (const json::exception& e) {
        throw Error(errc::psi_format, std::string("psi table: ") + e.what());
    }
    return psi;
}

PsiOracle load_psi_file(const std::string& path)
{
    return psi_from_json(load_json_file(path));
}

json report_to_json(const ClassificationReport& report)
{
    json theta;
    switch (report.theta.status) {
    case ThetaStatus::Determined: theta["status"] = "DETERMINED"; break;
    case ThetaStatus::Conditional:
        theta["status"] = "CONDITIONAL";
        theta["assumption"] = report.theta.assumption;
        break;
    case ThetaStatus::Unknown: theta["status"] = "UNKNOWN"; break;
    }
    if (report.theta.order) theta["order"] = *report.theta.order;
    theta["divisor_bound"] = report.theta.divisor_bound;

    json out;
    out["manifold"] = report.manifold_name;
    if (report.u_present) out["u"] = vec_to_json(report.u_coords);
    out["d"] = int_to_json(report.d);
    out["d_hat"] = report.d_hat;
    out["h1_rank"] = report.h1_rank;
    out["kernel_rank"] = report.kernel_rank;
    out["cokernel_invariant_factors"] = vec_to_json(report.cokernel_factors);
    out["b"] = vec_to_json(report.b_coords);
    out["theta"] = theta;
    if (report.orbit) {
        out["orbit_size"] = *report.orbit;
        out["inertia_order"] = *report.inertia;
    } else {
        out["orbit_candidates"] = report.orbit_candidates;
        out["inertia_candidates"] = report.inertia_candidates;
    }
    out["notes"] = report.notes;
    return out;
}

json run_to_json(const VerificationRun& run)
{
    json out;
    out["suite"] = run.suite;
    out["instances"] = run.instances;
    out["failure_count"] = run.failure_count;
    json fails = json::array();
    for (const Failure& f : run.failures)
        fails.push_back(json{{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    out["failures"] = fails;
    out["controls_injected"] = run.controls_injected;
    out["controls_detected"] = run.controls_detected;
    out["control_notes"] = run.control_notes;
    out["wall_ms"] = run.wall_ms;
    out["seed"] = run.seed;
    out["sampled"] = run.sampled;
    out["pass"] = run.passed();
    return out;
}

json orbit_table_to_json(const std::vector<OrbitRow>& rows)
{
    json out = json::array();
    for (const OrbitRow& r : rows)
        out.push_back(json{{"l", int_to_json(r.l)},
                           {"b", int_to_json(r.b)},
                           {"p_size", r.p},
                           {"inertia", r.inertia}});
    return out;
}

} // namespace emb7
