#pragma once

#include "emb7/classify.hpp"
#include "emb7/manifold.hpp"
#include "emb7/s1s3.hpp"
#include "emb7/verify.hpp"

#include <json.hpp>

#include <string>

namespace emb7 {

/// Parse a manifold spec document:
///   {name, h1_rank, h2_rank, intersection_form (row-major), w2_dual, signature}
/// Does not validate; callers run validate() on the result.
ManifoldData manifold_from_json(const nlohmann::json& doc);

ManifoldData load_manifold_file(const std::string& path);

/// Psi table document: {"entries": [{l, k, b_residue, value, provenance}]}.
PsiOracle psi_from_json(const nlohmann::json& doc);

PsiOracle load_psi_file(const std::string& path);

nlohmann::json report_to_json(const ClassificationReport& report);

nlohmann::json run_to_json(const VerificationRun& run);

nlohmann::json orbit_table_to_json(const std::vector<OrbitRow>& rows);

/// Exact integers serialize as JSON numbers when they fit in 53 bits and
/// as decimal strings beyond that.
nlohmann::json int_to_json(const Int& value);

Int int_from_json(const nlohmann::json& value);

} // namespace emb7
