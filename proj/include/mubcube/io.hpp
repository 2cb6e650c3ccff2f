#pragma once

#include "mubcube/cube.hpp"
#include "mubcube/hadamard.hpp"
#include "mubcube/invariants.hpp"
#include "mubcube/mub.hpp"
#include "mubcube/numerics.hpp"
#include "mubcube/search.hpp"

#include <json.hpp>

#include <string>

namespace mubcube::io {

using json = nlohmann::json;

/// {"dim": d, "re": [[...]], "im": [[...]]} with row-major d x d arrays;
/// the base format for every file this repo exchanges.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// Matrix format plus {"kind": "hadamard", "tol": ...}; re-validated on read.
json hadamard_to_json(const HadamardMatrix& h);
HadamardMatrix hadamard_from_json(const json& j);

/// {"dim": d, "bases": [matrix...], "tol": ...}; re-validated on read.
json mub_to_json(const MubSystem& sys);
MubSystem mub_from_json(const json& j);

/// {"dim": d, "re": [[[...]]], "im": [[[...]]]} indexed (j,k,l).
json cube_to_json(const HadamardCube& c);
HadamardCube cube_from_json(const json& j);

json report_to_json(const CubeReport& r);
json classification_to_json(const CubeClassification& c);
json conjecture_to_json(const ConjectureReport& r);
json outcome_to_json(const SearchOutcome& o);
json experiment_to_json(const ExperimentReport& r);

/// One row per run: seed, status, loss, iterations, class, conjecture
/// residual, role.
std::string experiment_csv(const ExperimentReport& r);

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);
void save_text(const std::string& path, const std::string& text);

}  // namespace mubcube::io
