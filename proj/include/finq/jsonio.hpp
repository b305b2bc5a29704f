#pragma once

#include <string>

#include <json.hpp>

#include "finq/embeddings.hpp"
#include "finq/phasespace.hpp"

// JSON file formats. Complex numbers are [re, im] pairs; bipartite matrices
// use the composite row index r1*n2 + r2.
//
//   state:   {"dim": n, "basis": "position"|"momentum",
//             "amplitudes": [[re,im], ...]}
//   density: {"dims": [n] | [n1,n2], "matrix": [[[re,im], ...], ...]}
//   phase function: {"dim": n, "values": [[re,im], ...]}  (alpha-major)

namespace finq::jsonio {

using json = nlohmann::ordered_json;

json state_to_json(const embeddings::QState& f);
embeddings::QState state_from_json(const json& j);

json density_to_json(const embeddings::DensityMatrix& rho);
json density_to_json(const embeddings::BipartiteDensity& rho);

// Number of entries in "dims" decides which overload applies.
bool is_bipartite_density(const json& j);
embeddings::DensityMatrix density_from_json(const json& j);
embeddings::BipartiteDensity bipartite_density_from_json(const json& j);

json phase_function_to_json(const phasespace::PhaseFunction& w);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace finq::jsonio
