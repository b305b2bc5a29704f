#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "finq/numtheory.hpp"

// Machine-readable verification reports. Every report uses the same
// envelope (see schemas/report.schema.json):
//
//   {"suite": ..., "params": {...}, "seed": ..., "samples": ...,
//    "tolerance": ..., "max_deviation": ..., "verdict": ..., "results": [...]}
//
// Verdicts: "ubiquitous" / "violated" for ubiquity sweeps, "pass" / "fail"
// for asserted identities, "info" for diagnostic scans that only report
// which candidate maps survive. Reports are deterministic functions of
// their parameters (including the seed), byte for byte.

namespace finq::reports {

using json = nlohmann::ordered_json;
using numtheory::Dim;

json entropy_report(Dim m, Dim n, std::uint64_t samples, std::uint64_t seed,
                    double tol);
json measured_entropy_report(Dim m, Dim n, std::uint64_t samples,
                             std::uint64_t seed, double tol);

// quantity: "entropy", "mutual-information", "conditional-entropy",
// "negativity"
json bipartite_report(const std::string& quantity, Dim m1, Dim m2, Dim n1,
                      Dim n2, std::uint64_t samples, std::uint64_t seed,
                      double tol);

json chain_report(Dim m, Dim n, Dim l, std::uint64_t samples,
                  std::uint64_t seed, double tol);

json displacement_report(Dim m, Dim n, double tol);

json sp_embed_report(Dim m, Dim n);

json hw_embed_report(Dim m, Dim n);

json wigner_ubiquity_report(Dim m, Dim n, double tol);
json weyl_ubiquity_report(Dim m, Dim n, double tol);

// Calibrated star products against the operator product, random pairs.
json star_report(Dim n, std::uint64_t samples, std::uint64_t seed, double tol);

// Demonstrates the nonubiquitous third-category family; verdict "violated"
// is the expected outcome.
json nonubiquity_demo_report(double lambda, Dim m, Dim n, double threshold);

// 0 when the verdict matches the suite's expectation, 1 otherwise.
int exit_code_for(const json& report);

}  // namespace finq::reports
