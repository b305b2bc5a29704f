#include "finq/reports.hpp"

#include <algorithm>

#include "finq/embeddings.hpp"
#include "finq/phasespace.hpp"
#include "finq/qsystem.hpp"
#include "finq/quantities.hpp"
#include "finq/sampling.hpp"

namespace finq::reports {

namespace {

json envelope(const std::string& suite, json params, std::uint64_t seed,
              std::uint64_t samples, double tol) {
  json j;
  j["suite"] = suite;
  j["params"] = std::move(params);
  j["seed"] = seed;
  j["samples"] = samples;
  j["tolerance"] = tol;
  return j;
}

json from_ubiquity(const std::string& suite, const quantities::UbiquityReport& r) {
  json params;
  params["from_dims"] = r.from_dims;
  params["to_dims"] = r.to_dims;
  json j = envelope(suite, std::move(params), r.seed, r.samples, r.tol);
  j["max_deviation"] = r.max_deviation;
  j["verdict"] = r.ubiquitous ? "ubiquitous" : "violated";
  j["results"] = json::array({json{{"quantity", r.quantity},
                                   {"max_deviation", r.max_deviation}}});
  return j;
}

quantities::BipartiteQuantity quantity_from_name(const std::string& name) {
  if (name == "entropy") return quantities::BipartiteQuantity::Entropy;
  if (name == "mutual-information") {
    return quantities::BipartiteQuantity::MutualInformation;
  }
  if (name == "conditional-entropy") {
    return quantities::BipartiteQuantity::ConditionalEntropy;
  }
  if (name == "negativity") return quantities::BipartiteQuantity::Negativity;
  throw std::invalid_argument("unknown bipartite quantity: " + name);
}

}  // namespace

json entropy_report(Dim m, Dim n, std::uint64_t samples, std::uint64_t seed,
                    double tol) {
  return from_ubiquity("entropy",
                       quantities::sweep_entropy(m, n, samples, seed, tol));
}

json measured_entropy_report(Dim m, Dim n, std::uint64_t samples,
                             std::uint64_t seed, double tol) {
  return from_ubiquity(
      "measured-entropy",
      quantities::sweep_measured_entropy(m, n, samples, seed, tol));
}

json bipartite_report(const std::string& quantity, Dim m1, Dim m2, Dim n1,
                      Dim n2, std::uint64_t samples, std::uint64_t seed,
                      double tol) {
  auto r = quantities::sweep_bipartite(quantity_from_name(quantity), m1, m2,
                                       n1, n2, samples, seed, tol);
  return from_ubiquity(quantity, r);
}

json chain_report(Dim m, Dim n, Dim l, std::uint64_t samples,
                  std::uint64_t seed, double tol) {
  auto r = embeddings::verify_chain_compatibility(m, n, l, samples, seed, tol);
  json params;
  params["m"] = r.m;
  params["n"] = r.n;
  params["l"] = r.l;
  json j = envelope("chain", std::move(params), seed, samples, tol);
  j["max_deviation"] = std::max({r.state_max_dev, r.density_max_dev,
                                 r.projector_max_dev});
  j["verdict"] = r.pass ? "pass" : "fail";
  j["results"] = json::array(
      {json{{"law", "state"}, {"max_deviation", r.state_max_dev}},
       json{{"law", "density"}, {"max_deviation", r.density_max_dev}},
       json{{"law", "projector"}, {"max_deviation", r.projector_max_dev}}});
  return j;
}

json displacement_report(Dim m, Dim n, double tol) {
  auto r = embeddings::verify_displacement_compat(m, n, tol);
  json params;
  params["m"] = r.m;
  params["n"] = r.n;
  params["d"] = r.d;
  json j = envelope("displacement", std::move(params), 0, 0, tol);
  double max_dev = 0.0;
  json results = json::array();
  for (const auto& v : r.variants) {
    results.push_back(json{{"candidate", v.name},
                           {"pass", v.pass},
                           {"max_deviation", v.max_dev}});
    if (v.pass) max_dev = std::max(max_dev, v.max_dev);
  }
  j["max_deviation"] = max_dev;
  j["verdict"] = "info";
  j["surviving"] = r.surviving;
  j["results"] = std::move(results);
  return j;
}

json sp_embed_report(Dim m, Dim n) {
  auto r = qsystem::verify_sp_embed(m, n);
  json params;
  params["m"] = r.m;
  params["n"] = r.n;
  params["d"] = r.d;
  json j = envelope("sp-embed", std::move(params), 0, 0, 0.0);
  j["max_deviation"] = 0.0;
  j["verdict"] = "info";
  json results = json::array();
  results.push_back(json{{"check", "group-order"},
                         {"enumerated", r.group_order},
                         {"expected", r.expected_order}});
  results.push_back(json{{"check", "determinant-condition"},
                         {"ok", r.det_ok_count},
                         {"fail", r.det_fail_count},
                         {"identity_image_det", r.identity_image_det}});
  results.push_back(json{{"check", "multiplicativity"},
                         {"pairs", r.mult_pairs},
                         {"failures", r.mult_failures}});
  j["results"] = std::move(results);
  return j;
}

json hw_embed_report(Dim m, Dim n) {
  auto r = qsystem::verify_hw_embed(m, n);
  json params;
  params["m"] = r.m;
  params["n"] = r.n;
  json j = envelope("hw-embed", std::move(params), 0, 0, 0.0);
  j["max_deviation"] = 0.0;
  j["verdict"] = "info";
  j["results"] = json::array(
      {json{{"reading", "beta compared mod n"},
            {"pairs", r.pairs},
            {"failures", r.plain_failures}},
       json{{"reading", "beta compared mod m (coset)"},
            {"pairs", r.pairs},
            {"failures", r.coset_failures}}});
  return j;
}

namespace {

json from_map_report(const std::string& suite,
                     const phasespace::UbiquityMapReport& r, double tol) {
  json params;
  params["m"] = r.m;
  params["n"] = r.n;
  params["d"] = r.d;
  json j = envelope(suite, std::move(params), 0, 0, tol);
  double max_dev = 0.0;
  json results = json::array();
  for (const auto& c : r.candidates) {
    results.push_back(json{{"candidate", c.name},
                           {"pass", c.pass},
                           {"max_deviation", c.max_dev}});
    if (c.pass) max_dev = std::max(max_dev, c.max_dev);
  }
  j["max_deviation"] = max_dev;
  j["verdict"] = "info";
  j["surviving"] = r.surviving;
  j["results"] = std::move(results);
  return j;
}

}  // namespace

json wigner_ubiquity_report(Dim m, Dim n, double tol) {
  return from_map_report("wigner", phasespace::verify_wigner_ubiquity(m, n, tol),
                         tol);
}

json weyl_ubiquity_report(Dim m, Dim n, double tol) {
  return from_map_report("weyl", phasespace::verify_weyl_ubiquity(m, n, tol),
                         tol);
}

json star_report(Dim n, std::uint64_t samples, std::uint64_t seed, double tol) {
  double dev_wigner = 0.0;
  double dev_weyl = 0.0;
  double cw = phasespace::wigner_star_constant(n.value());
  double cv = phasespace::weyl_star_constant(n.value());
  for (std::uint64_t i = 0; i < samples; ++i) {
    sampling::Rng rng(sampling::derive_seed(seed, i));
    auto theta = sampling::random_matrix(n.value(), rng);
    auto phi = sampling::random_matrix(n.value(), rng);
    auto prod = theta * phi;

    auto w_star = phasespace::wigner_star(phasespace::wigner(theta, n),
                                          phasespace::wigner(phi, n), cw);
    dev_wigner = std::max(
        dev_wigner,
        phasespace::max_abs_diff(w_star, phasespace::wigner(prod, n)));

    auto v_star = phasespace::weyl_star(phasespace::weyl(theta, n),
                                        phasespace::weyl(phi, n), cv);
    dev_weyl = std::max(
        dev_weyl, phasespace::max_abs_diff(v_star, phasespace::weyl(prod, n)));
  }
  json params;
  params["n"] = n.value();
  params["wigner_constant"] = cw;
  params["weyl_constant"] = cv;
  json j = envelope("star", std::move(params), seed, samples, tol);
  j["max_deviation"] = std::max(dev_wigner, dev_weyl);
  j["verdict"] = (dev_wigner <= tol && dev_weyl <= tol) ? "pass" : "fail";
  j["results"] = json::array(
      {json{{"product", "wigner"}, {"max_deviation", dev_wigner}},
       json{{"product", "weyl"}, {"max_deviation", dev_weyl}}});
  return j;
}

json nonubiquity_demo_report(double lambda, Dim m, Dim n, double threshold) {
  auto r = quantities::nonubiquity_demo(lambda, m, n);
  json params;
  params["lambda"] = lambda;
  params["from_dims"] = r.from_dims;
  params["to_dims"] = r.to_dims;
  params["threshold"] = threshold;
  json j = envelope("nonubiquitous-demo", std::move(params), 0, 1, r.tol);
  j["max_deviation"] = r.max_deviation;
  j["verdict"] = r.max_deviation > threshold ? "violated" : "ubiquitous";
  j["results"] = json::array({json{{"quantity", r.quantity},
                                   {"max_deviation", r.max_deviation}}});
  return j;
}

int exit_code_for(const json& report) {
  std::string suite = report.at("suite").get<std::string>();
  std::string verdict = report.at("verdict").get<std::string>();
  if (verdict == "info") return 0;
  if (suite == "nonubiquitous-demo") {
    return verdict == "violated" ? 0 : 1;
  }
  return (verdict == "ubiquitous" || verdict == "pass") ? 0 : 1;
}

}  // namespace finq::reports
