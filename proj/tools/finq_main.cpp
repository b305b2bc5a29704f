// finq: queries, embeddings, and verification suites for finite quantum
// systems under the divisor partial order.
//
// Exit codes: 0 success / verdict as expected, 1 mathematical violation of
// an asserted identity, 2 usage or I/O error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finq/dcpo.hpp"
#include "finq/embeddings.hpp"
#include "finq/jsonio.hpp"
#include "finq/numtheory.hpp"
#include "finq/reports.hpp"
#include "finq/topology.hpp"

namespace {

using finq::numtheory::Dim;
using json = nlohmann::ordered_json;

struct VerifyOptions {
  std::uint64_t m = 2, n = 4, l = 8;
  std::uint64_t m1 = 2, m2 = 2, n1 = 4, n2 = 4;
  std::uint64_t samples = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double lambda = 2.0;
  std::string format = "human";
};

void print_list(const std::vector<std::uint64_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) std::cout << " ";
    std::cout << xs[i];
  }
  std::cout << "\n";
}

std::string describe(const finq::topology::OpenSet& s, std::uint64_t limit) {
  using finq::topology::SetKind;
  if (s.kind() == SetKind::Empty) return "(empty)";
  if (s.kind() == SetKind::Whole) return "(whole space)";
  std::ostringstream out;
  auto members = s.members_upto(limit);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out << " ";
    out << members[i];
  }
  return out.str();
}

// Largest member any union of basic opens can have is its largest generator.
std::uint64_t generator_limit(const finq::topology::OpenSet& s) {
  std::uint64_t lim = 2;
  for (auto g : s.generators()) lim = std::max(lim, g);
  return lim;
}

void emit_report(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << "suite: " << report.at("suite").get<std::string>() << "\n";
  std::cout << "params: " << report.at("params").dump() << "\n";
  if (report.contains("surviving")) {
    std::cout << "surviving candidates: " << report.at("surviving") << "\n";
  }
  for (const auto& r : report.at("results")) {
    std::cout << "  " << r.dump() << "\n";
  }
  std::cout << "max deviation: " << report.at("max_deviation") << "\n";
  std::cout << "verdict: " << report.at("verdict").get<std::string>() << "\n";
}

int run_verify(const std::string& suite, const VerifyOptions& o) {
  json report;
  if (suite == "entropy") {
    report = finq::reports::entropy_report(Dim(o.m), Dim(o.n), o.samples,
                                           o.seed, o.tol);
  } else if (suite == "measured-entropy") {
    report = finq::reports::measured_entropy_report(Dim(o.m), Dim(o.n),
                                                    o.samples, o.seed, o.tol);
  } else if (suite == "mutual-info") {
    report = finq::reports::bipartite_report("mutual-information", Dim(o.m1),
                                             Dim(o.m2), Dim(o.n1), Dim(o.n2),
                                             o.samples, o.seed, o.tol);
  } else if (suite == "conditional-entropy") {
    report = finq::reports::bipartite_report("conditional-entropy", Dim(o.m1),
                                             Dim(o.m2), Dim(o.n1), Dim(o.n2),
                                             o.samples, o.seed, o.tol);
  } else if (suite == "negativity") {
    report = finq::reports::bipartite_report("negativity", Dim(o.m1), Dim(o.m2),
                                             Dim(o.n1), Dim(o.n2), o.samples,
                                             o.seed, o.tol);
  } else if (suite == "chain") {
    report = finq::reports::chain_report(Dim(o.m), Dim(o.n), Dim(o.l),
                                         o.samples, o.seed, o.tol);
  } else if (suite == "displacement") {
    report = finq::reports::displacement_report(Dim(o.m), Dim(o.n), o.tol);
  } else if (suite == "sp-embed") {
    report = finq::reports::sp_embed_report(Dim(o.m), Dim(o.n));
  } else if (suite == "hw-embed") {
    report = finq::reports::hw_embed_report(Dim(o.m), Dim(o.n));
  } else if (suite == "wigner") {
    report = finq::reports::wigner_ubiquity_report(Dim(o.m), Dim(o.n), o.tol);
  } else if (suite == "weyl") {
    report = finq::reports::weyl_ubiquity_report(Dim(o.m), Dim(o.n), o.tol);
  } else if (suite == "star") {
    report = finq::reports::star_report(Dim(o.n), o.samples, o.seed, o.tol);
  } else if (suite == "nonubiquitous-demo") {
    report = finq::reports::nonubiquity_demo_report(o.lambda, Dim(o.m),
                                                    Dim(o.n), 0.1);
  } else {
    std::cerr << "unknown verify suite: " << suite << "\n";
    return 2;
  }
  emit_report(report, o.format);
  return finq::reports::exit_code_for(report);
}

std::vector<std::uint64_t> parse_dims(const std::string& text) {
  std::vector<std::uint64_t> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    dims.push_back(std::stoull(part));
  }
  if (dims.empty() || dims.size() > 2) {
    throw std::invalid_argument("expected one or two comma-separated dims");
  }
  return dims;
}

int run_embed(const std::string& in_path, const std::string& out_path,
              const std::string& from_text, const std::string& to_text) {
  auto to = parse_dims(to_text);
  json in = finq::jsonio::load_file(in_path);
  if (!from_text.empty()) {
    // Optional consistency check of the source dims against the file.
    auto from = parse_dims(from_text);
    std::vector<std::uint64_t> file_dims;
    if (in.contains("dims")) {
      for (const auto& d : in.at("dims")) file_dims.push_back(d.get<std::uint64_t>());
    } else {
      file_dims.push_back(in.at("dim").get<std::uint64_t>());
    }
    if (from != file_dims) {
      throw std::invalid_argument("--from does not match the input file dims");
    }
  }
  json out;
  if (in.contains("amplitudes")) {
    auto f = finq::jsonio::state_from_json(in);
    if (to.size() != 1) {
      throw std::invalid_argument("state embedding takes a single --to dim");
    }
    out = finq::jsonio::state_to_json(finq::embeddings::embed_state(f, Dim(to[0])));
  } else if (in.contains("matrix")) {
    if (finq::jsonio::is_bipartite_density(in)) {
      if (to.size() != 2) {
        throw std::invalid_argument("bipartite density needs --to n1,n2");
      }
      auto rho = finq::jsonio::bipartite_density_from_json(in);
      out = finq::jsonio::density_to_json(finq::embeddings::embed_bipartite_density(
          rho, Dim(to[0]), Dim(to[1])));
    } else {
      if (to.size() != 1) {
        throw std::invalid_argument("single density takes a single --to dim");
      }
      auto rho = finq::jsonio::density_from_json(in);
      out = finq::jsonio::density_to_json(
          finq::embeddings::embed_density(rho, Dim(to[0])));
    }
  } else {
    throw std::invalid_argument("input is neither a state nor a density");
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << out.dump(2) << "\n";
  } else {
    finq::jsonio::save_file(out_path, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum systems: divisor topology, embeddings, ubiquity"};
  app.require_subcommand(1);

  // --- nt ---------------------------------------------------------------
  auto* nt = app.add_subcommand("nt", "number-theoretic queries");
  nt->require_subcommand(1);
  std::uint64_t nt_n = 6, nt_m = 3;
  unsigned nt_k = 2;

  auto* nt_divisors = nt->add_subcommand("divisors", "divisors of n in X");
  nt_divisors->add_option("--n", nt_n)->required();
  auto* nt_sigma = nt->add_subcommand("sigma", "divisor power sum sigma_k(n)");
  nt_sigma->add_option("--n", nt_n)->required();
  nt_sigma->add_option("--k", nt_k);
  auto* nt_phi = nt->add_subcommand("phi", "Euler totient");
  nt_phi->add_option("--n", nt_n)->required();
  auto* nt_jordan = nt->add_subcommand("jordan", "Jordan totient J_k(n)");
  nt_jordan->add_option("--n", nt_n)->required();
  nt_jordan->add_option("--k", nt_k);
  auto* nt_psi = nt->add_subcommand("psi", "Dedekind psi(n)");
  nt_psi->add_option("--n", nt_n)->required();
  auto* nt_sp2 = nt->add_subcommand("sp2-order", "|Sp(2,Z(n))| = n J_2(n)");
  nt_sp2->add_option("--n", nt_n)->required();
  auto* nt_tau = nt->add_subcommand("tau", "permutation tau_{n,m}");
  nt_tau->add_option("--n", nt_n)->required();
  nt_tau->add_option("--m", nt_m)->required();

  // --- topo -------------------------------------------------------------
  auto* topo = app.add_subcommand("topo", "divisor-topology queries");
  topo->require_subcommand(1);
  std::uint64_t topo_n = 6, topo_m = 2, topo_a = 6, topo_b = 9;
  std::uint64_t topo_limit = 0;

  auto* topo_open = topo->add_subcommand("open", "members of U(n)");
  topo_open->add_option("--n", topo_n)->required();
  auto* topo_member = topo->add_subcommand("member", "is m in U(n)?");
  topo_member->add_option("--m", topo_m)->required();
  topo_member->add_option("--n", topo_n)->required();
  auto* topo_union = topo->add_subcommand("union", "members of U(a) u U(b)");
  topo_union->add_option("--a", topo_a)->required();
  topo_union->add_option("--b", topo_b)->required();
  auto* topo_intersect =
      topo->add_subcommand("intersect", "members of U(a) n U(b)");
  topo_intersect->add_option("--a", topo_a)->required();
  topo_intersect->add_option("--b", topo_b)->required();
  auto* topo_closure =
      topo->add_subcommand("closure", "closure{n} up to --limit");
  topo_closure->add_option("--n", topo_n)->required();
  topo_closure->add_option("--limit", topo_limit)->required();
  auto* topo_t0 = topo->add_subcommand("t0", "open set separating a from b");
  topo_t0->add_option("--a", topo_a)->required();
  topo_t0->add_option("--b", topo_b)->required();
  auto* topo_t1 = topo->add_subcommand("t1", "is two-sided separation possible?");
  topo_t1->add_option("--a", topo_a)->required();
  topo_t1->add_option("--b", topo_b)->required();

  // --- embed ------------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "embed a state/density JSON file");
  std::string embed_in, embed_out = "-", embed_to, embed_from;
  embed->add_option("--in", embed_in, "input JSON file")->required();
  embed->add_option("--out", embed_out, "output JSON file ('-' for stdout)");
  embed->add_option("--from", embed_from,
                    "source dim (or m1,m2); checked against the file");
  embed->add_option("--to", embed_to, "target dim (or n1,n2)")->required();

  // --- verify -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verification suites");
  VerifyOptions vo;
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "entropy | measured-entropy | mutual-info | "
                   "conditional-entropy | negativity | chain | displacement | "
                   "sp-embed | hw-embed | wigner | weyl | star | "
                   "nonubiquitous-demo")
      ->required();
  verify->add_option("--m", vo.m);
  verify->add_option("--n", vo.n);
  verify->add_option("--l", vo.l);
  verify->add_option("--m1", vo.m1);
  verify->add_option("--m2", vo.m2);
  verify->add_option("--n1", vo.n1);
  verify->add_option("--n2", vo.n2);
  verify->add_option("--samples", vo.samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", vo.seed);
  verify->add_option("--tol", vo.tol)->check(CLI::PositiveNumber);
  verify->add_option("--lambda", vo.lambda);
  verify->add_option("--format", vo.format)
      ->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (nt_divisors->parsed()) {
      print_list(finq::numtheory::divisors_in_x(Dim(nt_n)));
    } else if (nt_sigma->parsed()) {
      std::cout << finq::numtheory::sigma_k(Dim(nt_n), nt_k) << "\n";
    } else if (nt_phi->parsed()) {
      std::cout << finq::numtheory::euler_phi(nt_n) << "\n";
    } else if (nt_jordan->parsed()) {
      std::cout << finq::numtheory::jordan_totient(nt_k, Dim(nt_n)) << "\n";
    } else if (nt_psi->parsed()) {
      std::cout << finq::numtheory::dedekind_psi(Dim(nt_n)) << "\n";
    } else if (nt_sp2->parsed()) {
      std::cout << finq::numtheory::sp2_order(Dim(nt_n)) << "\n";
    } else if (nt_tau->parsed()) {
      print_list(finq::numtheory::tau_perm(Dim(nt_n), Dim(nt_m)).table());
    } else if (topo_open->parsed()) {
      auto s = finq::topology::basic_open(Dim(topo_n));
      std::cout << describe(s, topo_n) << "\n";
    } else if (topo_member->parsed()) {
      auto s = finq::topology::basic_open(Dim(topo_n));
      std::cout << (s.contains(topo_m) ? "true" : "false") << "\n";
    } else if (topo_union->parsed()) {
      auto s = finq::topology::basic_open(Dim(topo_a))
                   .united(finq::topology::basic_open(Dim(topo_b)));
      std::cout << describe(s, std::max(topo_a, topo_b)) << "\n";
    } else if (topo_intersect->parsed()) {
      auto s = finq::topology::basic_open(Dim(topo_a))
                   .intersected(finq::topology::basic_open(Dim(topo_b)));
      std::cout << describe(s, generator_limit(s)) << "\n";
    } else if (topo_closure->parsed()) {
      print_list(finq::topology::closure_list(Dim(topo_n), topo_limit));
    } else if (topo_t0->parsed()) {
      auto s = finq::topology::t0_witness(Dim(topo_a), Dim(topo_b));
      std::cout << "U(" << s.generators().front() << ") = {"
                << describe(s, generator_limit(s)) << "}\n";
    } else if (topo_t1->parsed()) {
      if (finq::topology::t1_fails(Dim(topo_a), Dim(topo_b))) {
        bool ab = topo_b % topo_a == 0;
        std::cout << "T1 separation impossible: " << (ab ? topo_a : topo_b)
                  << " | " << (ab ? topo_b : topo_a) << "\n";
      } else {
        std::cout << "T1 separation possible: neither divides the other\n";
      }
    } else if (embed->parsed()) {
      return run_embed(embed_in, embed_out, embed_from, embed_to);
    } else if (verify->parsed()) {
      return run_verify(suite, vo);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
