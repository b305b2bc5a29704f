#include "finq/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "finq/sampling.hpp"

namespace finq::quantities {

namespace {

double entropy_of_matrix(const matrixcore::CMatrix& rho) {
  double s = 0.0;
  for (double lam : matrixcore::hermitian_eigenvalues(rho)) {
    if (lam < -1e-9) {
      throw std::invalid_argument("entropy: eigenvalue below tolerance");
    }
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return std::max(s, 0.0);
}

}  // namespace

double entropy(const DensityMatrix& rho) { return entropy_of_matrix(rho.matrix()); }

double entropy(const BipartiteDensity& rho) {
  return entropy_of_matrix(rho.tensor().matrix());
}

double measured_entropy(const DensityMatrix& rho, const ProjectorTuple& t) {
  return entropy(embeddings::nonselective_measure(rho, t));
}

namespace {

double marginal_entropy(const BipartiteDensity& rho, int traced_out) {
  matrixcore::CMatrix marg = matrixcore::partial_trace(rho.tensor(), traced_out);
  return entropy_of_matrix(marg);
}

}  // namespace

double mutual_information(const BipartiteDensity& rho) {
  return marginal_entropy(rho, 2) + marginal_entropy(rho, 1) - entropy(rho);
}

double conditional_entropy(const BipartiteDensity& rho, Conditioned which) {
  int traced = (which == Conditioned::FirstGivenSecond) ? 1 : 2;
  return entropy(rho) - marginal_entropy(rho, traced);
}

double negativity(const BipartiteDensity& rho) {
  matrixcore::BiTensor pt = matrixcore::partial_transpose(rho.tensor(), 1);
  return (matrixcore::trace_norm(pt.matrix()) - 1.0) / 2.0;
}

UbiquityReport sweep_entropy(Dim m, Dim n, std::uint64_t samples,
                             std::uint64_t seed, double tol) {
  return ubiquity_harness(
      "entropy", {m.value()}, {n.value()}, samples, seed, tol,
      [&](std::uint64_t i) {
        sampling::Rng rng(sampling::derive_seed(seed, i));
        auto rho = sampling::random_density(m.value(), rng);
        return std::abs(entropy(embeddings::embed_density(rho, n)) -
                        entropy(rho));
      });
}

UbiquityReport sweep_measured_entropy(Dim m, Dim n, std::uint64_t samples,
                                      std::uint64_t seed, double tol) {
  return ubiquity_harness(
      "measured-entropy", {m.value()}, {n.value()}, samples, seed, tol,
      [&](std::uint64_t i) {
        sampling::Rng rng(sampling::derive_seed(seed, i));
        auto rho = sampling::random_density(m.value(), rng);
        auto t = sampling::random_projector_tuple(m.value(), rng);
        double small = measured_entropy(rho, t);
        double big = measured_entropy(embeddings::embed_density(rho, n),
                                      embeddings::embed_projectors(t, n));
        return std::abs(big - small);
      });
}

std::string to_string(BipartiteQuantity q) {
  switch (q) {
    case BipartiteQuantity::Entropy:
      return "entropy";
    case BipartiteQuantity::MutualInformation:
      return "mutual-information";
    case BipartiteQuantity::ConditionalEntropy:
      return "conditional-entropy";
    case BipartiteQuantity::Negativity:
      return "negativity";
  }
  return "?";
}

UbiquityReport sweep_bipartite(BipartiteQuantity q, Dim m1, Dim m2, Dim n1,
                               Dim n2, std::uint64_t samples,
                               std::uint64_t seed, double tol) {
  auto eval = [q](const BipartiteDensity& rho) {
    switch (q) {
      case BipartiteQuantity::Entropy:
        return entropy(rho);
      case BipartiteQuantity::MutualInformation:
        return mutual_information(rho);
      case BipartiteQuantity::ConditionalEntropy:
        return conditional_entropy(rho, Conditioned::FirstGivenSecond);
      case BipartiteQuantity::Negativity:
        return negativity(rho);
    }
    return 0.0;
  };
  return ubiquity_harness(
      to_string(q), {m1.value(), m2.value()}, {n1.value(), n2.value()},
      samples, seed, tol, [&](std::uint64_t i) {
        sampling::Rng rng(sampling::derive_seed(seed, i));
        BipartiteDensity rho = [&]() {
          switch (i % 3) {
            case 0:
              return sampling::random_pure_bipartite_density(m1.value(),
                                                             m2.value(), rng);
            case 1:
              return sampling::random_product_density(m1.value(), m2.value(),
                                                      rng);
            default:
              return sampling::random_bipartite_density(m1.value(), m2.value(),
                                                        rng);
          }
        }();
        auto big = embeddings::embed_bipartite_density(rho, n1, n2);
        return std::abs(eval(big) - eval(rho));
      });
}

DensityMatrix geometric_family_density(double lambda, Dim n) {
  if (lambda <= 0.0 || lambda == 1.0) {
    throw std::invalid_argument("geometric_family_density: need lambda > 0, != 1");
  }
  std::uint64_t nn = n.value();
  matrixcore::CMatrix rho(nn);
  double denom = std::pow(lambda, static_cast<double>(nn)) - 1.0;
  for (std::uint64_t r = 0; r < nn; ++r) {
    rho(r, r) = std::pow(lambda, static_cast<double>(r)) * (lambda - 1.0) / denom;
  }
  return DensityMatrix(std::move(rho));
}

UbiquityReport nonubiquity_demo(double lambda, Dim m, Dim n, double tol) {
  auto em = geometric_family_density(lambda, m);
  auto en = geometric_family_density(lambda, n);
  auto embedded = embeddings::embed_density(em, n);
  UbiquityReport rep;
  rep.quantity = "geometric-family(lambda=" + std::to_string(lambda) + ")";
  rep.from_dims = {m.value()};
  rep.to_dims = {n.value()};
  rep.samples = 1;
  rep.seed = 0;
  rep.tol = tol;
  rep.max_deviation =
      matrixcore::max_abs_diff(embedded.matrix(), en.matrix());
  rep.ubiquitous = rep.max_deviation <= tol;
  return rep;
}

}  // namespace finq::quantities
