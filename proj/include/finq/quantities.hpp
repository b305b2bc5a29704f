#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finq/embeddings.hpp"
#include "finq/numtheory.hpp"

// Scalar quantities on densities and their ubiquity sweeps. A quantity is
// ubiquitous when evaluating it on the embedded object in any supersystem
// returns the value from the subsystem; the harness samples random inputs
// and records the worst deviation. Natural logarithm throughout.

namespace finq::quantities {

using embeddings::BipartiteDensity;
using embeddings::DensityMatrix;
using embeddings::ProjectorTuple;
using numtheory::Dim;

// Von Neumann entropy -Tr(rho ln rho), with 0 ln 0 = 0. Eigenvalues within
// -1e-9 of zero are clipped to zero; anything lower is rejected by the
// DensityMatrix invariant before we get here.
double entropy(const DensityMatrix& rho);
double entropy(const BipartiteDensity& rho);

// Entropy after the non-selective measurement M(rho) = sum pi rho pi.
double measured_entropy(const DensityMatrix& rho, const ProjectorTuple& t);

// S[Tr_2 rho] + S[Tr_1 rho] - S[rho]; nonnegative.
double mutual_information(const BipartiteDensity& rho);

enum class Conditioned { FirstGivenSecond, SecondGivenFirst };

// I'_{1|2} = S[rho] - S[Tr_1 rho] (and symmetrically); negative values
// witness entanglement.
double conditional_entropy(const BipartiteDensity& rho, Conditioned which);

// (||rho^{T_1}|| - 1) / 2 with the trace norm; 0 on PPT states.
double negativity(const BipartiteDensity& rho);

struct UbiquityReport {
  std::string quantity;
  std::vector<std::uint64_t> from_dims;
  std::vector<std::uint64_t> to_dims;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_deviation = 0.0;
  bool ubiquitous = false;
};

// Generic sweep: per sample, draw an input with `sample`, evaluate the
// quantity directly and through the embedding with `deviation`, and track
// the maximum. Samples get independent derived seeds.
template <class Deviation>
UbiquityReport ubiquity_harness(std::string quantity,
                                std::vector<std::uint64_t> from_dims,
                                std::vector<std::uint64_t> to_dims,
                                std::uint64_t samples, std::uint64_t seed,
                                double tol, Deviation&& deviation) {
  UbiquityReport rep;
  rep.quantity = std::move(quantity);
  rep.from_dims = std::move(from_dims);
  rep.to_dims = std::move(to_dims);
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double dev = deviation(i);
    if (dev > rep.max_deviation) rep.max_deviation = dev;
  }
  rep.ubiquitous = rep.max_deviation <= tol;
  return rep;
}

// S_n(J_mn rho) vs S_m(rho) over random densities.
UbiquityReport sweep_entropy(Dim m, Dim n, std::uint64_t samples,
                             std::uint64_t seed, double tol = 1e-9);

// S'_n(J_mn rho; P_mn t) vs S'_m(rho; t) over random densities and random
// projective measurements.
UbiquityReport sweep_measured_entropy(Dim m, Dim n, std::uint64_t samples,
                                      std::uint64_t seed, double tol = 1e-9);

enum class BipartiteQuantity { Entropy, MutualInformation, ConditionalEntropy, Negativity };

std::string to_string(BipartiteQuantity q);

// Quantity(L rho) vs Quantity(rho) over a mix of pure, product and mixed
// bipartite densities.
UbiquityReport sweep_bipartite(BipartiteQuantity q, Dim m1, Dim m2, Dim n1,
                               Dim n2, std::uint64_t samples,
                               std::uint64_t seed, double tol = 1e-9);

// The third-category family p_n(r; lambda) = lambda^r (lambda-1) /
// (lambda^n - 1): diagonal densities E_n(lambda). Reports the entrywise
// deviation between J_mn[E_m(lambda)] and E_n(lambda); nonzero deviation
// demonstrates a nonubiquitous quantity.
UbiquityReport nonubiquity_demo(double lambda, Dim m, Dim n, double tol = 1e-9);

DensityMatrix geometric_family_density(double lambda, Dim n);

}  // namespace finq::quantities
