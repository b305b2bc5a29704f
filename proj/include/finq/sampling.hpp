#pragma once

#include <cstdint>
#include <vector>

#include "finq/embeddings.hpp"
#include "finq/matrixcore.hpp"

// Seeded, reproducible random sampling. The generator is a self-contained
// splitmix64 with a Box-Muller gaussian, so streams are identical across
// platforms and standard-library versions. Per-sample seeds are derived
// from the master seed, making sweep results independent of evaluation
// order.

namespace finq::sampling {

using matrixcore::CMatrix;
using matrixcore::cplx;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

std::vector<cplx> random_vector(std::size_t dim, Rng& rng);

// Normalized Gaussian vector.
embeddings::QState random_state(std::uint64_t dim, Rng& rng);

CMatrix random_matrix(std::size_t dim, Rng& rng);
CMatrix random_hermitian(std::size_t dim, Rng& rng);

// Gram-Schmidt on a Gaussian matrix; unitary within roundoff.
CMatrix random_unitary(std::size_t dim, Rng& rng);

// G G^dagger / Tr(G G^dagger): full-rank mixed state almost surely.
embeddings::DensityMatrix random_density(std::uint64_t dim, Rng& rng);

// Random rank-1 projective measurement: the columns of a random unitary.
embeddings::ProjectorTuple random_projector_tuple(std::uint64_t dim, Rng& rng);

embeddings::BipartiteDensity random_bipartite_density(std::uint64_t n1,
                                                      std::uint64_t n2,
                                                      Rng& rng);

// rho (x) sigma with independent random factors.
embeddings::BipartiteDensity random_product_density(std::uint64_t n1,
                                                    std::uint64_t n2,
                                                    Rng& rng);

// Convex mixture of random product terms: separable by construction.
embeddings::BipartiteDensity random_separable_density(std::uint64_t n1,
                                                      std::uint64_t n2,
                                                      std::size_t terms,
                                                      Rng& rng);

// Projector onto a random pure state of the composite system.
embeddings::BipartiteDensity random_pure_bipartite_density(std::uint64_t n1,
                                                           std::uint64_t n2,
                                                           Rng& rng);

}  // namespace finq::sampling
