#include "finq/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finq::sampling {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng rng(master ^ (0xa0761d6478bd642fULL * (index + 1)));
  return rng.next_u64();
}

std::vector<cplx> random_vector(std::size_t dim, Rng& rng) {
  std::vector<cplx> v(dim);
  for (auto& x : v) x = cplx{rng.gaussian(), rng.gaussian()};
  return v;
}

embeddings::QState random_state(std::uint64_t dim, Rng& rng) {
  auto v = random_vector(dim, rng);
  double norm2 = 0.0;
  for (const auto& x : v) norm2 += std::norm(x);
  double scale = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= scale;
  return embeddings::QState{dim, embeddings::Basis::Position, std::move(v)};
}

CMatrix random_matrix(std::size_t dim, Rng& rng) {
  CMatrix m(dim);
  double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = scale * cplx{rng.gaussian(), rng.gaussian()};
  return m;
}

CMatrix random_hermitian(std::size_t dim, Rng& rng) {
  CMatrix g = random_matrix(dim, rng);
  CMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

CMatrix random_unitary(std::size_t dim, Rng& rng) {
  CMatrix g = random_matrix(dim, rng);
  // Modified Gram-Schmidt on columns.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj{0.0, 0.0};
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, j)) * g(i, k);
      for (std::size_t i = 0; i < dim; ++i) g(i, k) -= proj * g(i, j);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(g(i, k));
    if (norm2 < 1e-24) {
      throw std::runtime_error("random_unitary: degenerate sample");
    }
    double scale = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) g(i, k) *= scale;
  }
  return g;
}

embeddings::DensityMatrix random_density(std::uint64_t dim, Rng& rng) {
  CMatrix g = random_matrix(dim, rng);
  CMatrix rho = g * g.adjoint();
  double tr = rho.trace().real();
  rho *= cplx{1.0 / tr, 0.0};
  return embeddings::DensityMatrix(rho);
}

embeddings::ProjectorTuple random_projector_tuple(std::uint64_t dim, Rng& rng) {
  CMatrix u = random_unitary(dim, rng);
  std::vector<CMatrix> projs;
  projs.reserve(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    CMatrix p(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        p(r, c) = u(r, k) * std::conj(u(c, k));
    projs.push_back(std::move(p));
  }
  return embeddings::ProjectorTuple(dim, std::move(projs));
}

embeddings::BipartiteDensity random_bipartite_density(std::uint64_t n1,
                                                      std::uint64_t n2,
                                                      Rng& rng) {
  CMatrix g = random_matrix(n1 * n2, rng);
  CMatrix rho = g * g.adjoint();
  double tr = rho.trace().real();
  rho *= cplx{1.0 / tr, 0.0};
  return embeddings::BipartiteDensity(matrixcore::BiTensor(n1, n2, rho));
}

embeddings::BipartiteDensity random_product_density(std::uint64_t n1,
                                                    std::uint64_t n2,
                                                    Rng& rng) {
  auto a = random_density(n1, rng);
  auto b = random_density(n2, rng);
  return embeddings::BipartiteDensity(
      matrixcore::BiTensor::product(a.matrix(), b.matrix()));
}

embeddings::BipartiteDensity random_separable_density(std::uint64_t n1,
                                                      std::uint64_t n2,
                                                      std::size_t terms,
                                                      Rng& rng) {
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) {
    w = rng.uniform() + 1e-3;
    total += w;
  }
  CMatrix sum(n1 * n2);
  for (std::size_t i = 0; i < terms; ++i) {
    auto a = random_density(n1, rng);
    auto b = random_density(n2, rng);
    sum += (weights[i] / total) * matrixcore::kron(a.matrix(), b.matrix());
  }
  return embeddings::BipartiteDensity(matrixcore::BiTensor(n1, n2, sum));
}

embeddings::BipartiteDensity random_pure_bipartite_density(std::uint64_t n1,
                                                           std::uint64_t n2,
                                                           Rng& rng) {
  auto f = random_state(n1 * n2, rng);
  CMatrix rho(n1 * n2);
  for (std::size_t r = 0; r < f.amplitudes.size(); ++r)
    for (std::size_t c = 0; c < f.amplitudes.size(); ++c)
      rho(r, c) = f.amplitudes[r] * std::conj(f.amplitudes[c]);
  return embeddings::BipartiteDensity(matrixcore::BiTensor(n1, n2, rho));
}

}  // namespace finq::sampling
