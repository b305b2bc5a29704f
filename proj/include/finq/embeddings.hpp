#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "finq/matrixcore.hpp"
#include "finq/numtheory.hpp"

// The subsystem embeddings: states (A_mn), densities (J_mn at the quantum
// level), projector tuples (P_mn), the shared/private partition of H(n),
// and the bipartite versions. Verifiers check the chain-composition laws
// and the displacement intertwining identity empirically.

namespace finq::embeddings {

using matrixcore::BiTensor;
using matrixcore::CMatrix;
using matrixcore::cplx;
using numtheory::Dim;

enum class Basis { Position, Momentum };

struct QState {
  std::uint64_t dim = 0;
  Basis basis = Basis::Position;
  std::vector<cplx> amplitudes;
};

QState position_basis_state(Dim n, std::uint64_t r);

cplx inner_product(const QState& a, const QState& b);
double norm(const QState& f);

// A_mn for m|n: in the position picture the amplitude at r moves to d*r and
// all other components are zero. Momentum-basis input is converted through
// F_m, embedded, and converted back through F_n; the two pictures agree.
QState embed_state(const QState& f, Dim n);

// The adjoint map: keeps the amplitudes at multiples of d, discards the
// rest (states supported off the multiples of d map to the zero vector).
QState adjoint_embed(const QState& f, Dim m);

// H(n) = H_A + H_B with dim H_A = n - phi(n) (position labels s with
// gcd(s,n) > 1, the states shared with subsystems) and dim H_B = phi(n).
std::pair<std::uint64_t, std::uint64_t> partition_dims(Dim n);

class DensityMatrix {
 public:
  // Validates: Hermitian, unit trace, positive semidefinite (within tol).
  explicit DensityMatrix(CMatrix rho, double tol = 1e-9);

  std::size_t dim() const noexcept { return rho_.dim(); }
  const CMatrix& matrix() const noexcept { return rho_; }

 private:
  CMatrix rho_;
};

DensityMatrix pure_density(const QState& f);

// J_mn on densities. Position basis zero-pads through tau; the momentum
// variant conjugates with the Fourier matrices first, and preserves the
// spectrum (hence every entropic quantity) just the same.
DensityMatrix embed_density(const DensityMatrix& rho, Dim n,
                            Basis basis = Basis::Position);

class ProjectorTuple {
 public:
  // n orthogonal projectors on H(n) summing to the identity.
  ProjectorTuple(std::uint64_t dim, std::vector<CMatrix> projectors,
                 double tol = 1e-9);

  std::uint64_t dim() const noexcept { return dim_; }
  const CMatrix& projector(std::size_t s) const { return projs_.at(s); }
  const std::vector<CMatrix>& projectors() const noexcept { return projs_; }

 private:
  std::uint64_t dim_;
  std::vector<CMatrix> projs_;
};

// The tuple of rank-1 position projectors |X;r><X;r|.
ProjectorTuple position_projectors(Dim n);

// P_mn: slot d*r holds J_mn(pi_r); the free slots (the non-multiples of d)
// are filled with rank-1 position projectors on the complement, ascending.
// Results never depend on the fill choice; embed_projectors_randomized
// provides an alternative fill for checking exactly that.
ProjectorTuple embed_projectors(const ProjectorTuple& t, Dim n);
ProjectorTuple embed_projectors_randomized(const ProjectorTuple& t, Dim n,
                                           std::uint64_t seed);

// M(rho) = sum_r pi_r rho pi_r.
DensityMatrix nonselective_measure(const DensityMatrix& rho,
                                   const ProjectorTuple& t);

// --- bipartite --------------------------------------------------------------

struct BipartiteState {
  std::uint64_t dim1 = 0, dim2 = 0;
  std::vector<cplx> amplitudes;  // composite index r1*dim2 + r2
};

BipartiteState embed_bipartite_state(const BipartiteState& f, Dim n1, Dim n2);

class BipartiteDensity {
 public:
  explicit BipartiteDensity(BiTensor rho, double tol = 1e-9);

  std::uint64_t dim1() const noexcept { return rho_.dim1(); }
  std::uint64_t dim2() const noexcept { return rho_.dim2(); }
  const BiTensor& tensor() const noexcept { return rho_; }

 private:
  BiTensor rho_;
};

BipartiteDensity embed_bipartite_density(const BipartiteDensity& rho, Dim n1,
                                         Dim n2);

// --- verifiers ---------------------------------------------------------------

struct ChainReport {
  std::uint64_t m = 0, n = 0, l = 0;
  std::uint64_t samples = 0;
  double state_max_dev = 0.0;      // A_nl . A_mn vs A_ml
  double density_max_dev = 0.0;    // J_nl . J_mn vs J_ml
  double projector_max_dev = 0.0;  // P_nl . P_mn vs P_ml, determined slots only
  double tol = 0.0;
  bool pass = false;
};

// Checks the three composition laws on random inputs; requires m|n|l.
ChainReport verify_chain_compatibility(Dim m, Dim n, Dim l,
                                       std::uint64_t samples,
                                       std::uint64_t seed, double tol = 1e-10);

struct DisplacementVariant {
  std::string name;  // component map applied to (alpha, beta, gamma)
  bool pass = false;
  double max_dev = 0.0;
};

struct DisplacementReport {
  std::uint64_t m = 0, n = 0, d = 0;
  std::vector<DisplacementVariant> variants;
  int surviving = 0;
};

// Tests A_mn . D_m(a,b,g) = D_n(image) . A_mn on every basis state and every
// (a,b,g) in Z(m)^3, for each candidate image map
//   (d a, b, d g), (a, d b, d g), (d a, d b, d g).
// Exhaustive, so the report is an oracle for which scaling is correct.
DisplacementReport verify_displacement_compat(Dim m, Dim n, double tol = 1e-10);

}  // namespace finq::embeddings
