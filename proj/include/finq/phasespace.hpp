#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finq/matrixcore.hpp"
#include "finq/numtheory.hpp"

// Wigner and Weyl functions on the Z(n) x Z(n) phase space, for odd n only
// (even dimensions need a different construction and are out of scope).
//
//   W(Theta; a, b)    = Tr[Theta P(a,b)]        (displaced parity P)
//   What(Theta; a, b) = Tr[Theta Dsym(a,b,0)]
//
// The star products reproduce operator multiplication. Their printed forms
// omit an overall power of n; the constants here were calibrated against
// the operator product (least squares over random pairs) and then frozen:
// 1/n^2 for the Wigner star and 1/n for the Weyl star. The calibration
// itself is re-run in the test suite.

namespace finq::phasespace {

using matrixcore::CMatrix;
using matrixcore::cplx;
using numtheory::Dim;

class PhaseFunction {
 public:
  explicit PhaseFunction(Dim n);  // throws for even n

  std::uint64_t dim() const noexcept { return n_; }

  cplx& at(std::uint64_t alpha, std::uint64_t beta) {
    return vals_[alpha * n_ + beta];
  }
  const cplx& at(std::uint64_t alpha, std::uint64_t beta) const {
    return vals_[alpha * n_ + beta];
  }

  // alpha-major storage, index alpha*n + beta (also the JSON layout).
  const std::vector<cplx>& values() const noexcept { return vals_; }

 private:
  std::uint64_t n_;
  std::vector<cplx> vals_;
};

double max_abs_diff(const PhaseFunction& a, const PhaseFunction& b);

PhaseFunction wigner(const CMatrix& theta, Dim n);
PhaseFunction weyl(const CMatrix& theta, Dim n);

// Frozen normalization constants (see header comment).
double wigner_star_constant(std::uint64_t n);
double weyl_star_constant(std::uint64_t n);

// c * sum_{a1,b1,a2,b2} W1(a+a1, b+b1) W2(a+a2, b+b2) omega_n[2(a2 b1 - a1 b2)]
PhaseFunction wigner_star(const PhaseFunction& w1, const PhaseFunction& w2,
                          double c);

// c * sum_{a',b'} W1(2^{-1}a + a', 2^{-1}b + b') W2(2^{-1}a - a', 2^{-1}b - b')
//   * omega_n(2^{-1} a' b - 2^{-1} a b')
PhaseFunction weyl_star(const PhaseFunction& w1, const PhaseFunction& w2,
                        double c);

// Theta = (1/n) sum_{a,b} W(a,b) P(a,b); inverts wigner() exactly.
CMatrix wigner_inverse(const PhaseFunction& w);

struct MapCandidate {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
};

struct UbiquityMapReport {
  std::uint64_t m = 0, n = 0, d = 0;
  std::vector<MapCandidate> candidates;
  int surviving = 0;  // count of passing candidates
};

// For each index-map candidate (d*a, b), (a, d*b), (d*a, d*b), tests
//   W_n(J_mn(Theta); mapped indices) == W_m(Theta; a, b)
// over the full matrix-unit basis of operators and all (a, b). m|n, both odd.
UbiquityMapReport verify_wigner_ubiquity(Dim m, Dim n, double tol = 1e-9);

// Same protocol for the Weyl function, with additional phase factors
// omega_n(c a b), c in {0, +h, -h} with h = 2^{-1} d (d-1), and scale
// factors {1, d} multiplying the compared value.
UbiquityMapReport verify_weyl_ubiquity(Dim m, Dim n, double tol = 1e-9);

}  // namespace finq::phasespace
