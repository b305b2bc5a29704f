#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finq/matrixcore.hpp"
#include "finq/numtheory.hpp"

// The finite quantum system Sigma(n): position/momentum bases, the Fourier
// transform, displacement operators, and the abstract Heisenberg-Weyl and
// symplectic groups over Z(n). Group elements use exact modular integers;
// complex matrices appear only for representations.
//
// The embedding of the symplectic group and the beta component of the
// Heisenberg-Weyl embedding are flagged rather than assumed: the verifiers
// below report exactly where the candidate maps respect or break the group
// structure, and nothing in this module asserts that they do.
//
// The unitary symplectic operators S_n themselves are not constructed here;
// their defining property is conjugation action on displacements,
//   S X(1) S^dagger = D(lambda, kappa, 0),  S Z(1) S^dagger = D(nu, mu, 0),
// which ties (kappa, mu) to position displacements and (lambda, nu) to
// momentum displacements.

namespace finq::qsystem {

using matrixcore::CMatrix;
using matrixcore::cplx;
using numtheory::Dim;

// F_n(r,s) = omega_n(r s) / sqrt(n). Unitary; |P;r> = F |X;r>.
CMatrix fourier_matrix(Dim n);

// Z_n(alpha): diagonal omega_n(r alpha). X_n(beta): cyclic position shift.
CMatrix op_z(Dim n, std::int64_t alpha);
CMatrix op_x(Dim n, std::int64_t beta);

// D_n(alpha,beta,gamma) = Z(alpha) X(beta) omega_n(gamma).
CMatrix op_d(Dim n, std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

// Symmetric displacement for odd n, where 2^{-1} exists mod n:
// Dsym = Z(alpha) X(beta) omega_n(gamma - 2^{-1} alpha beta).
CMatrix op_d_symmetric(Dim n, std::int64_t alpha, std::int64_t beta,
                       std::int64_t gamma);

// P |X;r> = |X;-r>. Odd dimension only (the phase-space machinery that uses
// it is odd-only); involutive with a single fixed point, so Tr P = 1.
CMatrix parity(Dim n);

// P(alpha,beta) = Dsym(alpha,beta,0) P Dsym(alpha,beta,0)^dagger.
CMatrix displaced_parity(Dim n, std::int64_t alpha, std::int64_t beta);

// --- Heisenberg-Weyl group HW[Z(n)] ----------------------------------------

struct HWElement {
  std::uint64_t n;
  std::uint64_t alpha, beta, gamma;  // reduced mod n

  bool operator==(const HWElement&) const = default;
};

HWElement hw_element(Dim n, std::int64_t alpha, std::int64_t beta,
                     std::int64_t gamma);

// (a1,b1,g1)(a2,b2,g2) = (a1+a2, b1+b2, g1+g2-a2*b1) mod n.
HWElement hw_mul(const HWElement& a, const HWElement& b);

// Inverse (-a, -b, -g - a b), matching the adjoint of the representation.
HWElement hw_inverse(const HWElement& a);

// 3x3 upper-triangular matrix over Z(n).
struct Mat3Z {
  std::uint64_t n;
  std::array<std::uint64_t, 9> e;  // row-major

  bool operator==(const Mat3Z&) const = default;
};

Mat3Z mat3_mul(const Mat3Z& a, const Mat3Z& b);

// [[1, -beta, gamma], [0, 1, alpha], [0, 0, 1]] with entries in Z(n).
Mat3Z hw_matrix(const HWElement& a);

// X_mn: (alpha, beta, gamma) at m -> (d alpha, beta, d gamma) at n, m|n.
HWElement hw_embed(const HWElement& a, Dim n);

// Exhaustive check whether hw_embed carries products to products, under the
// two possible readings of the beta component (compared mod n, or compared
// mod m as a coset of Z(n)/Z(d)). Diagnostic only.
struct HWEmbedReport {
  std::uint64_t m = 0, n = 0;
  std::uint64_t pairs = 0;
  std::uint64_t plain_failures = 0;   // beta compared in Z(n)
  std::uint64_t coset_failures = 0;   // beta compared mod m
  std::optional<std::pair<HWElement, HWElement>> first_plain_failure;
};

HWEmbedReport verify_hw_embed(Dim m, Dim n);

// --- symplectic group Sp(2,Z(n)) --------------------------------------------

struct SpElement {
  std::uint64_t n;
  std::uint64_t kappa, lambda, mu, nu;  // kappa*nu - lambda*mu = 1 mod n

  bool operator==(const SpElement&) const = default;
};

// Validates the determinant condition; throws std::invalid_argument.
SpElement sp_element(Dim n, std::int64_t kappa, std::int64_t lambda,
                     std::int64_t mu, std::int64_t nu);

SpElement sp_mul(const SpElement& a, const SpElement& b);

// All of Sp(2,Z(n)) by direct enumeration; size n * J_2(n).
std::vector<SpElement> sp_enumerate(Dim n);

// Image of (kappa,lambda|mu,nu) under the candidate map
// (d kappa, lambda | d mu, nu). The result is NOT asserted to lie in
// Sp(2,Z(n)); det_ok records whether the mod-n determinant condition holds.
struct SpEmbedCandidate {
  std::uint64_t n;
  std::uint64_t kappa, lambda, mu, nu;
  std::uint64_t det;  // kappa*nu - lambda*mu mod n
  bool det_ok;
};

SpEmbedCandidate sp_embed(const SpElement& a, Dim n);

// Exhaustive diagnostic over Sp(2,Z(m)): how many images satisfy the mod-n
// determinant condition, and whether the map commutes with multiplication.
struct SpEmbedReport {
  std::uint64_t m = 0, n = 0, d = 0;
  std::uint64_t group_order = 0;       // enumerated |Sp(2,Z(m))|
  std::uint64_t expected_order = 0;    // m * J_2(m)
  std::uint64_t det_ok_count = 0;
  std::uint64_t det_fail_count = 0;
  std::uint64_t identity_image_det = 0;  // always d mod n
  std::uint64_t mult_pairs = 0;
  std::uint64_t mult_failures = 0;
  std::optional<std::pair<SpElement, SpElement>> first_mult_failure;
};

SpEmbedReport verify_sp_embed(Dim m, Dim n);

}  // namespace finq::qsystem
