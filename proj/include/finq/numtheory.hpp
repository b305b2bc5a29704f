#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Exact integer arithmetic over the dimension set {2,3,...}: divisors,
// totients, the tau permutation that drives all matrix embeddings, and
// roots of unity. Everything here is pure and overflow-checked.

namespace finq::numtheory {

// A quantum-system dimension n >= 2. Dimension 1 (the trivial system) is
// excluded from the whole formalism; the supported range is desk scale.
class Dim {
 public:
  static constexpr std::uint64_t kMax = 1'000'000;

  explicit Dim(std::uint64_t n);

  std::uint64_t value() const noexcept { return n_; }
  operator std::uint64_t() const noexcept { return n_; }

  friend bool operator==(Dim a, Dim b) noexcept { return a.n_ == b.n_; }
  friend auto operator<=>(Dim a, Dim b) noexcept { return a.n_ <=> b.n_; }

 private:
  std::uint64_t n_;
};

// Checked arithmetic; throws std::overflow_error on wraparound.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

bool is_prime(std::uint64_t n);

// Prime factorization (p, exponent), p ascending. Trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// All divisors of n including 1 and n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// U_X(n): the divisors of n that are themselves dimensions (>= 2, so 1 is
// dropped and n itself is kept), ascending.
std::vector<std::uint64_t> divisors_in_x(Dim n);

// sigma_k(n) = sum of d^k over all divisors d of n (including 1 and n).
std::uint64_t sigma_k(Dim n, unsigned k);

std::uint64_t euler_phi(std::uint64_t n);

// Jordan totient J_k(n) = n^k prod_{p|n} (1 - p^{-k}), computed exactly as
// prod over prime powers p^a || n of (p^{ak} - p^{(a-1)k}).  J_1 = phi.
std::uint64_t jordan_totient(unsigned k, Dim n);

// Dedekind psi(n) = J_2(n) / phi(n). The division is always exact; an
// inexact division signals an arithmetic bug and throws std::logic_error.
std::uint64_t dedekind_psi(Dim n);

// |Sp(2,Z(n))| = n * J_2(n).
std::uint64_t sp2_order(Dim n);

// The permutation tau_{n,m} of {0,...,n-1} for m|n, d = n/m:
//   r <  m : tau(r) = r*d
//   r >= m : tau(r) = the (r-m)-th smallest non-multiple of d in [0,n-1],
//            i.e. r - m + floor((r-m)/(d-1)) + 1 for d >= 2.
// The second branch fills the positions the first branch leaves free, in
// ascending order, making the table a bijection.
class TauPerm {
 public:
  TauPerm(Dim n, Dim m);  // throws std::invalid_argument unless m | n

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t d() const noexcept { return d_; }

  std::uint64_t operator()(std::uint64_t r) const { return table_.at(r); }
  const std::vector<std::uint64_t>& table() const noexcept { return table_; }

 private:
  std::uint64_t n_, m_, d_;
  std::vector<std::uint64_t> table_;
};

inline TauPerm tau_perm(Dim n, Dim m) { return TauPerm(n, m); }

// omega_n(a) = exp(i 2 pi a / n), a reduced mod n (negatives allowed).
std::complex<double> root_of_unity(std::uint64_t n, std::int64_t a);

// Inverse of a mod n; throws std::invalid_argument if gcd(a, n) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

}  // namespace finq::numtheory
