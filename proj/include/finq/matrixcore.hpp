#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "finq/numtheory.hpp"

// Dense complex linear algebra at desk scale (dim <= 64), plus the
// structural embeddings J_mn (single system) and L (bipartite) induced by
// the tau permutation. These embeddings preserve products, traces and
// spectra up to padded zeros; the verifiers here certify exactly that.

namespace finq::matrixcore {

using cplx = std::complex<double>;
using numtheory::Dim;

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {}

  static CMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * n_ + c];
  }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;

  double max_abs() const;
  // ||A - A^dagger||_max; 0 for exactly Hermitian matrices.
  double hermiticity_defect() const;
  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

// max_{r,c} |A(r,c) - B(r,c)|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Apply A to a vector.
std::vector<cplx> apply(const CMatrix& a, const std::vector<cplx>& v);

// Bipartite tensor A(r1,r2|s1,s2), stored as an (n1*n2) x (n1*n2) matrix
// with the composite row index r1*n2 + r2 (fixed project-wide, and used by
// the JSON file format as well).
class BiTensor {
 public:
  BiTensor() = default;
  BiTensor(std::size_t n1, std::size_t n2)
      : n1_(n1), n2_(n2), m_(n1 * n2) {}
  BiTensor(std::size_t n1, std::size_t n2, CMatrix m);

  std::size_t dim1() const noexcept { return n1_; }
  std::size_t dim2() const noexcept { return n2_; }

  cplx& at(std::size_t r1, std::size_t r2, std::size_t s1, std::size_t s2) {
    return m_(r1 * n2_ + r2, s1 * n2_ + s2);
  }
  const cplx& at(std::size_t r1, std::size_t r2, std::size_t s1,
                 std::size_t s2) const {
    return m_(r1 * n2_ + r2, s1 * n2_ + s2);
  }

  const CMatrix& matrix() const noexcept { return m_; }
  CMatrix& matrix() noexcept { return m_; }

  static BiTensor product(const CMatrix& b, const CMatrix& c);  // B (x) C

 private:
  std::size_t n1_ = 0, n2_ = 0;
  CMatrix m_;
};

double max_abs_diff(const BiTensor& a, const BiTensor& b);

// J_mn: places A(r,s) at (tau(r), tau(s)) = (d r, d s) and zero elsewhere.
// Requires A.dim() | n.
CMatrix embed_matrix(const CMatrix& a, Dim n);

// L: the bipartite analogue, acting through tau on each component.
// Requires dims(A) | (n1, n2) componentwise.
BiTensor embed_bitensor(const BiTensor& a, Dim n1, Dim n2);

// which = 2: Tr_2 A (an n1 x n1 matrix); which = 1: Tr_1 A (n2 x n2).
CMatrix partial_trace(const BiTensor& a, int which);

// which = 2: A(r1,r2|s1,s2) -> A(r1,s2|s1,r2); which = 1 swaps the first
// component indices. Involutive.
BiTensor partial_transpose(const BiTensor& a, int which);

struct EigResult {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column k pairs with values[k]
};

// Cyclic complex Jacobi eigendecomposition for Hermitian A. Rejects input
// with hermiticity defect above 1e-10. Off-diagonal stopping criterion
// 1e-12 relative to the largest entry.
EigResult hermitian_eig(const CMatrix& a);

std::vector<double> hermitian_eigenvalues(const CMatrix& a);

// Sum of |eigenvalue| over the spectrum; input must be Hermitian.
double trace_norm(const CMatrix& a);

// Checks Tr(J_mn(A)^k) == Tr(A^k) for k = 1..n, which certifies that the
// spectrum of the embedded matrix is the spectrum of A plus n-m zeros,
// without a general (non-Hermitian) eigensolver. Tolerance is absolute
// below magnitude 1 and relative above.
bool power_trace_check(const CMatrix& a, Dim n, double tol = 1e-8);

}  // namespace finq::matrixcore
