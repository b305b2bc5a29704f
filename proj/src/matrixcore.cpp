#include "finq/matrixcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace finq::matrixcore {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o, "operator+");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o, "operator-");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator*");
  std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

cplx CMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

bool CMatrix::all_finite() const {
  for (const auto& x : a_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  std::size_t na = a.dim(), nb = b.dim();
  CMatrix c(na * nb);
  for (std::size_t r1 = 0; r1 < na; ++r1)
    for (std::size_t r2 = 0; r2 < nb; ++r2)
      for (std::size_t s1 = 0; s1 < na; ++s1)
        for (std::size_t s2 = 0; s2 < nb; ++s2)
          c(r1 * nb + r2, s1 * nb + s2) = a(r1, s1) * b(r2, s2);
  return c;
}

std::vector<cplx> apply(const CMatrix& a, const std::vector<cplx>& v) {
  if (v.size() != a.dim()) {
    throw std::invalid_argument("apply: vector length mismatch");
  }
  std::vector<cplx> out(a.dim(), cplx{0.0, 0.0});
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

BiTensor::BiTensor(std::size_t n1, std::size_t n2, CMatrix m)
    : n1_(n1), n2_(n2), m_(std::move(m)) {
  if (m_.dim() != n1 * n2) {
    throw std::invalid_argument("BiTensor: matrix dim != n1*n2");
  }
}

BiTensor BiTensor::product(const CMatrix& b, const CMatrix& c) {
  return BiTensor(b.dim(), c.dim(), kron(b, c));
}

double max_abs_diff(const BiTensor& a, const BiTensor& b) {
  if (a.dim1() != b.dim1() || a.dim2() != b.dim2()) {
    throw std::invalid_argument("max_abs_diff: tensor dims mismatch");
  }
  return max_abs_diff(a.matrix(), b.matrix());
}

CMatrix embed_matrix(const CMatrix& a, Dim n) {
  std::uint64_t m = a.dim();
  if (m < 2) throw std::invalid_argument("embed_matrix: source dim must be >= 2");
  numtheory::TauPerm tau(n, Dim(m));
  CMatrix out(n.value());
  for (std::uint64_t r = 0; r < m; ++r)
    for (std::uint64_t s = 0; s < m; ++s) out(tau(r), tau(s)) = a(r, s);
  return out;
}

BiTensor embed_bitensor(const BiTensor& a, Dim n1, Dim n2) {
  std::uint64_t m1 = a.dim1(), m2 = a.dim2();
  numtheory::TauPerm tau1(n1, Dim(m1));
  numtheory::TauPerm tau2(n2, Dim(m2));
  BiTensor out(n1.value(), n2.value());
  for (std::uint64_t r1 = 0; r1 < m1; ++r1)
    for (std::uint64_t r2 = 0; r2 < m2; ++r2)
      for (std::uint64_t s1 = 0; s1 < m1; ++s1)
        for (std::uint64_t s2 = 0; s2 < m2; ++s2)
          out.at(tau1(r1), tau2(r2), tau1(s1), tau2(s2)) =
              a.at(r1, r2, s1, s2);
  return out;
}

CMatrix partial_trace(const BiTensor& a, int which) {
  if (which == 2) {
    CMatrix out(a.dim1());
    for (std::size_t r = 0; r < a.dim1(); ++r)
      for (std::size_t s = 0; s < a.dim1(); ++s)
        for (std::size_t u = 0; u < a.dim2(); ++u)
          out(r, s) += a.at(r, u, s, u);
    return out;
  }
  if (which == 1) {
    CMatrix out(a.dim2());
    for (std::size_t r = 0; r < a.dim2(); ++r)
      for (std::size_t s = 0; s < a.dim2(); ++s)
        for (std::size_t u = 0; u < a.dim1(); ++u)
          out(r, s) += a.at(u, r, u, s);
    return out;
  }
  throw std::invalid_argument("partial_trace: which must be 1 or 2");
}

BiTensor partial_transpose(const BiTensor& a, int which) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("partial_transpose: which must be 1 or 2");
  }
  BiTensor out(a.dim1(), a.dim2());
  for (std::size_t r1 = 0; r1 < a.dim1(); ++r1)
    for (std::size_t r2 = 0; r2 < a.dim2(); ++r2)
      for (std::size_t s1 = 0; s1 < a.dim1(); ++s1)
        for (std::size_t s2 = 0; s2 < a.dim2(); ++s2)
          out.at(r1, r2, s1, s2) = (which == 2) ? a.at(r1, s2, s1, r2)
                                                : a.at(s1, r2, r1, s2);
  return out;
}

EigResult hermitian_eig(const CMatrix& a) {
  if (!a.all_finite()) {
    throw std::invalid_argument("hermitian_eig: non-finite entries");
  }
  if (a.hermiticity_defect() > 1e-10) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  std::size_t n = a.dim();

  // Symmetrize exactly so rounding in the input cannot leak into phases.
  CMatrix h(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

  CMatrix v = CMatrix::identity(n);
  const double threshold = 1e-12 * std::max(1.0, h.max_abs());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        off = std::max(off, std::abs(h(p, q)));
    if (off <= threshold) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double r = std::abs(h(p, q));
        if (r <= threshold) {
          continue;
        }
        cplx phase = h(p, q) / r;
        double app = h(p, p).real();
        double aqq = h(q, q).real();
        double theta = (aqq - app) / (2.0 * r);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        // Unitary plane rotation J: J(p,p)=c, J(p,q)=s*phase,
        // J(q,p)=-s*conj(phase), J(q,q)=c. Update h <- J^dagger h J.
        for (std::size_t i = 0; i < n; ++i) {
          cplx hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - s * std::conj(phase) * hiq;
          h(i, q) = s * phase * hip + c * hiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          cplx hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - s * phase * hqj;
          h(q, j) = s * std::conj(phase) * hpj + c * hqj;
        }
        h(p, q) = cplx{0.0, 0.0};
        h(q, p) = cplx{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
          cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&h](std::size_t i, std::size_t j) {
    return h(i, i).real() > h(j, j).real();
  });

  EigResult res;
  res.values.resize(n);
  res.vectors = CMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  return hermitian_eig(a).values;
}

double trace_norm(const CMatrix& a) {
  double sum = 0.0;
  for (double lam : hermitian_eigenvalues(a)) sum += std::abs(lam);
  return sum;
}

bool power_trace_check(const CMatrix& a, Dim n, double tol) {
  CMatrix big = embed_matrix(a, n);
  CMatrix pow_small = a;
  CMatrix pow_big = big;
  for (std::uint64_t k = 1; k <= n.value(); ++k) {
    if (k > 1) {
      pow_small = pow_small * a;
      pow_big = pow_big * big;
    }
    cplx ts = pow_small.trace();
    cplx tb = pow_big.trace();
    double scale = std::max(1.0, std::abs(ts));
    if (std::abs(ts - tb) > tol * scale) return false;
  }
  return true;
}

}  // namespace finq::matrixcore
