#include "finq/phasespace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "finq/qsystem.hpp"

namespace finq::phasespace {

namespace {

void require_odd(std::uint64_t n, const char* what) {
  if (n % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": odd dimension required, got " +
                                std::to_string(n));
  }
}

void require_same_dim(const PhaseFunction& a, const PhaseFunction& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

cplx trace_product(const CMatrix& a, const CMatrix& b) {
  // Tr(A B) without forming the product.
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t;
}

std::vector<CMatrix> all_displaced_parities(Dim n) {
  std::uint64_t nn = n.value();
  std::vector<CMatrix> out;
  out.reserve(nn * nn);
  for (std::uint64_t a = 0; a < nn; ++a)
    for (std::uint64_t b = 0; b < nn; ++b)
      out.push_back(qsystem::displaced_parity(n, a, b));
  return out;
}

}  // namespace

PhaseFunction::PhaseFunction(Dim n)
    : n_(n.value()), vals_(n.value() * n.value(), cplx{0.0, 0.0}) {
  require_odd(n_, "PhaseFunction");
}

double max_abs_diff(const PhaseFunction& a, const PhaseFunction& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

PhaseFunction wigner(const CMatrix& theta, Dim n) {
  if (theta.dim() != n.value()) {
    throw std::invalid_argument("wigner: operator dim mismatch");
  }
  PhaseFunction w(n);
  auto parities = all_displaced_parities(n);
  for (std::uint64_t a = 0; a < n.value(); ++a)
    for (std::uint64_t b = 0; b < n.value(); ++b)
      w.at(a, b) = trace_product(theta, parities[a * n.value() + b]);
  return w;
}

PhaseFunction weyl(const CMatrix& theta, Dim n) {
  if (theta.dim() != n.value()) {
    throw std::invalid_argument("weyl: operator dim mismatch");
  }
  PhaseFunction w(n);
  for (std::uint64_t a = 0; a < n.value(); ++a)
    for (std::uint64_t b = 0; b < n.value(); ++b)
      w.at(a, b) = trace_product(theta, qsystem::op_d_symmetric(n, a, b, 0));
  return w;
}

double wigner_star_constant(std::uint64_t n) {
  return 1.0 / (static_cast<double>(n) * static_cast<double>(n));
}

double weyl_star_constant(std::uint64_t n) {
  return 1.0 / static_cast<double>(n);
}

PhaseFunction wigner_star(const PhaseFunction& w1, const PhaseFunction& w2,
                          double c) {
  require_same_dim(w1, w2, "wigner_star");
  std::uint64_t n = w1.dim();
  PhaseFunction out{Dim(n)};
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      cplx sum{0.0, 0.0};
      for (std::uint64_t a1 = 0; a1 < n; ++a1)
        for (std::uint64_t b1 = 0; b1 < n; ++b1)
          for (std::uint64_t a2 = 0; a2 < n; ++a2)
            for (std::uint64_t b2 = 0; b2 < n; ++b2) {
              std::uint64_t phase = (2 * (a2 * b1 % n + n * n - a1 * b2 % n)) % n;
              sum += w1.at((a + a1) % n, (b + b1) % n) *
                     w2.at((a + a2) % n, (b + b2) % n) *
                     numtheory::root_of_unity(n, static_cast<std::int64_t>(phase));
            }
      out.at(a, b) = c * sum;
    }
  }
  return out;
}

PhaseFunction weyl_star(const PhaseFunction& w1, const PhaseFunction& w2,
                        double c) {
  require_same_dim(w1, w2, "weyl_star");
  std::uint64_t n = w1.dim();
  std::uint64_t inv2 = (n + 1) / 2;
  PhaseFunction out{Dim(n)};
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t ha = inv2 * a % n;
      std::uint64_t hb = inv2 * b % n;
      cplx sum{0.0, 0.0};
      for (std::uint64_t ap = 0; ap < n; ++ap)
        for (std::uint64_t bp = 0; bp < n; ++bp) {
          std::uint64_t phase =
              (inv2 * ((ap * b % n + n * n - a * bp % n) % n)) % n;
          sum += w1.at((ha + ap) % n, (hb + bp) % n) *
                 w2.at((ha + n - ap) % n, (hb + n - bp) % n) *
                 numtheory::root_of_unity(n, static_cast<std::int64_t>(phase));
        }
      out.at(a, b) = c * sum;
    }
  }
  return out;
}

CMatrix wigner_inverse(const PhaseFunction& w) {
  std::uint64_t n = w.dim();
  auto parities = all_displaced_parities(Dim(n));
  CMatrix theta(n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      const CMatrix& p = parities[a * n + b];
      cplx coeff = w.at(a, b) / static_cast<double>(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) theta(r, s) += coeff * p(r, s);
    }
  return theta;
}

namespace {

// Matrix units E_{rs} span the operators; checking all of them plus all
// phase-space points makes the candidate scan exhaustive.
std::vector<CMatrix> matrix_unit_basis(std::uint64_t m) {
  std::vector<CMatrix> basis;
  basis.reserve(m * m);
  for (std::uint64_t r = 0; r < m; ++r)
    for (std::uint64_t s = 0; s < m; ++s) {
      CMatrix e(m);
      e(r, s) = 1.0;
      basis.push_back(std::move(e));
    }
  return basis;
}

}  // namespace

UbiquityMapReport verify_wigner_ubiquity(Dim m, Dim n, double tol) {
  require_odd(m.value(), "verify_wigner_ubiquity");
  require_odd(n.value(), "verify_wigner_ubiquity");
  if (n.value() % m.value() != 0) {
    throw std::invalid_argument("verify_wigner_ubiquity: m must divide n");
  }
  std::uint64_t mm = m.value(), d = n.value() / mm;
  UbiquityMapReport rep;
  rep.m = mm;
  rep.n = n.value();
  rep.d = d;

  struct IndexMap {
    const char* name;
    std::uint64_t sa, sb;
  };
  const IndexMap maps[] = {
      {"(d*alpha, beta)", d, 1}, {"(alpha, d*beta)", 1, d},
      {"(d*alpha, d*beta)", d, d}};

  for (const auto& map : maps) {
    MapCandidate cand;
    cand.name = map.name;
    double max_dev = 0.0;
    for (const auto& theta : matrix_unit_basis(mm)) {
      PhaseFunction wm = wigner(theta, m);
      PhaseFunction wn = wigner(matrixcore::embed_matrix(theta, n), n);
      for (std::uint64_t a = 0; a < mm; ++a)
        for (std::uint64_t b = 0; b < mm; ++b) {
          cplx lhs = wn.at(map.sa * a % n.value(), map.sb * b % n.value());
          max_dev = std::max(max_dev, std::abs(lhs - wm.at(a, b)));
        }
    }
    cand.max_dev = max_dev;
    cand.pass = max_dev <= tol;
    if (cand.pass) ++rep.surviving;
    rep.candidates.push_back(std::move(cand));
  }
  return rep;
}

UbiquityMapReport verify_weyl_ubiquity(Dim m, Dim n, double tol) {
  require_odd(m.value(), "verify_weyl_ubiquity");
  require_odd(n.value(), "verify_weyl_ubiquity");
  if (n.value() % m.value() != 0) {
    throw std::invalid_argument("verify_weyl_ubiquity: m must divide n");
  }
  std::uint64_t mm = m.value(), nn = n.value(), d = nn / mm;
  UbiquityMapReport rep;
  rep.m = mm;
  rep.n = nn;
  rep.d = d;

  struct IndexMap {
    const char* name;
    std::uint64_t sa, sb;
  };
  const IndexMap maps[] = {
      {"(d*alpha, beta)", d, 1}, {"(alpha, d*beta)", 1, d},
      {"(d*alpha, d*beta)", d, d}};

  std::uint64_t inv2 = (nn + 1) / 2;
  std::uint64_t h = inv2 * (d % nn) % nn * ((d + nn - 1) % nn) % nn;
  const std::pair<const char*, std::uint64_t> phases[] = {
      {"0", 0}, {"+h", h}, {"-h", (nn - h) % nn}};
  const std::pair<const char*, double> scales[] = {
      {"1", 1.0}, {"d", static_cast<double>(d)}};

  auto basis = matrix_unit_basis(mm);
  std::vector<PhaseFunction> wm_list, wn_list;
  for (const auto& theta : basis) {
    wm_list.push_back(weyl(theta, m));
    wn_list.push_back(weyl(matrixcore::embed_matrix(theta, n), n));
  }

  for (const auto& map : maps) {
    for (const auto& [phase_name, c] : phases) {
      for (const auto& [scale_name, scale] : scales) {
        MapCandidate cand;
        cand.name = std::string(map.name) + ", phase " + phase_name +
                    ", scale " + scale_name;
        double max_dev = 0.0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          for (std::uint64_t a = 0; a < mm; ++a)
            for (std::uint64_t b = 0; b < mm; ++b) {
              cplx lhs = scale *
                         numtheory::root_of_unity(
                             nn, static_cast<std::int64_t>(c * (a * b % nn) % nn)) *
                         wn_list[k].at(map.sa * a % nn, map.sb * b % nn);
              max_dev = std::max(max_dev, std::abs(lhs - wm_list[k].at(a, b)));
            }
        }
        cand.max_dev = max_dev;
        cand.pass = max_dev <= tol;
        if (cand.pass) ++rep.surviving;
        rep.candidates.push_back(std::move(cand));
      }
    }
  }
  return rep;
}

}  // namespace finq::phasespace
