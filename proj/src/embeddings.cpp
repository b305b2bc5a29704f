#include "finq/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "finq/qsystem.hpp"
#include "finq/sampling.hpp"

namespace finq::embeddings {

namespace {

void require_divides(std::uint64_t m, std::uint64_t n, const char* what) {
  if (m < 2 || n % m != 0) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(m) +
                                " does not divide " + std::to_string(n));
  }
}

std::vector<cplx> to_position(const QState& f) {
  if (f.basis == Basis::Position) return f.amplitudes;
  return matrixcore::apply(qsystem::fourier_matrix(Dim(f.dim)), f.amplitudes);
}

}  // namespace

QState position_basis_state(Dim n, std::uint64_t r) {
  QState f{n.value(), Basis::Position,
           std::vector<cplx>(n.value(), cplx{0.0, 0.0})};
  f.amplitudes.at(r) = 1.0;
  return f;
}

cplx inner_product(const QState& a, const QState& b) {
  if (a.dim != b.dim || a.basis != b.basis) {
    throw std::invalid_argument("inner_product: incompatible states");
  }
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return s;
}

double norm(const QState& f) {
  double n2 = 0.0;
  for (const auto& x : f.amplitudes) n2 += std::norm(x);
  return std::sqrt(n2);
}

QState embed_state(const QState& f, Dim n) {
  require_divides(f.dim, n.value(), "embed_state");
  std::uint64_t d = n.value() / f.dim;
  auto pos = to_position(f);
  std::vector<cplx> out(n.value(), cplx{0.0, 0.0});
  for (std::uint64_t r = 0; r < f.dim; ++r) out[r * d] = pos[r];
  if (f.basis == Basis::Position) {
    return QState{n.value(), Basis::Position, std::move(out)};
  }
  auto mom = matrixcore::apply(qsystem::fourier_matrix(n).adjoint(), out);
  return QState{n.value(), Basis::Momentum, std::move(mom)};
}

QState adjoint_embed(const QState& f, Dim m) {
  require_divides(m.value(), f.dim, "adjoint_embed");
  std::uint64_t d = f.dim / m.value();
  auto pos = to_position(f);
  std::vector<cplx> out(m.value());
  for (std::uint64_t r = 0; r < m.value(); ++r) out[r] = pos[r * d];
  if (f.basis == Basis::Position) {
    return QState{m.value(), Basis::Position, std::move(out)};
  }
  auto mom = matrixcore::apply(qsystem::fourier_matrix(m).adjoint(), out);
  return QState{m.value(), Basis::Momentum, std::move(mom)};
}

std::pair<std::uint64_t, std::uint64_t> partition_dims(Dim n) {
  std::uint64_t phi = numtheory::euler_phi(n.value());
  return {n.value() - phi, phi};
}

DensityMatrix::DensityMatrix(CMatrix rho, double tol) : rho_(std::move(rho)) {
  if (!rho_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  }
  if (rho_.hermiticity_defect() > tol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(rho_.trace() - cplx{1.0, 0.0}) > tol) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  auto eig = matrixcore::hermitian_eigenvalues(rho_);
  if (!eig.empty() && eig.back() < -tol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(eig.back()));
  }
}

DensityMatrix pure_density(const QState& f) {
  auto pos = to_position(f);
  CMatrix rho(pos.size());
  for (std::size_t r = 0; r < pos.size(); ++r)
    for (std::size_t c = 0; c < pos.size(); ++c)
      rho(r, c) = pos[r] * std::conj(pos[c]);
  return DensityMatrix(std::move(rho));
}

DensityMatrix embed_density(const DensityMatrix& rho, Dim n, Basis basis) {
  require_divides(rho.dim(), n.value(), "embed_density");
  if (basis == Basis::Position) {
    return DensityMatrix(matrixcore::embed_matrix(rho.matrix(), n));
  }
  // Zero-pad the momentum-representation matrix instead, then return to the
  // position representation. A different operator from the position-basis
  // embedding, but with the same spectrum (plus zeros).
  CMatrix fm = qsystem::fourier_matrix(Dim(rho.dim()));
  CMatrix fn = qsystem::fourier_matrix(n);
  CMatrix mom = fm.adjoint() * rho.matrix() * fm;
  CMatrix big = matrixcore::embed_matrix(mom, n);
  return DensityMatrix(fn * big * fn.adjoint());
}

ProjectorTuple::ProjectorTuple(std::uint64_t dim,
                               std::vector<CMatrix> projectors, double tol)
    : dim_(dim), projs_(std::move(projectors)) {
  if (projs_.size() != dim_) {
    throw std::invalid_argument("ProjectorTuple: need exactly n projectors");
  }
  CMatrix sum(dim_);
  for (const auto& p : projs_) {
    if (p.dim() != dim_) {
      throw std::invalid_argument("ProjectorTuple: projector dim mismatch");
    }
    if (p.hermiticity_defect() > tol) {
      throw std::invalid_argument("ProjectorTuple: projector not Hermitian");
    }
    sum += p;
  }
  if (matrixcore::max_abs_diff(sum, CMatrix::identity(dim_)) > tol) {
    throw std::invalid_argument("ProjectorTuple: projectors do not sum to 1");
  }
  for (std::size_t s = 0; s < projs_.size(); ++s) {
    for (std::size_t q = s; q < projs_.size(); ++q) {
      CMatrix prod = projs_[s] * projs_[q];
      CMatrix expect = (s == q) ? projs_[s] : CMatrix(dim_);
      if (matrixcore::max_abs_diff(prod, expect) > tol) {
        throw std::invalid_argument("ProjectorTuple: orthogonality violated");
      }
    }
  }
}

ProjectorTuple position_projectors(Dim n) {
  std::vector<CMatrix> projs;
  projs.reserve(n.value());
  for (std::uint64_t r = 0; r < n.value(); ++r) {
    CMatrix p(n.value());
    p(r, r) = 1.0;
    projs.push_back(std::move(p));
  }
  return ProjectorTuple(n.value(), std::move(projs));
}

namespace {

// Complement slots and their canonical positions: the non-multiples of d.
std::vector<std::uint64_t> non_multiples(std::uint64_t n, std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (s % d != 0) out.push_back(s);
  }
  return out;
}

ProjectorTuple embed_projectors_impl(const ProjectorTuple& t, Dim n,
                                     const CMatrix* complement_unitary) {
  std::uint64_t m = t.dim();
  require_divides(m, n.value(), "embed_projectors");
  std::uint64_t d = n.value() / m;
  std::vector<CMatrix> projs(n.value(), CMatrix(n.value()));
  for (std::uint64_t r = 0; r < m; ++r) {
    projs[r * d] = matrixcore::embed_matrix(t.projector(r), n);
  }
  auto free_slots = non_multiples(n.value(), d);
  for (std::size_t k = 0; k < free_slots.size(); ++k) {
    CMatrix p(n.value());
    if (complement_unitary == nullptr) {
      std::uint64_t s = free_slots[k];
      p(s, s) = 1.0;
    } else {
      // Column k of the unitary, expressed in the complement coordinates.
      for (std::size_t i = 0; i < free_slots.size(); ++i)
        for (std::size_t j = 0; j < free_slots.size(); ++j)
          p(free_slots[i], free_slots[j]) =
              (*complement_unitary)(i, k) *
              std::conj((*complement_unitary)(j, k));
    }
    projs[free_slots[k]] = std::move(p);
  }
  return ProjectorTuple(n.value(), std::move(projs));
}

}  // namespace

ProjectorTuple embed_projectors(const ProjectorTuple& t, Dim n) {
  return embed_projectors_impl(t, n, nullptr);
}

ProjectorTuple embed_projectors_randomized(const ProjectorTuple& t, Dim n,
                                           std::uint64_t seed) {
  std::uint64_t m = t.dim();
  require_divides(m, n.value(), "embed_projectors");
  std::uint64_t complement = n.value() - m;
  if (complement == 0) return embed_projectors(t, n);
  sampling::Rng rng(seed);
  CMatrix u = sampling::random_unitary(complement, rng);
  return embed_projectors_impl(t, n, &u);
}

DensityMatrix nonselective_measure(const DensityMatrix& rho,
                                   const ProjectorTuple& t) {
  if (rho.dim() != t.dim()) {
    throw std::invalid_argument("nonselective_measure: dimension mismatch");
  }
  CMatrix out(rho.dim());
  for (const auto& p : t.projectors()) out += p * rho.matrix() * p;
  return DensityMatrix(std::move(out));
}

BipartiteState embed_bipartite_state(const BipartiteState& f, Dim n1, Dim n2) {
  require_divides(f.dim1, n1.value(), "embed_bipartite_state");
  require_divides(f.dim2, n2.value(), "embed_bipartite_state");
  std::uint64_t d1 = n1.value() / f.dim1;
  std::uint64_t d2 = n2.value() / f.dim2;
  BipartiteState out{n1.value(), n2.value(),
                     std::vector<cplx>(n1.value() * n2.value(), cplx{0.0, 0.0})};
  for (std::uint64_t r1 = 0; r1 < f.dim1; ++r1)
    for (std::uint64_t r2 = 0; r2 < f.dim2; ++r2)
      out.amplitudes[(r1 * d1) * n2.value() + r2 * d2] =
          f.amplitudes[r1 * f.dim2 + r2];
  return out;
}

BipartiteDensity::BipartiteDensity(BiTensor rho, double tol)
    : rho_(std::move(rho)) {
  const CMatrix& m = rho_.matrix();
  if (!m.all_finite()) {
    throw std::invalid_argument("BipartiteDensity: non-finite entries");
  }
  if (m.hermiticity_defect() > tol) {
    throw std::invalid_argument("BipartiteDensity: not Hermitian");
  }
  if (std::abs(m.trace() - cplx{1.0, 0.0}) > tol) {
    throw std::invalid_argument("BipartiteDensity: trace != 1");
  }
  auto eig = matrixcore::hermitian_eigenvalues(m);
  if (!eig.empty() && eig.back() < -tol) {
    throw std::invalid_argument("BipartiteDensity: negative eigenvalue");
  }
}

BipartiteDensity embed_bipartite_density(const BipartiteDensity& rho, Dim n1,
                                         Dim n2) {
  require_divides(rho.dim1(), n1.value(), "embed_bipartite_density");
  require_divides(rho.dim2(), n2.value(), "embed_bipartite_density");
  return BipartiteDensity(matrixcore::embed_bitensor(rho.tensor(), n1, n2));
}

ChainReport verify_chain_compatibility(Dim m, Dim n, Dim l,
                                       std::uint64_t samples,
                                       std::uint64_t seed, double tol) {
  if (n.value() % m.value() != 0 || l.value() % n.value() != 0) {
    throw std::invalid_argument("verify_chain_compatibility: need m | n | l");
  }
  ChainReport rep;
  rep.m = m.value();
  rep.n = n.value();
  rep.l = l.value();
  rep.samples = samples;
  rep.tol = tol;

  for (std::uint64_t i = 0; i < samples; ++i) {
    sampling::Rng rng(sampling::derive_seed(seed, i));

    auto f = sampling::random_state(m.value(), rng);
    auto via = embed_state(embed_state(f, n), l);
    auto direct = embed_state(f, l);
    for (std::size_t k = 0; k < via.amplitudes.size(); ++k) {
      rep.state_max_dev =
          std::max(rep.state_max_dev,
                   std::abs(via.amplitudes[k] - direct.amplitudes[k]));
    }

    auto rho = sampling::random_density(m.value(), rng);
    auto rho_via = embed_density(embed_density(rho, n), l);
    auto rho_direct = embed_density(rho, l);
    rep.density_max_dev =
        std::max(rep.density_max_dev,
                 matrixcore::max_abs_diff(rho_via.matrix(), rho_direct.matrix()));

    auto t = sampling::random_projector_tuple(m.value(), rng);
    auto t_via = embed_projectors(embed_projectors(t, n), l);
    auto t_direct = embed_projectors(t, l);
    std::uint64_t dl = l.value() / m.value();
    for (std::uint64_t r = 0; r < m.value(); ++r) {
      rep.projector_max_dev = std::max(
          rep.projector_max_dev,
          matrixcore::max_abs_diff(t_via.projector(r * dl),
                                   t_direct.projector(r * dl)));
    }
  }
  rep.pass = rep.state_max_dev <= tol && rep.density_max_dev <= tol &&
             rep.projector_max_dev <= tol;
  return rep;
}

DisplacementReport verify_displacement_compat(Dim m, Dim n, double tol) {
  require_divides(m.value(), n.value(), "verify_displacement_compat");
  std::uint64_t mm = m.value();
  std::uint64_t d = n.value() / mm;
  DisplacementReport rep;
  rep.m = mm;
  rep.n = n.value();
  rep.d = d;

  struct Map {
    const char* name;
    std::uint64_t sa, sb;  // scale factors applied to alpha, beta
  };
  // gamma is scaled by d in every candidate (it is a pure phase).
  const Map maps[] = {{"(d*alpha, beta, d*gamma)", d, 1},
                      {"(alpha, d*beta, d*gamma)", 1, d},
                      {"(d*alpha, d*beta, d*gamma)", d, d}};

  for (const auto& map : maps) {
    DisplacementVariant var;
    var.name = map.name;
    double max_dev = 0.0;
    for (std::uint64_t a = 0; a < mm; ++a) {
      for (std::uint64_t b = 0; b < mm; ++b) {
        for (std::uint64_t g = 0; g < mm; ++g) {
          CMatrix dm = qsystem::op_d(m, a, b, g);
          CMatrix dn = qsystem::op_d(n, static_cast<std::int64_t>(map.sa * a),
                                     static_cast<std::int64_t>(map.sb * b),
                                     static_cast<std::int64_t>(d * g));
          for (std::uint64_t r = 0; r < mm; ++r) {
            auto basis = position_basis_state(m, r);
            QState moved{mm, Basis::Position,
                         matrixcore::apply(dm, basis.amplitudes)};
            auto lhs = embed_state(moved, n);
            auto rhs = matrixcore::apply(dn, embed_state(basis, n).amplitudes);
            for (std::size_t k = 0; k < rhs.size(); ++k) {
              max_dev = std::max(max_dev, std::abs(lhs.amplitudes[k] - rhs[k]));
            }
          }
        }
      }
    }
    var.max_dev = max_dev;
    var.pass = max_dev <= tol;
    if (var.pass) ++rep.surviving;
    rep.variants.push_back(std::move(var));
  }
  return rep;
}

}  // namespace finq::embeddings
