#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "finq/embeddings.hpp"
#include "finq/qsystem.hpp"
#include "finq/quantities.hpp"
#include "finq/sampling.hpp"

using namespace finq::embeddings;
using finq::matrixcore::CMatrix;
using finq::matrixcore::cplx;
using finq::matrixcore::max_abs_diff;
using finq::numtheory::Dim;
using finq::sampling::Rng;

TEST_CASE("state embedding places amplitudes on multiples of d") {
  QState f{2, Basis::Position, {cplx{0.6, 0.0}, cplx{0.0, 0.8}}};
  QState g = embed_state(f, Dim(4));
  REQUIRE(g.amplitudes.size() == 4);
  CHECK(g.amplitudes[0] == cplx{0.6, 0.0});
  CHECK(g.amplitudes[1] == cplx{0.0, 0.0});
  CHECK(g.amplitudes[2] == cplx{0.0, 0.8});
  CHECK(g.amplitudes[3] == cplx{0.0, 0.0});
  CHECK_THROWS_AS(embed_state(f, Dim(7)), std::invalid_argument);
}

TEST_CASE("state embedding preserves inner products") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {2, 4}, {2, 6}, {3, 6}, {3, 9}, {4, 12}}) {
    Rng rng(m * 31 + n);
    for (int rep = 0; rep < 200; ++rep) {
      auto f = finq::sampling::random_state(m, rng);
      auto g = finq::sampling::random_state(m, rng);
      cplx before = inner_product(f, g);
      cplx after = inner_product(embed_state(f, Dim(n)), embed_state(g, Dim(n)));
      CHECK(std::abs(before - after) < 1e-12);
    }
  }
}

TEST_CASE("momentum picture of the embedding repeats the vector d times") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {2, 8}}) {
    int d = n / m;
    Rng rng(n * 7 + m);
    auto f = finq::sampling::random_state(m, rng);
    auto fn = embed_state(f, Dim(n));

    auto gm = finq::matrixcore::apply(
        finq::qsystem::fourier_matrix(Dim(m)).adjoint(), f.amplitudes);
    auto gn = finq::matrixcore::apply(
        finq::qsystem::fourier_matrix(Dim(n)).adjoint(), fn.amplitudes);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int s = 0; s < n; ++s) {
      CHECK(std::abs(gn[s] - scale * gm[s % m]) < 1e-12);
    }
  }
}

TEST_CASE("position and momentum pictures are consistent on basis states") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {2, 4}, {2, 12}, {3, 6}, {3, 12}, {4, 8}, {6, 12}}) {
    CMatrix fm = finq::qsystem::fourier_matrix(Dim(m));
    CMatrix fn = finq::qsystem::fourier_matrix(Dim(n));
    int d = n / m;
    for (int r = 0; r < m; ++r) {
      auto basis = position_basis_state(Dim(m), r);
      auto lhs = finq::matrixcore::apply(fn, embed_state(basis, Dim(n)).amplitudes);
      auto fr = finq::matrixcore::apply(fm, basis.amplitudes);
      // momentum-picture embedding of F_m f
      std::vector<cplx> rhs(n);
      double scale = 1.0 / std::sqrt(static_cast<double>(d));
      for (int s = 0; s < n; ++s) rhs[s] = scale * fr[s % m];
      for (int s = 0; s < n; ++s) CHECK(std::abs(lhs[s] - rhs[s]) < 1e-12);
    }
  }
}

TEST_CASE("momentum-basis input goes through the Fourier transforms") {
  Rng rng(44);
  auto f = finq::sampling::random_state(3, rng);
  f.basis = Basis::Momentum;
  auto g = embed_state(f, Dim(6));
  CHECK(g.basis == Basis::Momentum);
  REQUIRE(g.amplitudes.size() == 6);
  double scale = 1.0 / std::sqrt(2.0);
  for (int s = 0; s < 6; ++s) {
    CHECK(std::abs(g.amplitudes[s] - scale * f.amplitudes[s % 3]) < 1e-12);
  }
}

TEST_CASE("adjoint embedding") {
  Rng rng(45);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {5, 5}}) {
    auto f = finq::sampling::random_state(m, rng);
    auto back = adjoint_embed(embed_state(f, Dim(n)), Dim(m));
    for (int r = 0; r < m; ++r) {
      CHECK(std::abs(back.amplitudes[r] - f.amplitudes[r]) < 1e-12);
    }
  }
  // A state supported off the multiples of d goes to zero.
  QState off{4, Basis::Position, {0.0, 1.0, 0.0, 0.0}};
  auto z = adjoint_embed(off, Dim(2));
  CHECK(std::abs(z.amplitudes[0]) == 0.0);
  CHECK(std::abs(z.amplitudes[1]) == 0.0);
}

TEST_CASE("partition dims") {
  CHECK(partition_dims(Dim(6)) == std::pair<std::uint64_t, std::uint64_t>{4, 2});
  CHECK(partition_dims(Dim(4)) == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    CHECK(partition_dims(Dim(p)) ==
          std::pair<std::uint64_t, std::uint64_t>{1, p - 1});
  }
  // dim H_A counts the position labels shared with subsystems.
  for (std::uint64_t n = 2; n <= 30; ++n) {
    std::uint64_t shared = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
      if (std::gcd(s, n) > 1 || s == 0) ++shared;
    }
    CHECK(partition_dims(Dim(n)).first == shared);
  }
}

TEST_CASE("density matrix invariants are enforced") {
  CMatrix bad(2);
  bad(0, 0) = 0.7;
  bad(1, 1) = 0.7;
  CHECK_THROWS_AS(DensityMatrix{bad}, std::invalid_argument);  // trace != 1

  CMatrix neg(2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, std::invalid_argument);  // not PSD

  CMatrix nh(2);
  nh(0, 0) = 0.5;
  nh(1, 1) = 0.5;
  nh(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix{nh}, std::invalid_argument);  // not Hermitian
}

TEST_CASE("density embedding preserves product traces and purity") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {4, 12}}) {
    Rng rng(m * 13 + n);
    for (int rep = 0; rep < 50; ++rep) {
      auto rho = finq::sampling::random_density(m, rng);
      auto sig = finq::sampling::random_density(m, rng);
      auto rho_n = embed_density(rho, Dim(n));
      auto sig_n = embed_density(sig, Dim(n));
      cplx before = (rho.matrix() * sig.matrix()).trace();
      cplx after = (rho_n.matrix() * sig_n.matrix()).trace();
      CHECK(std::abs(before - after) < 1e-12);

      cplx purity = (rho.matrix() * rho.matrix()).trace();
      cplx purity_n = (rho_n.matrix() * rho_n.matrix()).trace();
      CHECK(std::abs(purity - purity_n) < 1e-12);
    }
  }
}

TEST_CASE("eigenvector transport through the embedding") {
  Rng rng(77);
  auto rho = finq::sampling::random_density(3, rng);
  auto [values, vectors] = finq::matrixcore::hermitian_eig(rho.matrix());
  CMatrix rebuilt(6);
  for (int r = 0; r < 3; ++r) {
    QState v{3, Basis::Position, {vectors(0, r), vectors(1, r), vectors(2, r)}};
    auto u = embed_state(v, Dim(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        rebuilt(i, j) += values[r] * u.amplitudes[i] * std::conj(u.amplitudes[j]);
  }
  CHECK(max_abs_diff(rebuilt, embed_density(rho, Dim(6)).matrix()) < 1e-9);
}

TEST_CASE("momentum-basis density embedding tiles the momentum matrix") {
  Rng rng(78);
  auto rho = finq::sampling::random_density(2, rng);
  auto rho_n = embed_density(rho, Dim(6), Basis::Position);
  CMatrix f2 = finq::qsystem::fourier_matrix(Dim(2));
  CMatrix f6 = finq::qsystem::fourier_matrix(Dim(6));
  CMatrix mom_small = f2.adjoint() * rho.matrix() * f2;
  CMatrix mom_big = f6.adjoint() * rho_n.matrix() * f6;
  for (int s1 = 0; s1 < 6; ++s1)
    for (int s2 = 0; s2 < 6; ++s2)
      CHECK(std::abs(mom_big(s1, s2) - mom_small(s1 % 2, s2 % 2) / 3.0) < 1e-12);

  // The momentum-variant embedding has the same spectrum, hence entropy.
  auto alt = embed_density(rho, Dim(6), Basis::Momentum);
  CHECK(finq::quantities::entropy(alt) ==
        doctest::Approx(finq::quantities::entropy(rho)).epsilon(1e-9));
}

TEST_CASE("projector tuple validation") {
  CHECK_NOTHROW(position_projectors(Dim(5)));
  std::vector<CMatrix> bad(3, CMatrix(3));
  CHECK_THROWS_AS(ProjectorTuple(3, bad), std::invalid_argument);  // no sum to 1
}

TEST_CASE("projector embedding transports measurement statistics") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {3, 3}}) {
    int d = n / m;
    Rng rng(m * 3 + n);
    for (int rep = 0; rep < 20; ++rep) {
      auto t = finq::sampling::random_projector_tuple(m, rng);
      auto rho = finq::sampling::random_density(m, rng);
      auto tn = embed_projectors(t, Dim(n));
      auto rho_n = embed_density(rho, Dim(n));
      for (int r = 0; r < m; ++r) {
        cplx p_small = (t.projector(r) * rho.matrix()).trace();
        cplx p_big = (tn.projector(r * d) * rho_n.matrix()).trace();
        CHECK(std::abs(p_small - p_big) < 1e-12);
      }
      // No probability leaks into the fill slots.
      for (int s = 0; s < n; ++s) {
        if (s % d == 0) continue;
        cplx p = (tn.projector(s) * rho_n.matrix()).trace();
        CHECK(std::abs(p) < 1e-12);
      }
    }
  }
}

TEST_CASE("same-dimension projector embedding is the identity") {
  Rng rng(91);
  auto t = finq::sampling::random_projector_tuple(4, rng);
  auto t2 = embed_projectors(t, Dim(4));
  for (int s = 0; s < 4; ++s) {
    CHECK(max_abs_diff(t.projector(s), t2.projector(s)) == 0.0);
  }
}

TEST_CASE("nonselective measurement") {
  // Position projectors leave a diagonal density unchanged.
  CMatrix diag(3);
  diag(0, 0) = 0.5;
  diag(1, 1) = 0.3;
  diag(2, 2) = 0.2;
  DensityMatrix rho(diag);
  auto t = position_projectors(Dim(3));
  CHECK(max_abs_diff(nonselective_measure(rho, t).matrix(), diag) < 1e-12);

  // Idempotence for rank-1 tuples.
  Rng rng(92);
  auto rt = finq::sampling::random_projector_tuple(4, rng);
  auto r4 = finq::sampling::random_density(4, rng);
  auto once = nonselective_measure(r4, rt);
  auto twice = nonselective_measure(once, rt);
  CHECK(max_abs_diff(once.matrix(), twice.matrix()) < 1e-12);

  // Embedding compatibility: J(M_m(rho)) = M_n(J rho).
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}}) {
    auto t_m = finq::sampling::random_projector_tuple(m, rng);
    auto rho_m = finq::sampling::random_density(m, rng);
    auto lhs = embed_density(nonselective_measure(rho_m, t_m), Dim(n));
    auto rhs = nonselective_measure(embed_density(rho_m, Dim(n)),
                                    embed_projectors(t_m, Dim(n)));
    CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) < 1e-12);
  }
}

TEST_CASE("fill choice does not affect the transported statistics") {
  Rng rng(93);
  auto t = finq::sampling::random_projector_tuple(3, rng);
  auto rho = finq::sampling::random_density(3, rng);
  auto canonical = embed_projectors(t, Dim(6));
  auto randomized = embed_projectors_randomized(t, Dim(6), 4242);
  auto rho_n = embed_density(rho, Dim(6));
  for (int r = 0; r < 3; ++r) {
    CHECK(max_abs_diff(canonical.projector(2 * r), randomized.projector(2 * r)) ==
          0.0);
  }
  auto a = nonselective_measure(rho_n, canonical);
  auto b = nonselective_measure(rho_n, randomized);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
}

TEST_CASE("bipartite state embedding") {
  BipartiteState f{2, 2, {cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}}};
  auto g = embed_bipartite_state(f, Dim(4), Dim(4));
  REQUIRE(g.amplitudes.size() == 16);
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = 0; r2 < 4; ++r2) {
      cplx expect = (r1 % 2 == 0 && r2 % 2 == 0) ? cplx{0.5, 0} : cplx{0, 0};
      CHECK(g.amplitudes[r1 * 4 + r2] == expect);
    }

  // Product states factorize through the single-system embedding.
  Rng rng(94);
  auto a = finq::sampling::random_state(2, rng);
  auto b = finq::sampling::random_state(3, rng);
  BipartiteState prod{2, 3, {}};
  prod.amplitudes.resize(6);
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 3; ++r2)
      prod.amplitudes[r1 * 3 + r2] = a.amplitudes[r1] * b.amplitudes[r2];
  auto big = embed_bipartite_state(prod, Dim(4), Dim(6));
  auto ea = embed_state(a, Dim(4));
  auto eb = embed_state(b, Dim(6));
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = 0; r2 < 6; ++r2)
      CHECK(std::abs(big.amplitudes[r1 * 6 + r2] -
                     ea.amplitudes[r1] * eb.amplitudes[r2]) < 1e-12);

  // Norm preservation.
  double norm2 = 0.0;
  for (auto& x : big.amplitudes) norm2 += std::norm(x);
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));

  // Unchanged dims act as the identity.
  auto same = embed_bipartite_state(prod, Dim(2), Dim(3));
  for (int k = 0; k < 6; ++k) CHECK(same.amplitudes[k] == prod.amplitudes[k]);
}

TEST_CASE("bipartite density embedding with unchanged dims is the identity") {
  Rng rng(96);
  auto rho = finq::sampling::random_bipartite_density(2, 3, rng);
  auto same = embed_bipartite_density(rho, Dim(2), Dim(3));
  CHECK(max_abs_diff(same.tensor().matrix(), rho.tensor().matrix()) == 0.0);
}

TEST_CASE("bipartite density embedding respects separable structure") {
  Rng rng(95);
  // L(sum p_i rho_i x sig_i) = sum p_i J(rho_i) x J(sig_i)
  std::vector<double> p{0.3, 0.7};
  CMatrix direct(4 * 6);
  CMatrix sum_small(2 * 3);
  for (int i = 0; i < 2; ++i) {
    auto rho = finq::sampling::random_density(2, rng);
    auto sig = finq::sampling::random_density(3, rng);
    sum_small += p[i] * finq::matrixcore::kron(rho.matrix(), sig.matrix());
    direct += p[i] * finq::matrixcore::kron(
                         embed_density(rho, Dim(4)).matrix(),
                         embed_density(sig, Dim(6)).matrix());
  }
  BipartiteDensity sep(finq::matrixcore::BiTensor(2, 3, sum_small));
  auto lhs = embed_bipartite_density(sep, Dim(4), Dim(6));
  CHECK(max_abs_diff(lhs.tensor().matrix(), direct) < 1e-12);

  // Partial-trace identity at the density level.
  auto mixed = finq::sampling::random_bipartite_density(2, 3, rng);
  auto big = embed_bipartite_density(mixed, Dim(4), Dim(6));
  auto tr2_big = finq::matrixcore::partial_trace(big.tensor(), 2);
  auto tr2_small = finq::matrixcore::partial_trace(mixed.tensor(), 2);
  CHECK(max_abs_diff(tr2_big,
                     finq::matrixcore::embed_matrix(tr2_small, Dim(4))) < 1e-12);
}

TEST_CASE("chain compatibility") {
  auto r248 = verify_chain_compatibility(Dim(2), Dim(4), Dim(8), 25, 1234);
  CHECK(r248.pass);
  auto r3612 = verify_chain_compatibility(Dim(3), Dim(6), Dim(12), 25, 1234);
  CHECK(r3612.pass);
  auto same = verify_chain_compatibility(Dim(4), Dim(4), Dim(4), 5, 1);
  CHECK(same.pass);
  CHECK_THROWS_AS(verify_chain_compatibility(Dim(2), Dim(4), Dim(6), 5, 1),
                  std::invalid_argument);
}

TEST_CASE("displacement compatibility selects exactly one scaling") {
  auto r24 = verify_displacement_compat(Dim(2), Dim(4));
  CHECK(r24.surviving == 1);
  REQUIRE(r24.variants.size() == 3);
  CHECK_FALSE(r24.variants[0].pass);  // (d*alpha, beta, d*gamma)
  CHECK(r24.variants[1].pass);        // (alpha, d*beta, d*gamma)
  CHECK_FALSE(r24.variants[2].pass);  // (d*alpha, d*beta, d*gamma)

  auto r36 = verify_displacement_compat(Dim(3), Dim(6));
  CHECK(r36.surviving == 1);
  CHECK(r36.variants[1].pass);

  // m = n: all three candidates coincide with the identity map.
  auto same = verify_displacement_compat(Dim(3), Dim(3));
  CHECK(same.surviving == 3);

  // Degenerate case d = 1 (mod m): scaling alpha by d is invisible on the
  // embedded subspace, so the all-scaled candidate passes as well. The scan
  // reports what is true rather than forcing a unique answer.
  auto r26 = verify_displacement_compat(Dim(2), Dim(6));  // d = 3 = 1 (mod 2)
  CHECK(r26.surviving == 2);
  CHECK(r26.variants[1].pass);
  CHECK(r26.variants[2].pass);
  CHECK_FALSE(r26.variants[0].pass);
}
