#include <doctest.h>

#include <cmath>
#include <vector>

#include "finq/qsystem.hpp"
#include "finq/sampling.hpp"

using namespace finq::qsystem;
using finq::matrixcore::CMatrix;
using finq::matrixcore::max_abs_diff;
using finq::numtheory::Dim;
using finq::sampling::Rng;

namespace {

CMatrix identity(std::size_t n) { return CMatrix::identity(n); }

}  // namespace

TEST_CASE("fourier matrix") {
  CMatrix f2 = fourier_matrix(Dim(2));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - cplx{s, 0}) < 1e-15);
  CHECK(std::abs(f2(0, 1) - cplx{s, 0}) < 1e-15);
  CHECK(std::abs(f2(1, 0) - cplx{s, 0}) < 1e-15);
  CHECK(std::abs(f2(1, 1) - cplx{-s, 0}) < 1e-15);

  for (int n : {2, 3, 5, 8}) {
    CMatrix f = fourier_matrix(Dim(n));
    CHECK(max_abs_diff(f * f.adjoint(), identity(n)) < 1e-10);
  }
}

TEST_CASE("Z, X, and D operators") {
  CHECK(max_abs_diff(op_z(Dim(5), 0), identity(5)) == 0.0);

  CMatrix x = op_x(Dim(2), 1);
  CHECK(x(0, 1) == cplx{1.0, 0.0});
  CHECK(x(1, 0) == cplx{1.0, 0.0});
  CHECK(x(0, 0) == cplx{0.0, 0.0});

  // Z shifts momentum states: Z(a) F|X;r> = F|X;r+a>.
  for (int n : {3, 4}) {
    CMatrix f = fourier_matrix(Dim(n));
    for (int r = 0; r < n; ++r) {
      std::vector<cplx> e(n, cplx{0, 0});
      e[r] = 1.0;
      auto p = finq::matrixcore::apply(f, e);
      auto lhs = finq::matrixcore::apply(op_z(Dim(n), 1), p);
      std::vector<cplx> e2(n, cplx{0, 0});
      e2[(r + 1) % n] = 1.0;
      auto rhs = finq::matrixcore::apply(f, e2);
      for (int i = 0; i < n; ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12);
    }
  }
}

TEST_CASE("displacement group law") {
  for (int n = 2; n <= 9; ++n) {
    Rng rng(n);
    for (int rep = 0; rep < 50; ++rep) {
      auto r6 = [&]() { return static_cast<std::int64_t>(rng.next_u64() % n); };
      std::int64_t a1 = r6(), b1 = r6(), g1 = r6();
      std::int64_t a2 = r6(), b2 = r6(), g2 = r6();
      CMatrix lhs = op_d(Dim(n), a1, b1, g1) * op_d(Dim(n), a2, b2, g2);
      CMatrix rhs = op_d(Dim(n), a1 + a2, b1 + b2, g1 + g2 - a2 * b1);
      CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("displacement adjoint rule") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 3 + static_cast<int>(rng.next_u64() % 6);
    std::int64_t a = rng.next_u64() % n, b = rng.next_u64() % n,
                 g = rng.next_u64() % n;
    CHECK(max_abs_diff(op_d(Dim(n), a, b, g).adjoint(),
                       op_d(Dim(n), -a, -b, -g - a * b)) < 1e-12);
  }
}

TEST_CASE("symmetric displacements, odd n") {
  CHECK_THROWS_AS(op_d_symmetric(Dim(4), 1, 1, 0), std::invalid_argument);
  CHECK(max_abs_diff(op_d_symmetric(Dim(5), 0, 0, 0), identity(5)) == 0.0);

  Rng rng(9);
  for (int n : {3, 5, 7, 9}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::int64_t a1 = rng.next_u64() % n, b1 = rng.next_u64() % n,
                   g1 = rng.next_u64() % n;
      std::int64_t a2 = rng.next_u64() % n, b2 = rng.next_u64() % n,
                   g2 = rng.next_u64() % n;
      // adjoint: Dsym(a,b,g)^dagger = Dsym(-a,-b,-g)
      CHECK(max_abs_diff(op_d_symmetric(Dim(n), a1, b1, g1).adjoint(),
                         op_d_symmetric(Dim(n), -a1, -b1, -g1)) < 1e-12);
      // symmetric group law with the half phase
      std::int64_t inv2 = (n + 1) / 2;
      CMatrix lhs =
          op_d_symmetric(Dim(n), a1, b1, g1) * op_d_symmetric(Dim(n), a2, b2, g2);
      CMatrix rhs = op_d_symmetric(Dim(n), a1 + a2, b1 + b2,
                                   g1 + g2 + inv2 * (a1 * b2 - a2 * b1));
      CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("parity and displaced parity") {
  CHECK_THROWS_AS(parity(Dim(4)), std::invalid_argument);
  for (int n : {3, 5, 7, 9}) {
    CMatrix p = parity(Dim(n));
    CHECK(max_abs_diff(p * p, identity(n)) == 0.0);
    CHECK(std::abs(p.trace() - cplx{1.0, 0.0}) < 1e-15);
    CHECK(max_abs_diff(displaced_parity(Dim(n), 0, 0), p) < 1e-12);
    // Hermitian, so Wigner functions of Hermitian operators are real.
    CHECK(displaced_parity(Dim(n), 1, 2).hermiticity_defect() < 1e-12);
  }
}

TEST_CASE("displaced parity matches its closed form") {
  // <v|P(a,b)|u> = omega_n(2a(b-u)) delta(v, 2b-u), and the family sums to n*1.
  for (int n : {3, 5, 7}) {
    CMatrix total(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        CMatrix p = displaced_parity(Dim(n), a, b);
        total += p;
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            cplx expect = (v == (((2 * b - u) % n) + n) % n)
                              ? finq::numtheory::root_of_unity(n, 2 * a * (b - u))
                              : cplx{0.0, 0.0};
            CHECK(std::abs(p(v, u) - expect) < 1e-12);
          }
        }
      }
    }
    CHECK(max_abs_diff(total, static_cast<cplx>(n) * identity(n)) < 1e-12);
  }
}

TEST_CASE("displaced parities are an orthogonal family") {
  for (int n : {3, 5, 9}) {
    std::vector<CMatrix> ps;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) ps.push_back(displaced_parity(Dim(n), a, b));
    for (int i = 0; i < n * n; ++i) {
      for (int j = 0; j < n * n; ++j) {
        cplx t = (ps[i] * ps[j]).trace();
        double expect = (i == j) ? static_cast<double>(n) : 0.0;
        CHECK(std::abs(t - cplx{expect, 0.0}) < 1e-9);
      }
    }
  }
}

TEST_CASE("gamma=0 symmetric displacements are an orthogonal family") {
  for (int n : {3, 5, 7, 9}) {
    std::vector<CMatrix> ds;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) ds.push_back(op_d_symmetric(Dim(n), a, b, 0));
    for (int i = 0; i < n * n; ++i) {
      for (int j = 0; j < n * n; ++j) {
        cplx t = (ds[i].adjoint() * ds[j]).trace();
        double expect = (i == j) ? static_cast<double>(n) : 0.0;
        CHECK(std::abs(std::abs(t) - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("HW group structure") {
  HWElement e = hw_element(Dim(5), 0, 0, 0);
  HWElement a = hw_element(Dim(5), 2, 3, 1);
  CHECK(hw_mul(e, a) == a);
  CHECK(hw_mul(a, e) == a);
  CHECK(hw_mul(a, hw_inverse(a)) == e);
  CHECK(hw_mul(hw_inverse(a), a) == e);

  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 2 + static_cast<int>(rng.next_u64() % 8);
    auto r = [&]() { return static_cast<std::int64_t>(rng.next_u64() % n); };
    HWElement x = hw_element(Dim(n), r(), r(), r());
    HWElement y = hw_element(Dim(n), r(), r(), r());
    HWElement z = hw_element(Dim(n), r(), r(), r());
    CHECK(hw_mul(hw_mul(x, y), z) == hw_mul(x, hw_mul(y, z)));
  }
}

TEST_CASE("hw_matrix is a faithful representation") {
  for (int n : {2, 3, 4}) {
    for (int a1 = 0; a1 < n; ++a1)
      for (int b1 = 0; b1 < n; ++b1)
        for (int g1 = 0; g1 < n; ++g1)
          for (int a2 = 0; a2 < n; ++a2)
            for (int b2 = 0; b2 < n; ++b2)
              for (int g2 = 0; g2 < n; ++g2) {
                HWElement x = hw_element(Dim(n), a1, b1, g1);
                HWElement y = hw_element(Dim(n), a2, b2, g2);
                CHECK(mat3_mul(hw_matrix(x), hw_matrix(y)) ==
                      hw_matrix(hw_mul(x, y)));
              }
  }
}

TEST_CASE("the matrix representation realizes the displacement operators") {
  // hw_matrix and op_d share the same group law; spot-check the operator
  // composition against hw_mul on random pairs per n.
  Rng rng(17);
  for (int n = 2; n <= 9; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      auto r = [&]() { return static_cast<std::int64_t>(rng.next_u64() % n); };
      HWElement x = hw_element(Dim(n), r(), r(), r());
      HWElement y = hw_element(Dim(n), r(), r(), r());
      HWElement xy = hw_mul(x, y);
      CMatrix lhs = op_d(Dim(n), x.alpha, x.beta, x.gamma) *
                    op_d(Dim(n), y.alpha, y.beta, y.gamma);
      CMatrix rhs = op_d(Dim(n), xy.alpha, xy.beta, xy.gamma);
      CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("hw_embed composes along divisor chains") {
  for (auto [m, n, l] : std::vector<std::array<std::uint64_t, 3>>{
           {2, 4, 8}, {3, 6, 12}, {2, 6, 12}}) {
    for (std::uint64_t a = 0; a < m; ++a)
      for (std::uint64_t b = 0; b < m; ++b)
        for (std::uint64_t g = 0; g < m; ++g) {
          HWElement x{m, a, b, g};
          CHECK(hw_embed(hw_embed(x, Dim(n)), Dim(l)) == hw_embed(x, Dim(l)));
        }
  }
  HWElement e{3, 0, 0, 0};
  CHECK(hw_embed(e, Dim(12)) == (HWElement{12, 0, 0, 0}));
}

TEST_CASE("hw embedding homomorphism report") {
  auto rep = verify_hw_embed(Dim(2), Dim(4));
  CHECK(rep.pairs == 64);
  // The coset reading (beta compared mod m) always holds; the plain mod-n
  // reading fails whenever beta1 + beta2 wraps mod m.
  CHECK(rep.coset_failures == 0);
  CHECK(rep.plain_failures > 0);
  REQUIRE(rep.first_plain_failure.has_value());
  auto [x, y] = *rep.first_plain_failure;
  CHECK((x.beta + y.beta) % 4 != (x.beta + y.beta) % 2);

  auto rep36 = verify_hw_embed(Dim(3), Dim(6));
  CHECK(rep36.coset_failures == 0);
  CHECK(rep36.plain_failures > 0);

  // m = n: the two readings coincide and everything passes.
  auto same = verify_hw_embed(Dim(3), Dim(3));
  CHECK(same.plain_failures == 0);
  CHECK(same.coset_failures == 0);
}

TEST_CASE("sp_element and sp_mul") {
  CHECK_THROWS_AS(sp_element(Dim(4), 2, 0, 0, 1), std::invalid_argument);
  SpElement a = sp_element(Dim(5), 1, 2, 0, 1);
  SpElement b = sp_element(Dim(5), 1, 0, 3, 1);
  SpElement ab = sp_mul(a, b);
  // [[1,2],[0,1]] * [[1,0],[3,1]] = [[7,2],[3,1]] = [[2,2],[3,1]] mod 5
  CHECK(ab == sp_element(Dim(5), 2, 2, 3, 1));

  Rng rng(19);
  auto group = sp_enumerate(Dim(4));
  for (int rep = 0; rep < 100; ++rep) {
    const auto& x = group[rng.next_u64() % group.size()];
    const auto& y = group[rng.next_u64() % group.size()];
    const auto& z = group[rng.next_u64() % group.size()];
    CHECK(sp_mul(sp_mul(x, y), z) == sp_mul(x, sp_mul(y, z)));
  }
}

TEST_CASE("symplectic group orders match n J_2(n)") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    CHECK(sp_enumerate(Dim(n)).size() == finq::numtheory::sp2_order(Dim(n)));
  }
}

TEST_CASE("sp embedding diagnostic") {
  auto rep = verify_sp_embed(Dim(2), Dim(4));
  CHECK(rep.group_order == rep.expected_order);
  CHECK(rep.group_order == 6);
  // det of every image is d mod n, so the condition fails whenever d > 1;
  // in particular the image of the identity has det 2 mod 4.
  CHECK(rep.det_ok_count == 0);
  CHECK(rep.det_fail_count == 6);
  CHECK(rep.identity_image_det == 2);
  CHECK(rep.mult_failures > 0);

  auto rep36 = verify_sp_embed(Dim(3), Dim(6));
  CHECK(rep36.group_order == 24);
  CHECK(rep36.det_ok_count == 0);
  CHECK(rep36.identity_image_det == 2);

  // d = 1: the map is the identity and everything holds.
  auto same = verify_sp_embed(Dim(4), Dim(4));
  CHECK(same.det_fail_count == 0);
  CHECK(same.mult_failures == 0);
  CHECK(same.identity_image_det == 1);
}
