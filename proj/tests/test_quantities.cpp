#include <doctest.h>

#include <cmath>
#include <vector>

#include "finq/quantities.hpp"
#include "finq/sampling.hpp"

using namespace finq::quantities;
using finq::embeddings::Basis;
using finq::embeddings::BipartiteDensity;
using finq::embeddings::DensityMatrix;
using finq::matrixcore::BiTensor;
using finq::matrixcore::CMatrix;
using finq::matrixcore::cplx;
using finq::numtheory::Dim;
using finq::sampling::Rng;

namespace {

BipartiteDensity bell_state() {
  CMatrix rho(4);
  for (int r : {0, 3})
    for (int c : {0, 3}) rho(r, c) = 0.5;
  return BipartiteDensity(BiTensor(2, 2, rho));
}

// Shannon entropy of a probability vector; the classical oracle for
// measured entropy on diagonal states.
double shannon(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0) s -= x * std::log(x);
  }
  return s;
}

}  // namespace

TEST_CASE("entropy of pure and maximally mixed states") {
  Rng rng(1);
  auto f = finq::sampling::random_state(5, rng);
  CHECK(entropy(finq::embeddings::pure_density(f)) ==
        doctest::Approx(0.0).epsilon(1e-9));

  for (int n = 2; n <= 16; ++n) {
    CMatrix mixed(n);
    for (int i = 0; i < n; ++i) mixed(i, i) = 1.0 / n;
    CHECK(entropy(DensityMatrix(mixed)) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
  }
}

TEST_CASE("entropy stays in [0, ln n]") {
  for (int n : {2, 3, 6}) {
    Rng rng(n);
    for (int rep = 0; rep < 50; ++rep) {
      double s = entropy(finq::sampling::random_density(n, rng));
      CHECK(s >= -1e-9);
      CHECK(s <= std::log(static_cast<double>(n)) + 1e-9);
    }
  }
}

TEST_CASE("entropy is ubiquitous under the embedding") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {4, 12}}) {
    auto rep = sweep_entropy(Dim(m), Dim(n), 100, 77);
    CHECK(rep.ubiquitous);
    CHECK(rep.max_deviation <= 1e-9);
  }
}

TEST_CASE("measured entropy") {
  // Position measurement on a diagonal density: the Shannon entropy.
  CMatrix diag(4);
  std::vector<double> p{0.4, 0.3, 0.2, 0.1};
  for (int i = 0; i < 4; ++i) diag(i, i) = p[i];
  DensityMatrix rho(diag);
  auto t = finq::embeddings::position_projectors(Dim(4));
  CHECK(measured_entropy(rho, t) == doctest::Approx(shannon(p)).epsilon(1e-12));

  // Measurement cannot decrease entropy.
  Rng rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    auto r = finq::sampling::random_density(4, rng);
    auto tuple = finq::sampling::random_projector_tuple(4, rng);
    CHECK(measured_entropy(r, tuple) >= entropy(r) - 1e-9);
  }
}

TEST_CASE("measured entropy is ubiquitous") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}}) {
    auto rep = sweep_measured_entropy(Dim(m), Dim(n), 60, 123);
    CHECK(rep.ubiquitous);
  }
}

TEST_CASE("Bell-state fixed values") {
  auto bell = bell_state();
  CHECK(mutual_information(bell) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-9));
  CHECK(negativity(bell) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(conditional_entropy(bell, Conditioned::FirstGivenSecond) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-9));
  CHECK(conditional_entropy(bell, Conditioned::SecondGivenFirst) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("conditional entropy of maximally-mixed x pure") {
  // rho = (1/3) I (x) |0><0|: S = ln 3, S[Tr_1 rho] = 0, so I'_{1|2} = ln 3
  // and I'_{2|1} = S - S[Tr_2 rho] = ln 3 - ln 3 = 0.
  CMatrix rho(6);
  for (int r = 0; r < 3; ++r) rho(r * 2, r * 2) = 1.0 / 3.0;
  BipartiteDensity d(BiTensor(3, 2, rho));
  CHECK(conditional_entropy(d, Conditioned::FirstGivenSecond) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-9));
  CHECK(conditional_entropy(d, Conditioned::SecondGivenFirst) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("mutual information of product states is zero") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto rho = finq::sampling::random_product_density(2, 3, rng);
    CHECK(mutual_information(rho) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(mutual_information(rho) >= -1e-9);
  }
}

TEST_CASE("negativity vanishes on separable mixtures") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    auto rho = finq::sampling::random_separable_density(2, 2, 4, rng);
    CHECK(negativity(rho) == doctest::Approx(0.0).epsilon(5e-9));
  }
}

TEST_CASE("negativity is transpose-side independent") {
  Rng rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    auto rho = finq::sampling::random_bipartite_density(2, 3, rng);
    double n1 = negativity(rho);
    auto pt2 = finq::matrixcore::partial_transpose(rho.tensor(), 2);
    double n2 = (finq::matrixcore::trace_norm(pt2.matrix()) - 1.0) / 2.0;
    CHECK(n1 == doctest::Approx(n2).epsilon(1e-9));
  }
}

TEST_CASE("bipartite quantities are ubiquitous under the tensor embedding") {
  struct Case {
    int m1, m2, n1, n2;
  };
  for (auto c : {Case{2, 2, 4, 4}, Case{2, 3, 4, 6}, Case{2, 2, 2, 4}}) {
    for (auto q : {BipartiteQuantity::Entropy, BipartiteQuantity::MutualInformation,
                   BipartiteQuantity::ConditionalEntropy,
                   BipartiteQuantity::Negativity}) {
      auto rep = sweep_bipartite(q, Dim(c.m1), Dim(c.m2), Dim(c.n1), Dim(c.n2),
                                 40, 2024);
      INFO(to_string(q), " on (", c.m1, ",", c.m2, ") -> (", c.n1, ",", c.n2, ")");
      CHECK(rep.ubiquitous);
    }
  }
}

TEST_CASE("the geometric diagonal family is not ubiquitous") {
  // lambda = 2, m = 2: weights (1/3, 2/3); embedded into n = 4 they sit at
  // slots 0 and 2, while E_4(2) has weights (1,2,4,8)/15. The largest
  // entrywise gap is 8/15.
  auto rep = nonubiquity_demo(2.0, Dim(2), Dim(4));
  CHECK_FALSE(rep.ubiquitous);
  CHECK(rep.max_deviation == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(rep.max_deviation > 0.1);

  auto e2 = geometric_family_density(2.0, Dim(2));
  CHECK(e2.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0));
  CHECK(e2.matrix()(1, 1).real() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("any quantity is trivially ubiquitous at m = n") {
  auto rep = sweep_entropy(Dim(4), Dim(4), 10, 5);
  CHECK(rep.ubiquitous);
  CHECK(rep.max_deviation == 0.0);
}

TEST_CASE("entropy ubiquity holds for the momentum-basis embedding too") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto rho = finq::sampling::random_density(3, rng);
    auto alt = finq::embeddings::embed_density(rho, Dim(6), Basis::Momentum);
    CHECK(entropy(alt) == doctest::Approx(entropy(rho)).epsilon(1e-9));
  }
}
