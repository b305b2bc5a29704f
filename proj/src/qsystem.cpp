#include "finq/qsystem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace finq::qsystem {

namespace {

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n) {
  std::int64_t nn = static_cast<std::int64_t>(n);
  std::int64_t r = a % nn;
  if (r < 0) r += nn;
  return static_cast<std::uint64_t>(r);
}

void require_odd(Dim n, const char* what) {
  if (n.value() % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": defined for odd dimension only, got n = " +
                                std::to_string(n.value()));
  }
}

}  // namespace

CMatrix fourier_matrix(Dim n) {
  std::uint64_t nn = n.value();
  CMatrix f(nn);
  double scale = 1.0 / std::sqrt(static_cast<double>(nn));
  for (std::uint64_t r = 0; r < nn; ++r)
    for (std::uint64_t s = 0; s < nn; ++s)
      f(r, s) = scale * numtheory::root_of_unity(nn, static_cast<std::int64_t>(
                                                         (r * s) % nn));
  return f;
}

CMatrix op_z(Dim n, std::int64_t alpha) {
  std::uint64_t nn = n.value();
  std::uint64_t a = reduce_mod(alpha, nn);
  CMatrix z(nn);
  for (std::uint64_t r = 0; r < nn; ++r)
    z(r, r) = numtheory::root_of_unity(nn, static_cast<std::int64_t>((r * a) % nn));
  return z;
}

CMatrix op_x(Dim n, std::int64_t beta) {
  std::uint64_t nn = n.value();
  std::uint64_t b = reduce_mod(beta, nn);
  CMatrix x(nn);
  for (std::uint64_t r = 0; r < nn; ++r) x((r + b) % nn, r) = 1.0;
  return x;
}

CMatrix op_d(Dim n, std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
  CMatrix d = op_z(n, alpha) * op_x(n, beta);
  return d * numtheory::root_of_unity(n.value(), gamma);
}

CMatrix op_d_symmetric(Dim n, std::int64_t alpha, std::int64_t beta,
                       std::int64_t gamma) {
  require_odd(n, "op_d_symmetric");
  std::uint64_t nn = n.value();
  std::uint64_t inv2 = (nn + 1) / 2;  // 2^{-1} mod odd n
  std::uint64_t a = reduce_mod(alpha, nn), b = reduce_mod(beta, nn);
  std::uint64_t g = reduce_mod(gamma, nn);
  std::uint64_t shift = (inv2 * ((a * b) % nn)) % nn;
  std::int64_t phase = static_cast<std::int64_t>((g + nn - shift) % nn);
  CMatrix d = op_z(n, alpha) * op_x(n, beta);
  return d * numtheory::root_of_unity(nn, phase);
}

CMatrix parity(Dim n) {
  require_odd(n, "parity");
  std::uint64_t nn = n.value();
  CMatrix p(nn);
  for (std::uint64_t r = 0; r < nn; ++r) p((nn - r) % nn, r) = 1.0;
  return p;
}

CMatrix displaced_parity(Dim n, std::int64_t alpha, std::int64_t beta) {
  CMatrix d = op_d_symmetric(n, alpha, beta, 0);
  return d * parity(n) * d.adjoint();
}

HWElement hw_element(Dim n, std::int64_t alpha, std::int64_t beta,
                     std::int64_t gamma) {
  std::uint64_t nn = n.value();
  return {nn, reduce_mod(alpha, nn), reduce_mod(beta, nn), reduce_mod(gamma, nn)};
}

HWElement hw_mul(const HWElement& a, const HWElement& b) {
  if (a.n != b.n) throw std::invalid_argument("hw_mul: mixed moduli");
  std::uint64_t n = a.n;
  std::uint64_t alpha = (a.alpha + b.alpha) % n;
  std::uint64_t beta = (a.beta + b.beta) % n;
  std::uint64_t gamma = (a.gamma + b.gamma + n * n - (b.alpha * a.beta) % n) % n;
  return {n, alpha, beta, gamma};
}

HWElement hw_inverse(const HWElement& a) {
  std::uint64_t n = a.n;
  std::uint64_t gamma = (n * n - a.gamma - (a.alpha * a.beta) % n) % n;
  return {n, (n - a.alpha) % n, (n - a.beta) % n, gamma};
}

Mat3Z mat3_mul(const Mat3Z& a, const Mat3Z& b) {
  if (a.n != b.n) throw std::invalid_argument("mat3_mul: mixed moduli");
  Mat3Z c{a.n, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < 3; ++k) s += a.e[3 * i + k] * b.e[3 * k + j];
      c.e[3 * i + j] = s % a.n;
    }
  return c;
}

Mat3Z hw_matrix(const HWElement& a) {
  std::uint64_t n = a.n;
  return Mat3Z{n,
               {1, (n - a.beta) % n, a.gamma,
                0, 1, a.alpha,
                0, 0, 1}};
}

HWElement hw_embed(const HWElement& a, Dim n) {
  if (n.value() % a.n != 0) {
    throw std::invalid_argument("hw_embed: source modulus must divide target");
  }
  std::uint64_t d = n.value() / a.n;
  return {n.value(), (d * a.alpha) % n.value(), a.beta,
          (d * a.gamma) % n.value()};
}

HWEmbedReport verify_hw_embed(Dim m, Dim n) {
  if (n.value() % m.value() != 0) {
    throw std::invalid_argument("verify_hw_embed: m must divide n");
  }
  HWEmbedReport rep;
  rep.m = m.value();
  rep.n = n.value();
  std::uint64_t mm = m.value();
  for (std::uint64_t a1 = 0; a1 < mm; ++a1)
    for (std::uint64_t b1 = 0; b1 < mm; ++b1)
      for (std::uint64_t g1 = 0; g1 < mm; ++g1)
        for (std::uint64_t a2 = 0; a2 < mm; ++a2)
          for (std::uint64_t b2 = 0; b2 < mm; ++b2)
            for (std::uint64_t g2 = 0; g2 < mm; ++g2) {
              HWElement x{mm, a1, b1, g1}, y{mm, a2, b2, g2};
              ++rep.pairs;
              HWElement lhs = hw_embed(hw_mul(x, y), n);
              HWElement rhs = hw_mul(hw_embed(x, n), hw_embed(y, n));
              bool plain = lhs == rhs;
              bool coset = lhs.alpha == rhs.alpha && lhs.gamma == rhs.gamma &&
                           lhs.beta % mm == rhs.beta % mm;
              if (!plain) {
                ++rep.plain_failures;
                if (!rep.first_plain_failure) rep.first_plain_failure = {x, y};
              }
              if (!coset) ++rep.coset_failures;
            }
  return rep;
}

SpElement sp_element(Dim n, std::int64_t kappa, std::int64_t lambda,
                     std::int64_t mu, std::int64_t nu) {
  std::uint64_t nn = n.value();
  SpElement s{nn, reduce_mod(kappa, nn), reduce_mod(lambda, nn),
              reduce_mod(mu, nn), reduce_mod(nu, nn)};
  std::uint64_t det =
      (s.kappa * s.nu % nn + nn - s.lambda * s.mu % nn) % nn;
  if (det != 1 % nn) {
    throw std::invalid_argument("sp_element: determinant != 1 mod n");
  }
  return s;
}

SpElement sp_mul(const SpElement& a, const SpElement& b) {
  if (a.n != b.n) throw std::invalid_argument("sp_mul: mixed moduli");
  std::uint64_t n = a.n;
  return SpElement{n,
                   (a.kappa * b.kappa + a.lambda * b.mu) % n,
                   (a.kappa * b.lambda + a.lambda * b.nu) % n,
                   (a.mu * b.kappa + a.nu * b.mu) % n,
                   (a.mu * b.lambda + a.nu * b.nu) % n};
}

std::vector<SpElement> sp_enumerate(Dim n) {
  std::uint64_t nn = n.value();
  std::vector<SpElement> out;
  for (std::uint64_t k = 0; k < nn; ++k)
    for (std::uint64_t l = 0; l < nn; ++l)
      for (std::uint64_t mu = 0; mu < nn; ++mu)
        for (std::uint64_t v = 0; v < nn; ++v) {
          if ((k * v % nn + nn - l * mu % nn) % nn == 1 % nn) {
            out.push_back(SpElement{nn, k, l, mu, v});
          }
        }
  return out;
}

SpEmbedCandidate sp_embed(const SpElement& a, Dim n) {
  if (n.value() % a.n != 0) {
    throw std::invalid_argument("sp_embed: source modulus must divide target");
  }
  std::uint64_t nn = n.value();
  std::uint64_t d = nn / a.n;
  SpEmbedCandidate c{nn,
                     (d * a.kappa) % nn,
                     a.lambda,
                     (d * a.mu) % nn,
                     a.nu,
                     0,
                     false};
  c.det = (c.kappa * c.nu % nn + nn - c.lambda * c.mu % nn) % nn;
  c.det_ok = (c.det == 1 % nn);
  return c;
}

SpEmbedReport verify_sp_embed(Dim m, Dim n) {
  if (n.value() % m.value() != 0) {
    throw std::invalid_argument("verify_sp_embed: m must divide n");
  }
  SpEmbedReport rep;
  rep.m = m.value();
  rep.n = n.value();
  rep.d = n.value() / m.value();
  rep.expected_order = numtheory::sp2_order(m);

  auto group = sp_enumerate(m);
  rep.group_order = group.size();

  std::uint64_t nn = n.value();
  for (const auto& g : group) {
    auto img = sp_embed(g, n);
    if (img.det_ok) {
      ++rep.det_ok_count;
    } else {
      ++rep.det_fail_count;
    }
    if (g.kappa == 1 && g.lambda == 0 && g.mu == 0 && g.nu == 1) {
      rep.identity_image_det = img.det;
    }
  }

  // Does the candidate map commute with multiplication mod n?
  for (const auto& a : group) {
    for (const auto& b : group) {
      ++rep.mult_pairs;
      auto img_ab = sp_embed(sp_mul(a, b), n);
      auto ia = sp_embed(a, n);
      auto ib = sp_embed(b, n);
      std::uint64_t k = (ia.kappa * ib.kappa + ia.lambda * ib.mu) % nn;
      std::uint64_t l = (ia.kappa * ib.lambda + ia.lambda * ib.nu) % nn;
      std::uint64_t mu = (ia.mu * ib.kappa + ia.nu * ib.mu) % nn;
      std::uint64_t v = (ia.mu * ib.lambda + ia.nu * ib.nu) % nn;
      bool same = img_ab.kappa == k && img_ab.lambda == l && img_ab.mu == mu &&
                  img_ab.nu == v;
      if (!same) {
        ++rep.mult_failures;
        if (!rep.first_mult_failure) rep.first_mult_failure = {a, b};
      }
    }
  }
  return rep;
}

}  // namespace finq::qsystem
