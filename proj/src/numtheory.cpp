#include "finq/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace finq::numtheory {

Dim::Dim(std::uint64_t n) : n_(n) {
  if (n < 2 || n > kMax) {
    throw std::invalid_argument("Dim: dimension " + std::to_string(n) +
                                " outside supported range [2, " +
                                std::to_string(kMax) + "]");
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer addition overflow");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer multiplication overflow");
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors_in_x(Dim n) {
  auto all = divisors(n.value());
  std::vector<std::uint64_t> out;
  for (auto d : all) {
    if (d >= 2) out.push_back(d);
  }
  return out;
}

std::uint64_t sigma_k(Dim n, unsigned k) {
  std::uint64_t sum = 0;
  for (auto d : divisors(n.value())) sum = checked_add(sum, checked_pow(d, k));
  return sum;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize(n)) {
    phi = checked_mul(phi, checked_pow(p, e - 1) * (p - 1));
  }
  return phi;
}

std::uint64_t jordan_totient(unsigned k, Dim n) {
  if (k == 0) throw std::invalid_argument("jordan_totient: k must be >= 1");
  std::uint64_t j = 1;
  for (auto [p, e] : factorize(n.value())) {
    std::uint64_t pk = checked_pow(p, k);
    std::uint64_t factor = checked_mul(checked_pow(pk, e - 1), pk - 1);
    j = checked_mul(j, factor);
  }
  return j;
}

std::uint64_t dedekind_psi(Dim n) {
  std::uint64_t j2 = jordan_totient(2, n);
  std::uint64_t phi = euler_phi(n.value());
  if (j2 % phi != 0) {
    throw std::logic_error("dedekind_psi: J_2(n)/phi(n) not exact");
  }
  return j2 / phi;
}

std::uint64_t sp2_order(Dim n) {
  return checked_mul(n.value(), jordan_totient(2, n));
}

TauPerm::TauPerm(Dim n, Dim m) : n_(n.value()), m_(m.value()), d_(n_ / m_) {
  if (n_ % m_ != 0) {
    throw std::invalid_argument("tau_perm: m = " + std::to_string(m_) +
                                " does not divide n = " + std::to_string(n_));
  }
  table_.resize(n_);
  for (std::uint64_t r = 0; r < m_; ++r) table_[r] = r * d_;
  if (d_ > 1) {
    for (std::uint64_t r = m_; r < n_; ++r) {
      std::uint64_t j = r - m_;
      table_[r] = j + j / (d_ - 1) + 1;
    }
  }
}

std::complex<double> root_of_unity(std::uint64_t n, std::int64_t a) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  std::int64_t nn = static_cast<std::int64_t>(n);
  std::int64_t r = a % nn;
  if (r < 0) r += nn;
  double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                 static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  // Extended Euclid on (a mod n, n).
  std::int64_t r0 = static_cast<std::int64_t>(n);
  std::int64_t r1 = static_cast<std::int64_t>(a % n);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                " is not invertible mod " + std::to_string(n));
  }
  std::int64_t inv = t0 % static_cast<std::int64_t>(n);
  if (inv < 0) inv += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(inv);
}

}  // namespace finq::numtheory
