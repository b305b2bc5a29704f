#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

// Supernatural (Steinitz) numbers: formal products prod p^{e_p} with
// exponents in Z+ u {inf}. Divisibility is exponentwise comparison, which
// makes the set a dcpo: the top element tau (every exponent infinite)
// bounds everything, so every directed family has a supremum. The number 1
// (all exponents zero) is excluded.
//
// Only finite presentations are representable: a finite map of finite
// exponents, a set of primes with infinite exponent (possibly "all
// primes"), and geometric chains b, b^2, b^3, ... given by their base.
//
// Text form: "2^3·5^∞", "12", "τ", "τ({2,3})". The parser also accepts the
// ASCII aliases "*", "inf" and "tau".

namespace finq::dcpo {

class Supernatural {
 public:
  // Exponents: finite values in finite_part; primes in infinite_part carry
  // exponent inf. all_infinite marks tau (inf at every prime).
  static std::optional<Supernatural> make(
      std::map<std::uint64_t, std::uint64_t> finite_part,
      std::set<std::uint64_t> infinite_part);

  static Supernatural from_integer(std::uint64_t n);  // n >= 2
  static Supernatural tau();
  static Supernatural tau_of(std::set<std::uint64_t> primes);  // non-empty

  bool is_tau() const noexcept { return all_infinite_; }
  bool is_natural() const noexcept {
    return !all_infinite_ && infinite_.empty();
  }

  // Value as a natural number, when all exponents are finite.
  std::optional<std::uint64_t> to_integer() const;

  struct Exponent {
    bool infinite = false;
    std::uint64_t value = 0;  // meaningful when !infinite
  };
  Exponent exponent_of(std::uint64_t p) const;

  const std::map<std::uint64_t, std::uint64_t>& finite_part() const noexcept {
    return finite_;
  }
  const std::set<std::uint64_t>& infinite_part() const noexcept {
    return infinite_;
  }

  bool operator==(const Supernatural&) const = default;

 private:
  Supernatural() = default;

  std::map<std::uint64_t, std::uint64_t> finite_;  // prime -> exponent >= 1
  std::set<std::uint64_t> infinite_;               // primes with exponent inf
  bool all_infinite_ = false;
};

// a | b: e_p(a) <= e_p(b) for every prime, with inf as top.
bool divides(const Supernatural& a, const Supernatural& b);

// Exponentwise max; the LCM on naturals.
Supernatural sup(std::span<const Supernatural> values);

// Exponentwise min; the GCD on naturals. Empty when the result would be 1.
std::optional<Supernatural> inf(std::span<const Supernatural> values);

// The chain {b, b^2, b^3, ...}; its supremum has exponent inf at every
// prime in the support of the base.
struct GeometricChain {
  Supernatural base;  // must have finite exponents
};

Supernatural chain_sup(const GeometricChain& chain);

// Supremum of a finite directed family; always exists (tau is an upper
// bound of everything). Equal to sup().
Supernatural directed_family_sup(std::span<const Supernatural> family);

std::string to_string(const Supernatural& s);
Supernatural parse(std::string_view text);  // throws std::invalid_argument

}  // namespace finq::dcpo
