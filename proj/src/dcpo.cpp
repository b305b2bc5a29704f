#include "finq/dcpo.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "finq/numtheory.hpp"

namespace finq::dcpo {

std::optional<Supernatural> Supernatural::make(
    std::map<std::uint64_t, std::uint64_t> finite_part,
    std::set<std::uint64_t> infinite_part) {
  for (auto it = finite_part.begin(); it != finite_part.end();) {
    if (!numtheory::is_prime(it->first)) {
      throw std::invalid_argument("Supernatural: " + std::to_string(it->first) +
                                  " is not prime");
    }
    if (infinite_part.contains(it->first)) {
      throw std::invalid_argument("Supernatural: prime listed twice");
    }
    it = (it->second == 0) ? finite_part.erase(it) : std::next(it);
  }
  for (auto p : infinite_part) {
    if (!numtheory::is_prime(p)) {
      throw std::invalid_argument("Supernatural: " + std::to_string(p) +
                                  " is not prime");
    }
  }
  if (finite_part.empty() && infinite_part.empty()) {
    return std::nullopt;  // the excluded element 1
  }
  Supernatural s;
  s.finite_ = std::move(finite_part);
  s.infinite_ = std::move(infinite_part);
  return s;
}

Supernatural Supernatural::from_integer(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("Supernatural: integer must be >= 2");
  std::map<std::uint64_t, std::uint64_t> finite;
  for (auto [p, e] : numtheory::factorize(n)) finite[p] = e;
  Supernatural s;
  s.finite_ = std::move(finite);
  return s;
}

Supernatural Supernatural::tau() {
  Supernatural s;
  s.all_infinite_ = true;
  return s;
}

Supernatural Supernatural::tau_of(std::set<std::uint64_t> primes) {
  if (primes.empty()) {
    throw std::invalid_argument("tau_of: need at least one prime");
  }
  auto s = make({}, std::move(primes));
  return *s;
}

std::optional<std::uint64_t> Supernatural::to_integer() const {
  if (!is_natural()) return std::nullopt;
  std::uint64_t n = 1;
  for (auto [p, e] : finite_) {
    n = numtheory::checked_mul(
        n, numtheory::checked_pow(p, static_cast<unsigned>(e)));
  }
  return n;
}

Supernatural::Exponent Supernatural::exponent_of(std::uint64_t p) const {
  if (all_infinite_ || infinite_.contains(p)) return {true, 0};
  auto it = finite_.find(p);
  return {false, it == finite_.end() ? 0 : it->second};
}

namespace {

// Primes appearing in either operand with nonzero exponent.
std::set<std::uint64_t> support_union(const Supernatural& a,
                                      const Supernatural& b) {
  std::set<std::uint64_t> ps;
  for (auto [p, e] : a.finite_part()) ps.insert(p);
  for (auto p : a.infinite_part()) ps.insert(p);
  for (auto [p, e] : b.finite_part()) ps.insert(p);
  for (auto p : b.infinite_part()) ps.insert(p);
  return ps;
}

}  // namespace

bool divides(const Supernatural& a, const Supernatural& b) {
  if (b.is_tau()) return true;
  if (a.is_tau()) return b.is_tau();
  for (auto p : support_union(a, b)) {
    auto ea = a.exponent_of(p);
    auto eb = b.exponent_of(p);
    if (ea.infinite && !eb.infinite) return false;
    if (!ea.infinite && !eb.infinite && ea.value > eb.value) return false;
  }
  return true;
}

Supernatural sup(std::span<const Supernatural> values) {
  if (values.empty()) throw std::invalid_argument("sup: empty family");
  std::map<std::uint64_t, std::uint64_t> finite;
  std::set<std::uint64_t> infinite;
  for (const auto& v : values) {
    if (v.is_tau()) return Supernatural::tau();
    for (auto [p, e] : v.finite_part()) {
      auto it = finite.find(p);
      if (it == finite.end() || it->second < e) finite[p] = e;
    }
    for (auto p : v.infinite_part()) infinite.insert(p);
  }
  for (auto p : infinite) finite.erase(p);
  auto s = Supernatural::make(std::move(finite), std::move(infinite));
  return *s;  // family is non-empty and elements are != 1
}

std::optional<Supernatural> inf(std::span<const Supernatural> values) {
  if (values.empty()) throw std::invalid_argument("inf: empty family");
  // Start from the first element and lower exponents pointwise.
  std::map<std::uint64_t, Supernatural::Exponent> acc;
  bool first_all_inf = values.front().is_tau();
  for (auto [p, e] : values.front().finite_part()) acc[p] = {false, e};
  for (auto p : values.front().infinite_part()) acc[p] = {true, 0};

  for (const auto& v : values.subspan(1)) {
    if (first_all_inf) {
      // tau ^ v = v
      acc.clear();
      for (auto [p, e] : v.finite_part()) acc[p] = {false, e};
      for (auto p : v.infinite_part()) acc[p] = {true, 0};
      first_all_inf = v.is_tau();
      continue;
    }
    for (auto it = acc.begin(); it != acc.end();) {
      auto ev = v.exponent_of(it->first);
      if (ev.infinite) {
        ++it;
        continue;
      }
      if (ev.value == 0) {
        it = acc.erase(it);
        continue;
      }
      if (it->second.infinite || it->second.value > ev.value) {
        it->second = {false, ev.value};
      }
      ++it;
    }
  }
  if (first_all_inf) return Supernatural::tau();
  std::map<std::uint64_t, std::uint64_t> finite;
  std::set<std::uint64_t> infinite;
  for (auto [p, e] : acc) {
    if (e.infinite) {
      infinite.insert(p);
    } else {
      finite[p] = e.value;
    }
  }
  return Supernatural::make(std::move(finite), std::move(infinite));
}

Supernatural chain_sup(const GeometricChain& chain) {
  if (chain.base.is_tau() || !chain.base.infinite_part().empty()) {
    throw std::invalid_argument("chain_sup: base must have finite exponents");
  }
  std::set<std::uint64_t> primes;
  for (auto [p, e] : chain.base.finite_part()) primes.insert(p);
  return Supernatural::tau_of(std::move(primes));
}

Supernatural directed_family_sup(std::span<const Supernatural> family) {
  return sup(family);
}

std::string to_string(const Supernatural& s) {
  if (s.is_tau()) return "τ";
  if (s.finite_part().empty()) {
    // pure tau(pi) form
    std::string out = "τ({";
    bool first = true;
    for (auto p : s.infinite_part()) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    return out + "})";
  }
  // Merge finite and infinite exponents in prime order.
  std::vector<std::pair<std::uint64_t, Supernatural::Exponent>> parts;
  for (auto [p, e] : s.finite_part()) parts.push_back({p, {false, e}});
  for (auto p : s.infinite_part()) parts.push_back({p, {true, 0}});
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "·";
    out += std::to_string(parts[i].first);
    if (parts[i].second.infinite) {
      out += "^∞";
    } else if (parts[i].second.value != 1) {
      out += "^" + std::to_string(parts[i].second.value);
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("Supernatural parse: number expected at " +
                                  std::to_string(pos));
    }
    std::uint64_t n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return n;
  }

  // "inf" or the UTF-8 infinity sign
  bool eat_inf() {
    return eat_word("inf") || eat_word("∞");
  }

  // "*" or the UTF-8 middle dot
  bool eat_sep() {
    return eat('*') || eat_word("·");
  }

  void expect_end() {
    skip_ws();
    if (pos != text.size()) {
      throw std::invalid_argument("Supernatural parse: trailing input");
    }
  }
};

}  // namespace

Supernatural parse(std::string_view text) {
  Parser p{text};
  if (p.eat_word("tau") || p.eat_word("τ")) {
    p.skip_ws();
    if (p.pos == text.size()) return Supernatural::tau();
    if (!p.eat('(') || !p.eat('{')) {
      throw std::invalid_argument("Supernatural parse: expected tau({p,...})");
    }
    std::set<std::uint64_t> primes;
    primes.insert(p.number());
    while (p.eat(',')) primes.insert(p.number());
    if (!p.eat('}') || !p.eat(')')) {
      throw std::invalid_argument("Supernatural parse: expected closing })");
    }
    p.expect_end();
    return Supernatural::tau_of(std::move(primes));
  }

  std::map<std::uint64_t, std::uint64_t> finite;
  std::set<std::uint64_t> infinite;
  bool factored = false;
  std::uint64_t first = p.number();
  p.skip_ws();
  if (p.pos == text.size()) {
    return Supernatural::from_integer(first);  // plain integer literal
  }
  std::uint64_t base = first;
  for (;;) {
    factored = true;
    if (p.eat('^')) {
      if (p.eat_inf()) {
        infinite.insert(base);
      } else {
        finite[base] += p.number();
      }
    } else {
      finite[base] += 1;
    }
    if (!p.eat_sep()) break;
    base = p.number();
  }
  p.expect_end();
  if (!factored) {
    throw std::invalid_argument("Supernatural parse: empty expression");
  }
  auto s = Supernatural::make(std::move(finite), std::move(infinite));
  if (!s) {
    throw std::invalid_argument("Supernatural parse: 1 is not representable");
  }
  return *s;
}

}  // namespace finq::dcpo
