#include "finq/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace finq::topology {

namespace {

// Sort, dedupe, and drop any generator dividing another one.
std::vector<std::uint64_t> reduce_antichain(std::vector<std::uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[j] % gens[i] == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

OpenSet OpenSet::union_of_basics(std::vector<std::uint64_t> generators) {
  for (auto g : generators) {
    if (g < 2) throw std::invalid_argument("OpenSet: generator must be >= 2");
  }
  if (generators.empty()) return empty();
  return OpenSet(SetKind::UnionOfBasics, reduce_antichain(std::move(generators)));
}

bool OpenSet::contains(std::uint64_t m) const {
  if (m < 2) return false;
  switch (kind_) {
    case SetKind::Empty:
      return false;
    case SetKind::Whole:
      return true;
    case SetKind::UnionOfBasics:
      return std::any_of(gens_.begin(), gens_.end(),
                         [m](std::uint64_t g) { return g % m == 0; });
  }
  return false;
}

OpenSet OpenSet::united(const OpenSet& other) const {
  if (kind_ == SetKind::Whole || other.kind_ == SetKind::Whole) return whole();
  if (kind_ == SetKind::Empty) return other;
  if (other.kind_ == SetKind::Empty) return *this;
  std::vector<std::uint64_t> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return union_of_basics(std::move(gens));
}

OpenSet OpenSet::intersected(const OpenSet& other) const {
  if (kind_ == SetKind::Empty || other.kind_ == SetKind::Empty) return empty();
  if (kind_ == SetKind::Whole) return other;
  if (other.kind_ == SetKind::Whole) return *this;
  // U(a) cap U(b) = U(gcd(a,b)), dropping gcd 1 (empty piece).
  std::vector<std::uint64_t> gens;
  for (auto a : gens_) {
    for (auto b : other.gens_) {
      std::uint64_t g = std::gcd(a, b);
      if (g >= 2) gens.push_back(g);
    }
  }
  if (gens.empty()) return empty();
  return union_of_basics(std::move(gens));
}

std::vector<std::uint64_t> OpenSet::members_upto(std::uint64_t limit) const {
  if (kind_ == SetKind::Whole) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 2; m <= limit; ++m) out.push_back(m);
    return out;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

OpenSet basic_open(Dim n) { return OpenSet::basic(n); }

OpenSet smallest_neighborhood(Dim n) { return OpenSet::basic(n); }

bool closure_member(std::uint64_t q, Dim n) { return q % n.value() == 0; }

std::vector<std::uint64_t> closure_list(Dim n, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = n.value(); q <= limit; q += n.value()) out.push_back(q);
  return out;
}

OpenSet t0_witness(Dim a, Dim b) {
  if (a.value() == b.value()) {
    throw std::invalid_argument("t0_witness: points must be distinct");
  }
  if (a.value() % b.value() != 0) return OpenSet::basic(a);
  return OpenSet::basic(b);
}

bool t1_fails(Dim a, Dim b) {
  if (a.value() == b.value()) {
    throw std::invalid_argument("t1_fails: points must be distinct");
  }
  return a.value() % b.value() == 0 || b.value() % a.value() == 0;
}

bool primes_dense_check(const OpenSet& s) {
  if (s.kind() == SetKind::Empty) return true;
  if (s.kind() == SetKind::Whole) return true;  // contains 2
  for (auto g : s.generators()) {
    bool has_prime = false;
    for (auto d : numtheory::divisors_in_x(Dim(g))) {
      if (numtheory::is_prime(d)) {
        has_prime = true;
        break;
      }
    }
    if (!has_prime) return false;  // unreachable: every n >= 2 has a prime divisor
  }
  return true;
}

ContinuityReport check_monotone_continuity(
    const std::function<std::uint64_t(std::uint64_t)>& f, std::uint64_t lo,
    std::uint64_t hi) {
  ContinuityReport rep;
  for (std::uint64_t m = lo; m <= hi; ++m) {
    for (std::uint64_t n = m; n <= hi; n += m) {
      std::uint64_t fm = f(m), fn = f(n);
      if (fm == 0 || fn % fm != 0) {
        rep.pass = false;
        rep.bad_m = m;
        rep.bad_n = n;
        rep.f_bad_m = fm;
        rep.f_bad_n = fn;
        return rep;
      }
    }
  }
  return rep;
}

std::vector<DimPair> OpenSet2::reduce(std::vector<DimPair> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto divides = [](DimPair a, DimPair b) {
    return b.first % a.first == 0 && b.second % a.second == 0;
  };
  std::vector<DimPair> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && divides(gens[i], gens[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

bool OpenSet2::contains(DimPair m) const {
  if (m.first < 2 || m.second < 2) return false;
  switch (kind_) {
    case SetKind::Empty:
      return false;
    case SetKind::Whole:
      return true;
    case SetKind::UnionOfBasics:
      return std::any_of(gens_.begin(), gens_.end(), [m](DimPair g) {
        return g.first % m.first == 0 && g.second % m.second == 0;
      });
  }
  return false;
}

OpenSet2 OpenSet2::united(const OpenSet2& other) const {
  if (kind_ == SetKind::Whole || other.kind_ == SetKind::Whole) return whole();
  if (kind_ == SetKind::Empty) return other;
  if (other.kind_ == SetKind::Empty) return *this;
  std::vector<DimPair> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return OpenSet2(SetKind::UnionOfBasics, reduce(std::move(gens)));
}

OpenSet2 OpenSet2::intersected(const OpenSet2& other) const {
  if (kind_ == SetKind::Empty || other.kind_ == SetKind::Empty) return empty();
  if (kind_ == SetKind::Whole) return other;
  if (other.kind_ == SetKind::Whole) return *this;
  std::vector<DimPair> gens;
  for (auto a : gens_) {
    for (auto b : other.gens_) {
      std::uint64_t g1 = std::gcd(a.first, b.first);
      std::uint64_t g2 = std::gcd(a.second, b.second);
      if (g1 >= 2 && g2 >= 2) gens.emplace_back(g1, g2);
    }
  }
  if (gens.empty()) return empty();
  return OpenSet2(SetKind::UnionOfBasics, reduce(std::move(gens)));
}

OpenSet2 basic_open2(Dim n1, Dim n2) { return OpenSet2::basic(n1, n2); }

bool closure2_member(DimPair q, DimPair n) {
  return q.first % n.first == 0 && q.second % n.second == 0;
}

}  // namespace finq::topology
