#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "finq/numtheory.hpp"

// The divisor topology on X = {2,3,...} and on X x X. Open sets are kept
// intensionally as finite antichains of generators: the set they describe is
// the union of the basic opens U(g) = {m | m divides g}. Closed sets are
// never materialized; closure queries go through membership and bounded
// listing only, since X is infinite.

namespace finq::topology {

using numtheory::Dim;

enum class SetKind { Empty, Whole, UnionOfBasics };

class OpenSet {
 public:
  static OpenSet empty() { return OpenSet(SetKind::Empty, {}); }
  static OpenSet whole() { return OpenSet(SetKind::Whole, {}); }
  static OpenSet basic(Dim n) { return OpenSet(SetKind::UnionOfBasics, {n.value()}); }
  static OpenSet union_of_basics(std::vector<std::uint64_t> generators);

  SetKind kind() const noexcept { return kind_; }

  // Generators as a sorted antichain (g dropped when g | g' for another g').
  const std::vector<std::uint64_t>& generators() const noexcept { return gens_; }

  bool contains(std::uint64_t m) const;

  OpenSet united(const OpenSet& other) const;
  OpenSet intersected(const OpenSet& other) const;

  // Members in [2, limit], ascending. Throws for Whole (not finitely listable).
  std::vector<std::uint64_t> members_upto(std::uint64_t limit) const;

  // Canonical-form equality: same kind and same reduced antichain.
  bool operator==(const OpenSet& other) const = default;

 private:
  OpenSet(SetKind k, std::vector<std::uint64_t> gens)
      : kind_(k), gens_(std::move(gens)) {}

  SetKind kind_;
  std::vector<std::uint64_t> gens_;
};

OpenSet basic_open(Dim n);

// Alexandrov property: every point has a smallest neighbourhood, U(n).
OpenSet smallest_neighborhood(Dim n);

// q lies in closure{n} iff n | q (the closure is the set of multiples of n).
bool closure_member(std::uint64_t q, Dim n);

// Multiples of n in [2, limit], ascending.
std::vector<std::uint64_t> closure_list(Dim n, std::uint64_t limit);

// An open set containing exactly one of {a, b}: U(a) if b does not divide a,
// otherwise U(b). Requires a != b.
OpenSet t0_witness(Dim a, Dim b);

// True iff no pair of opens separates a and b in both directions, which
// happens exactly when one divides the other (the smallest neighbourhood of
// the larger contains the smaller). Requires a != b.
bool t1_fails(Dim a, Dim b);

// The primes are dense: every nonempty open set contains a prime. Returns
// true for Empty by convention; asserts the prime exists otherwise.
bool primes_dense_check(const OpenSet& s);

struct ContinuityReport {
  bool pass = true;
  std::uint64_t bad_m = 0, bad_n = 0;      // first divisor pair violating f(m) | f(n)
  std::uint64_t f_bad_m = 0, f_bad_n = 0;
};

// A monotone map f (m|n implies f(m)|f(n)) between divisor topologies is
// continuous; this checks monotonicity of f over all divisor pairs in
// [lo, hi] and therefore certifies continuity on that window.
ContinuityReport check_monotone_continuity(
    const std::function<std::uint64_t(std::uint64_t)>& f, std::uint64_t lo,
    std::uint64_t hi);

// --- product (Tychonoff) divisor topology on X x X -------------------------

using DimPair = std::pair<std::uint64_t, std::uint64_t>;

class OpenSet2 {
 public:
  static OpenSet2 empty() { return OpenSet2(SetKind::Empty, {}); }
  static OpenSet2 whole() { return OpenSet2(SetKind::Whole, {}); }
  static OpenSet2 basic(Dim n1, Dim n2) {
    return OpenSet2(SetKind::UnionOfBasics, {{n1.value(), n2.value()}});
  }

  SetKind kind() const noexcept { return kind_; }
  const std::vector<DimPair>& generators() const noexcept { return gens_; }

  bool contains(DimPair m) const;
  OpenSet2 united(const OpenSet2& other) const;
  OpenSet2 intersected(const OpenSet2& other) const;

  bool operator==(const OpenSet2& other) const = default;

 private:
  OpenSet2(SetKind k, std::vector<DimPair> gens)
      : kind_(k), gens_(std::move(gens)) {}
  static std::vector<DimPair> reduce(std::vector<DimPair> gens);

  SetKind kind_;
  std::vector<DimPair> gens_;
};

OpenSet2 basic_open2(Dim n1, Dim n2);

// (q1,q2) lies in closure{(n1,n2)} iff n1|q1 and n2|q2.
bool closure2_member(DimPair q, DimPair n);

}  // namespace finq::topology
