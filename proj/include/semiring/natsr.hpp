#pragma once

// Finitely generated ideals of the semiring of nonnegative integers.
// Membership is decidable by dynamic programming; the subtractive-closure
// probe searches for a witness below a conductor-derived bound. This is
// where the sum of two k-ideals failing to be k-closed becomes a concrete,
// machine-checkable fact: (2)+(3) contains 6 and 7 but not 1, and 1+6 = 7.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

/// A finitely generated ideal of the nonnegative integers, identified by
/// its minimal generator set (0 is implicitly a member). The semantics are
/// all nonnegative integer combinations of the generators.
class NatIdeal {
 public:
  // Inputs are normalized: sorted, deduplicated, and reduced so no
  // generator is a combination of the others.
  explicit NatIdeal(std::vector<long long> generators) {
    if (generators.empty()) throw PreconditionError("an ideal needs at least one generator");
    for (long long g : generators) {
      if (g <= 0) throw PreconditionError("generators must be positive");
      if (g > max_value) throw RangeError("generator exceeds the supported range");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (long long g : generators) {
      if (generators_.empty() || !combination_of(generators_, g)) generators_.push_back(g);
    }
    gcd_ = 0;
    for (long long g : generators_) gcd_ = std::gcd(gcd_, g);
  }

  static constexpr long long max_value = 1'000'000;

  const std::vector<long long>& generators() const { return generators_; }
  long long gcd() const { return gcd_; }

  bool operator==(const NatIdeal&) const = default;

 private:
  static bool combination_of(const std::vector<long long>& gens, long long x) {
    std::vector<char> member(static_cast<std::size_t>(x) + 1, 0);
    member[0] = 1;
    for (long long t = 1; t <= x; ++t) {
      for (long long g : gens) {
        if (g <= t && member[static_cast<std::size_t>(t - g)]) {
          member[static_cast<std::size_t>(t)] = 1;
          break;
        }
      }
    }
    return member[static_cast<std::size_t>(x)] != 0;
  }

  std::vector<long long> generators_;
  long long gcd_ = 0;
};

namespace detail {

// Membership table for 0..bound.
inline std::vector<char> nat_member_table(const NatIdeal& ideal, long long bound) {
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (long long t = 1; t <= bound; ++t) {
    for (long long g : ideal.generators()) {
      if (g <= t && member[static_cast<std::size_t>(t - g)]) {
        member[static_cast<std::size_t>(t)] = 1;
        break;
      }
    }
  }
  return member;
}

// Smallest c such that every multiple of gcd at or above c*gcd is a member,
// scaled back by gcd: conductor of the gcd-reduced generator set, found by
// DP below the largest-gap bound min*max.
inline long long conductor_bound(const NatIdeal& ideal) {
  const auto& gens = ideal.generators();
  const long long g = ideal.gcd();
  std::vector<long long> reduced;
  reduced.reserve(gens.size());
  for (long long v : gens) reduced.push_back(v / g);
  long long lo = reduced.front();
  long long hi = reduced.back();
  if (lo == 1) return 0;
  long long gap_bound = lo * hi;  // beyond this every integer is in the reduced ideal
  if (gap_bound > NatIdeal::max_value) {
    throw RangeError("conductor bound exceeds the supported range");
  }
  std::vector<char> member(static_cast<std::size_t>(gap_bound) + 1, 0);
  member[0] = 1;
  long long conductor = 0;
  for (long long t = 1; t <= gap_bound; ++t) {
    for (long long v : reduced) {
      if (v <= t && member[static_cast<std::size_t>(t - v)]) {
        member[static_cast<std::size_t>(t)] = 1;
        break;
      }
    }
    if (!member[static_cast<std::size_t>(t)]) conductor = t + 1;
  }
  if (conductor * g > NatIdeal::max_value) {
    throw RangeError("conductor bound exceeds the supported range");
  }
  return conductor * g;
}

inline void check_range(long long x) {
  if (x < 0) throw PreconditionError("value must be nonnegative");
  if (x > NatIdeal::max_value) throw RangeError("value exceeds the supported range");
}

}  // namespace detail

/// Membership: is x a nonnegative combination of the generators?
inline bool nat_contains(const NatIdeal& ideal, long long x) {
  detail::check_range(x);
  if (x == 0) return true;
  return detail::nat_member_table(ideal, x)[static_cast<std::size_t>(x)] != 0;
}

/// Sum of two ideals. Since 0 belongs to both, the sum is generated by the
/// union of the generator sets (re-normalized).
inline NatIdeal nat_sum(const NatIdeal& lhs, const NatIdeal& rhs) {
  std::vector<long long> gens = lhs.generators();
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  return NatIdeal(std::move(gens));
}

/// Smallest witness a in I with x+a in I, searched up to x + C(I) where
/// C(I) is the conductor-derived bound: if any witness exists, one exists
/// below that bound.
inline std::optional<long long> nat_k_closure_witness(const NatIdeal& ideal, long long x) {
  detail::check_range(x);
  long long conductor = detail::conductor_bound(ideal);
  long long bound = x + conductor;
  std::vector<char> member = detail::nat_member_table(ideal, bound);
  for (long long a = 0; a + x <= bound; ++a) {
    if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(x + a)]) return a;
  }
  return std::nullopt;
}

/// Is x in the subtractive closure of I, i.e. does some a in I give
/// x + a in I?
inline bool nat_in_k_closure(const NatIdeal& ideal, long long x) {
  return nat_k_closure_witness(ideal, x).has_value();
}

/// Smallest x <= bound that lies in the closure but not in the ideal, or
/// nothing when the ideal is k-closed up to the bound.
inline std::optional<long long> nat_is_k_closed_upto(const NatIdeal& ideal, long long bound) {
  detail::check_range(bound);
  long long conductor = detail::conductor_bound(ideal);
  std::vector<char> member = detail::nat_member_table(ideal, bound + conductor);
  for (long long x = 0; x <= bound; ++x) {
    if (member[static_cast<std::size_t>(x)]) continue;
    for (long long a = 0; a <= conductor; ++a) {
      if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(x + a)]) {
        return x;
      }
    }
  }
  return std::nullopt;
}

}  // namespace semiring
