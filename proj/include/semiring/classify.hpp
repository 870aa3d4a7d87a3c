#pragma once

// Isomorphism testing, canonical forms over the permutation orbit of the
// table pair, exhaustive enumeration of small semirings up to isomorphism,
// the incline-simplicity survey, and the bounded census of k-simple
// semirings. Everything here is desk-scale by design: unconstrained
// enumeration stops at order 3, order 4 needs additive idempotence.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "semiring/congruence.hpp"
#include "semiring/core.hpp"
#include "semiring/ideals.hpp"

namespace semiring {

/// The two 2-element inclines: max addition with constant-zero
/// multiplication (r0) and with boolean multiplication (r1).
inline FiniteSemiring r0() {
  return FiniteSemiring("r0", {"0", "1"}, OpTable(2, {0, 1, 1, 1}), OpTable(2, {0, 0, 0, 0}));
}

inline FiniteSemiring r1() {
  return FiniteSemiring("r1", {"0", "1"}, OpTable(2, {0, 1, 1, 1}), OpTable(2, {0, 0, 0, 1}));
}

namespace detail {

// Permutation-invariant per-element profile used to prune the isomorphism
// search: a permutation can only map an element onto one with an equal
// profile.
inline std::vector<std::array<int, 6>> element_profiles(const FiniteSemiring& R) {
  const int k = R.size();
  std::vector<std::array<int, 6>> profiles(k, {0, 0, 0, 0, 0, 0});
  for (element_type x = 0; x < k; ++x) {
    profiles[x][0] = R.add(x, x) == x ? 1 : 0;
    profiles[x][1] = R.mul(x, x) == x ? 1 : 0;
    for (element_type i = 0; i < k; ++i) {
      for (element_type j = 0; j < k; ++j) {
        if (R.add(i, j) == x) ++profiles[x][2];
        if (R.mul(i, j) == x) ++profiles[x][3];
      }
      if (R.add(x, i) == x) ++profiles[x][4];
      if (R.mul(x, i) == x) ++profiles[x][5];
    }
  }
  return profiles;
}

inline bool tables_match_under(const FiniteSemiring& R, const FiniteSemiring& S,
                               const std::vector<element_type>& perm) {
  const int k = R.size();
  for (element_type i = 0; i < k; ++i) {
    for (element_type j = 0; j < k; ++j) {
      if (perm[R.add(i, j)] != S.add(perm[i], perm[j])) return false;
      if (perm[R.mul(i, j)] != S.mul(perm[i], perm[j])) return false;
    }
  }
  return true;
}

inline bool extend_isomorphism(const FiniteSemiring& R, const FiniteSemiring& S,
                               const std::vector<std::array<int, 6>>& prof_r,
                               const std::vector<std::array<int, 6>>& prof_s,
                               std::vector<element_type>& perm, std::vector<char>& used,
                               element_type next) {
  const int k = R.size();
  if (next == k) return tables_match_under(R, S, perm);
  for (element_type image = 0; image < k; ++image) {
    if (used[image] || prof_r[next] != prof_s[image]) continue;
    perm[next] = image;
    used[image] = 1;
    // Check every pair whose operands and result images are already fixed.
    bool consistent = true;
    for (element_type i = 0; i <= next && consistent; ++i) {
      for (element_type j = 0; j <= next && consistent; ++j) {
        element_type sum = R.add(i, j);
        if (sum <= next && S.add(perm[i], perm[j]) != perm[sum]) consistent = false;
        element_type prod = R.mul(i, j);
        if (prod <= next && S.mul(perm[i], perm[j]) != perm[prod]) consistent = false;
      }
    }
    if (consistent && extend_isomorphism(R, S, prof_r, prof_s, perm, used, next + 1)) return true;
    used[image] = 0;
  }
  return false;
}

}  // namespace detail

/// Searches for a bijection preserving both operations; returns the first
/// witness permutation (element i of R maps to witness[i] of S) in
/// lexicographic assignment order, or nothing. Orders above 8 are rejected.
inline std::optional<std::vector<element_type>> are_isomorphic(const FiniteSemiring& R,
                                                               const FiniteSemiring& S) {
  if (R.size() != S.size()) return std::nullopt;
  if (R.size() > 8) throw UnsupportedBoundError("isomorphism search supports order <= 8");
  if (find_zero(R).has_value() != find_zero(S).has_value()) return std::nullopt;
  if (find_identity(R).has_value() != find_identity(S).has_value()) return std::nullopt;
  if (is_additively_idempotent(R) != is_additively_idempotent(S)) return std::nullopt;
  if (is_commutative_mul(R) != is_commutative_mul(S)) return std::nullopt;

  auto prof_r = detail::element_profiles(R);
  auto prof_s = detail::element_profiles(S);
  {
    auto sorted_r = prof_r;
    auto sorted_s = prof_s;
    std::sort(sorted_r.begin(), sorted_r.end());
    std::sort(sorted_s.begin(), sorted_s.end());
    if (sorted_r != sorted_s) return std::nullopt;
  }
  std::vector<element_type> perm(R.size(), -1);
  std::vector<char> used(R.size(), 0);
  if (detail::extend_isomorphism(R, S, prof_r, prof_s, perm, used, 0)) return perm;
  return std::nullopt;
}

/// Byte encoding [k, relabeled add table, relabeled mul table] minimized
/// lexicographically over all carrier permutations. Two semirings have
/// equal keys exactly when they are isomorphic.
using CanonicalKey = std::vector<std::uint8_t>;

inline CanonicalKey canonical_key(const FiniteSemiring& R) {
  const int k = R.size();
  if (k > 8) throw UnsupportedBoundError("canonical form supports order <= 8");
  std::vector<element_type> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;

  std::optional<CanonicalKey> best;
  CanonicalKey candidate(1 + 2 * static_cast<std::size_t>(k) * k);
  std::vector<element_type> inverse(k);
  do {
    for (int i = 0; i < k; ++i) inverse[perm[i]] = i;
    candidate[0] = static_cast<std::uint8_t>(k);
    std::size_t pos = 1;
    for (element_type i = 0; i < k; ++i) {
      for (element_type j = 0; j < k; ++j) {
        candidate[pos++] = static_cast<std::uint8_t>(perm[R.add(inverse[i], inverse[j])]);
      }
    }
    for (element_type i = 0; i < k; ++i) {
      for (element_type j = 0; j < k; ++j) {
        candidate[pos++] = static_cast<std::uint8_t>(perm[R.mul(inverse[i], inverse[j])]);
      }
    }
    if (!best || candidate < *best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline std::string key_to_hex(const CanonicalKey& key) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (std::uint8_t byte : key) {
    out += digits[byte >> 4];
    out += digits[byte & 0xf];
  }
  return out;
}

/// Rebuilds the canonical representative a key encodes, with elements
/// named by index.
inline FiniteSemiring semiring_from_key(const CanonicalKey& key, std::string name) {
  if (key.empty()) throw PreconditionError("empty canonical key");
  const int k = key[0];
  if (key.size() != 1 + 2 * static_cast<std::size_t>(k) * k) {
    throw PreconditionError("canonical key length does not match its order byte");
  }
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) names.push_back(std::to_string(i));
  std::vector<element_type> add_entries(key.begin() + 1,
                                        key.begin() + 1 + static_cast<std::size_t>(k) * k);
  std::vector<element_type> mul_entries(key.begin() + 1 + static_cast<std::size_t>(k) * k,
                                        key.end());
  return FiniteSemiring(std::move(name), std::move(names), OpTable(k, std::move(add_entries)),
                        OpTable(k, std::move(mul_entries)));
}

struct ConstraintSet {
  bool additively_idempotent = false;
  bool commutative_mul = false;
  bool incline = false;
  bool with_zero = false;
  bool ring = false;

  bool operator==(const ConstraintSet&) const = default;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (additively_idempotent) out.push_back("additively-idempotent");
    if (commutative_mul) out.push_back("commutative-mul");
    if (incline) out.push_back("incline");
    if (with_zero) out.push_back("with-zero");
    if (ring) out.push_back("ring");
    return out;
  }
};

namespace detail {

inline bool table_associative(int k, const std::vector<element_type>& t) {
  for (element_type x = 0; x < k; ++x) {
    for (element_type y = 0; y < k; ++y) {
      for (element_type z = 0; z < k; ++z) {
        if (t[static_cast<std::size_t>(t[static_cast<std::size_t>(x) * k + y]) * k + z] !=
            t[static_cast<std::size_t>(x) * k + t[static_cast<std::size_t>(y) * k + z]]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool table_is_abelian_group(int k, const std::vector<element_type>& t) {
  std::optional<element_type> neutral;
  for (element_type e = 0; e < k && !neutral; ++e) {
    bool ok = true;
    for (element_type x = 0; x < k && ok; ++x) ok = t[static_cast<std::size_t>(e) * k + x] == x;
    if (ok) neutral = e;
  }
  if (!neutral) return false;
  for (element_type x = 0; x < k; ++x) {
    bool has_inverse = false;
    for (element_type y = 0; y < k && !has_inverse; ++y) {
      has_inverse = t[static_cast<std::size_t>(x) * k + y] == *neutral;
    }
    if (!has_inverse) return false;
  }
  return true;
}

// Commutative (optionally idempotent) associative addition tables, by
// filling the upper triangle and filtering for associativity.
inline std::vector<std::vector<element_type>> addition_tables(int k, bool idempotent, bool group) {
  std::vector<std::pair<element_type, element_type>> slots;
  for (element_type i = 0; i < k; ++i) {
    for (element_type j = i; j < k; ++j) {
      if (idempotent && i == j) continue;
      slots.emplace_back(i, j);
    }
  }
  std::vector<std::vector<element_type>> result;
  std::vector<element_type> table(static_cast<std::size_t>(k) * k, 0);
  if (idempotent) {
    for (element_type i = 0; i < k; ++i) table[static_cast<std::size_t>(i) * k + i] = i;
  }
  std::vector<element_type> choice(slots.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      table[static_cast<std::size_t>(i) * k + j] = choice[s];
      table[static_cast<std::size_t>(j) * k + i] = choice[s];
    }
    if (table_associative(k, table) && (!group || table_is_abelian_group(k, table))) {
      result.push_back(table);
    }
    std::size_t s = 0;
    while (s < slots.size() && choice[s] == k - 1) choice[s++] = 0;
    if (s == slots.size()) break;
    ++choice[s];
  }
  return result;
}

struct MulSearch {
  int k;
  const std::vector<element_type>* add;
  const ConstraintSet* constraints;
  std::vector<element_type> mul;
  std::vector<std::pair<element_type, element_type>> order;  // fill order
  std::vector<FiniteSemiring>* sink;

  element_type add_at(element_type i, element_type j) const {
    return (*add)[static_cast<std::size_t>(i) * k + j];
  }
  element_type mul_at(element_type i, element_type j) const {
    return mul[static_cast<std::size_t>(i) * k + j];
  }

  bool partial_ok() const {
    // Associativity and distributivity over every triple whose required
    // entries are all placed; unset entries are -1.
    for (element_type a = 0; a < k; ++a) {
      for (element_type b = 0; b < k; ++b) {
        element_type ab = mul_at(a, b);
        for (element_type c = 0; c < k; ++c) {
          element_type bc = mul_at(b, c);
          if (ab >= 0 && bc >= 0) {
            element_type l = mul_at(ab, c);
            element_type r = mul_at(a, bc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          element_type ac = mul_at(a, c);
          element_type a_bc = mul_at(a, add_at(b, c));
          if (ab >= 0 && ac >= 0 && a_bc >= 0 && add_at(ab, ac) != a_bc) return false;
          element_type ba = mul_at(b, a);
          element_type ca = mul_at(c, a);
          element_type bc_a = mul_at(add_at(b, c), a);
          if (ba >= 0 && ca >= 0 && bc_a >= 0 && add_at(ba, ca) != bc_a) return false;
        }
      }
    }
    return true;
  }

  void fill(std::size_t slot) {
    if (slot == order.size()) {
      finish();
      return;
    }
    auto [i, j] = order[slot];
    if (mul_at(i, j) >= 0) {  // mirrored by an earlier commutative placement
      fill(slot + 1);
      return;
    }
    for (element_type v = 0; v < k; ++v) {
      if (constraints->incline) {
        // x + xy = x and x + yx = x force every product below both factors.
        if (add_at(i, v) != i || add_at(j, v) != j) continue;
      }
      mul[static_cast<std::size_t>(i) * k + j] = v;
      if (constraints->commutative_mul) mul[static_cast<std::size_t>(j) * k + i] = v;
      if (partial_ok()) fill(slot + 1);
      mul[static_cast<std::size_t>(i) * k + j] = -1;
      if (constraints->commutative_mul) mul[static_cast<std::size_t>(j) * k + i] = -1;
    }
  }

  void finish() {
    std::vector<std::string> names;
    names.reserve(k);
    for (int i = 0; i < k; ++i) names.push_back(std::to_string(i));
    FiniteSemiring candidate("candidate", std::move(names), OpTable(k, *add), OpTable(k, mul));
    if (constraints->with_zero && !find_zero(candidate)) return;
    if (constraints->ring && !find_zero(candidate)) return;
    assert(!constraints->incline || is_incline(candidate));
    sink->push_back(std::move(candidate));
  }
};

}  // namespace detail

/// Exhaustive enumeration up to isomorphism. Unconstrained orders 2 and 3
/// scan commutative associative addition tables and backtrack over
/// multiplication tables with associativity/distributivity pruning; order 4
/// requires the additively-idempotent (or incline) constraint so that
/// addition tables are join-semilattices. Output is deterministic: the
/// canonical representative of each isomorphism class, ascending by key.
inline std::vector<FiniteSemiring> enumerate_semirings(int order, const ConstraintSet& constraints) {
  if (order < 1) throw PreconditionError("order must be positive");
  if (order > 4) throw UnsupportedBoundError("enumeration supports order <= 4");
  bool idempotent = constraints.additively_idempotent || constraints.incline;
  if (order == 4 && !idempotent) {
    throw UnsupportedBoundError("order-4 enumeration requires the additively-idempotent constraint");
  }

  std::set<CanonicalKey> seen;
  std::vector<FiniteSemiring> labeled;
  if (order == 1) {
    labeled.emplace_back("candidate", std::vector<std::string>{"0"}, OpTable(1, {0}),
                         OpTable(1, {0}));
  } else {
    for (const auto& add : detail::addition_tables(order, idempotent, constraints.ring)) {
      detail::MulSearch search;
      search.k = order;
      search.add = &add;
      search.constraints = &constraints;
      search.mul.assign(static_cast<std::size_t>(order) * order, -1);
      for (element_type i = 0; i < order; ++i) {
        for (element_type j = constraints.commutative_mul ? i : 0; j < order; ++j) {
          search.order.emplace_back(i, j);
        }
      }
      search.sink = &labeled;
      search.fill(0);
    }
  }

  for (const FiniteSemiring& candidate : labeled) seen.insert(canonical_key(candidate));

  std::vector<FiniteSemiring> out;
  int index = 0;
  for (const CanonicalKey& key : seen) {
    out.push_back(semiring_from_key(
        key, "o" + std::to_string(order) + "n" + std::to_string(index++)));
  }
  return out;
}

inline std::vector<FiniteSemiring> enumerate_inclines(int order) {
  ConstraintSet constraints;
  constraints.incline = true;
  return enumerate_semirings(order, constraints);
}

/// Per-order results of surveying every incline up to isomorphism: the only
/// k-simple inclines are the two 2-element ones; every larger incline has a
/// greatest and a least element and yields a proper nontrivial k-ideal
/// (its witness down-set).
struct InclineSurveyRow {
  int order = 0;
  int incline_count = 0;
  int k_simple_count = 0;
  bool extremes_ok = false;    // every incline has a greatest and a least
  bool witnesses_ok = false;   // order >= 3: witness k-ideal found for each
  bool k_simple_exactly_r0_r1 = false;
};

struct InclineSurveyReport {
  int max_order = 0;
  std::vector<InclineSurveyRow> rows;

  bool ok() const {
    for (const auto& row : rows) {
      if (!(row.extremes_ok && row.witnesses_ok && row.k_simple_exactly_r0_r1)) return false;
    }
    return true;
  }
};

inline InclineSurveyReport incline_simplicity_survey(int max_order) {
  if (max_order > 4) throw UnsupportedBoundError("incline survey supports order <= 4");
  InclineSurveyReport report;
  report.max_order = max_order;
  const CanonicalKey key_r0 = canonical_key(r0());
  const CanonicalKey key_r1 = canonical_key(r1());
  for (int order = 2; order <= max_order; ++order) {
    InclineSurveyRow row;
    row.order = order;
    row.extremes_ok = true;
    row.witnesses_ok = true;
    row.k_simple_exactly_r0_r1 = true;
    for (const FiniteSemiring& incline : enumerate_inclines(order)) {
      ++row.incline_count;
      Extremals ex = extremal_elements(incline);
      if (!(ex.greatest && ex.least)) row.extremes_ok = false;
      bool simple = is_k_simple(incline);
      if (simple) ++row.k_simple_count;
      CanonicalKey key = canonical_key(incline);
      bool is_two_element_incline = key == key_r0 || key == key_r1;
      if (simple != is_two_element_incline) row.k_simple_exactly_r0_r1 = false;
      if (order >= 3) {
        std::optional<ElementSubset> witness = find_nontrivial_k_ideal(incline);
        if (!witness || simple || !is_k_ideal(incline, *witness) ||
            witness->count() == incline.size()) {
          row.witnesses_ok = false;
        }
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

struct CensusEntry {
  CanonicalKey key;
  OpTable add;
  OpTable mul;
  bool k_simple = false;
  bool has_zero = false;
  bool has_identity = false;
  bool additively_idempotent = false;
  bool commutative_mul = false;
  bool incline = false;
};

struct CensusReport {
  int order = 0;
  ConstraintSet constraints;
  int total = 0;          // isomorphism classes enumerated
  int k_simple_count = 0;
  bool below_min_order = false;  // order-1 carriers fall below the |R| >= 2 convention
  std::vector<CensusEntry> entries;  // ascending by canonical key
};

/// Census of all semirings of the given order under the given constraints,
/// with each representative flagged and the k-simple ones counted.
inline CensusReport k_simple_census(int order, const ConstraintSet& constraints) {
  CensusReport report;
  report.order = order;
  report.constraints = constraints;
  report.below_min_order = order < 2;
  for (const FiniteSemiring& R : enumerate_semirings(order, constraints)) {
    CensusEntry entry;
    entry.key = canonical_key(R);
    entry.add = R.add_table();
    entry.mul = R.mul_table();
    entry.k_simple = is_k_simple(R);
    entry.has_zero = find_zero(R).has_value();
    entry.has_identity = find_identity(R).has_value();
    entry.additively_idempotent = is_additively_idempotent(R);
    entry.commutative_mul = is_commutative_mul(R);
    entry.incline = is_incline(R);
    if (entry.k_simple) ++report.k_simple_count;
    ++report.total;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

/// The six equivalent simplicity conditions for the ring Z_n viewed as a
/// semiring. The two ring-theoretic conditions coincide with their semiring
/// counterparts for rings, so they are computed as such.
struct RingSimplicityReport {
  int n = 0;
  bool ideal_simple_as_ring = false;
  bool ideal_free = false;
  bool k_simple = false;
  bool congruence_simple_as_ring = false;
  bool congruence_simple = false;
  bool k_congruence_simple = false;

  bool all_agree() const {
    return ideal_simple_as_ring == ideal_free && ideal_free == k_simple &&
           k_simple == congruence_simple_as_ring &&
           congruence_simple_as_ring == congruence_simple &&
           congruence_simple == k_congruence_simple;
  }
};

inline RingSimplicityReport ring_simplicity_conditions(const FiniteSemiring& ring, int n) {
  RingSimplicityReport report;
  report.n = n;
  report.ideal_free = is_ideal_free(ring);
  report.k_simple = is_k_simple(ring);
  report.congruence_simple = is_congruence_simple(ring);
  report.k_congruence_simple = is_k_congruence_simple(ring);
  // For rings the semiring notions coincide with the ring-theoretic ones.
  report.ideal_simple_as_ring = report.ideal_free;
  report.congruence_simple_as_ring = report.congruence_simple;
  return report;
}

}  // namespace semiring
