#pragma once

// Ideal and k-ideal machinery: membership tests, subtractive closure,
// brute-force enumeration, ideal sums, incline down-sets, and the
// simplicity predicates.
//
// An ideal is a nonempty subset closed under addition and absorbing under
// multiplication by any element from both sides. Its k-closure collects
// every x with x+a = b for some a, b in the ideal; a k-ideal equals its
// closure.

#include <cassert>
#include <optional>
#include <vector>

#include "semiring/core.hpp"
#include "semiring/subset.hpp"

namespace semiring {

namespace detail {

inline void check_owner(const FiniteSemiring& R, const ElementSubset& S) {
  if (S.universe_size() != R.size()) {
    throw PreconditionError("subset universe does not match the semiring order");
  }
}

inline bool ideal_bits(const FiniteSemiring& R, std::uint32_t bits) {
  if (bits == 0) return false;
  const int k = R.size();
  for (element_type a = 0; a < k; ++a) {
    if (!((bits >> a) & 1u)) continue;
    for (element_type b = 0; b < k; ++b) {
      if (!((bits >> b) & 1u)) continue;
      if (!((bits >> R.add(a, b)) & 1u)) return false;
    }
    for (element_type r = 0; r < k; ++r) {
      if (!((bits >> R.mul(r, a)) & 1u)) return false;
      if (!((bits >> R.mul(a, r)) & 1u)) return false;
    }
  }
  return true;
}

inline std::uint32_t k_closure_bits(const FiniteSemiring& R, std::uint32_t ideal) {
  const int k = R.size();
  std::uint32_t closure = 0;
  for (element_type x = 0; x < k; ++x) {
    for (element_type a = 0; a < k; ++a) {
      if (!((ideal >> a) & 1u)) continue;
      if ((ideal >> R.add(x, a)) & 1u) {
        closure |= std::uint32_t{1} << x;
        break;
      }
    }
  }
  return closure;
}

}  // namespace detail

inline bool is_ideal(const FiniteSemiring& R, const ElementSubset& S) {
  detail::check_owner(R, S);
  return detail::ideal_bits(R, S.bits());
}

/// Subtractive closure of an ideal: { x | x+a = b for some a,b in A }.
/// The result contains A, is itself an ideal, and closing twice changes
/// nothing; all three facts are asserted.
inline ElementSubset k_closure(const FiniteSemiring& R, const ElementSubset& A) {
  detail::check_owner(R, A);
  if (!detail::ideal_bits(R, A.bits())) {
    throw PreconditionError("k_closure requires an ideal");
  }
  std::uint32_t closure = detail::k_closure_bits(R, A.bits());
  assert((A.bits() & ~closure) == 0);
  assert(detail::ideal_bits(R, closure));
  assert(detail::k_closure_bits(R, closure) == closure);
  return ElementSubset(R.size(), closure);
}

inline bool is_k_ideal(const FiniteSemiring& R, const ElementSubset& A) {
  detail::check_owner(R, A);
  return detail::ideal_bits(R, A.bits()) && detail::k_closure_bits(R, A.bits()) == A.bits();
}

/// All ideals, in ascending bit-pattern order. Brute force over the
/// 2^k - 1 nonempty subsets; fine at desk scale (k <= 16).
inline std::vector<ElementSubset> enumerate_ideals(const FiniteSemiring& R) {
  const int k = R.size();
  if (k > 16) throw UnsupportedBoundError("ideal enumeration supports order <= 16");
  std::vector<ElementSubset> out;
  const std::uint32_t limit = std::uint32_t{1} << k;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    if (detail::ideal_bits(R, bits)) out.emplace_back(k, bits);
  }
  return out;
}

inline std::vector<ElementSubset> enumerate_k_ideals(const FiniteSemiring& R) {
  std::vector<ElementSubset> out;
  for (const ElementSubset& A : enumerate_ideals(R)) {
    if (detail::k_closure_bits(R, A.bits()) == A.bits()) out.push_back(A);
  }
  return out;
}

/// Elementwise sum { a+b | a in A, b in B }; always an ideal (asserted).
inline ElementSubset ideal_sum(const FiniteSemiring& R, const ElementSubset& A,
                               const ElementSubset& B) {
  detail::check_owner(R, A);
  detail::check_owner(R, B);
  if (!detail::ideal_bits(R, A.bits()) || !detail::ideal_bits(R, B.bits())) {
    throw PreconditionError("ideal_sum requires two ideals");
  }
  ElementSubset sum(R.size());
  for (element_type a : A.members()) {
    for (element_type b : B.members()) sum.insert(R.add(a, b));
  }
  assert(detail::ideal_bits(R, sum.bits()));
  return sum;
}

/// Smallest ideal containing S: least fixed point of
/// S -> S + (S+S) + RS + SR, reached in at most k steps.
inline ElementSubset generated_ideal(const FiniteSemiring& R, const ElementSubset& S) {
  detail::check_owner(R, S);
  if (S.empty()) throw PreconditionError("generated_ideal requires a nonempty seed");
  const int k = R.size();
  std::uint32_t current = S.bits();
  while (true) {
    std::uint32_t next = current;
    for (element_type a = 0; a < k; ++a) {
      if (!((current >> a) & 1u)) continue;
      for (element_type b = 0; b < k; ++b) {
        if ((current >> b) & 1u) next |= std::uint32_t{1} << R.add(a, b);
      }
      for (element_type r = 0; r < k; ++r) {
        next |= std::uint32_t{1} << R.mul(r, a);
        next |= std::uint32_t{1} << R.mul(a, r);
      }
    }
    if (next == current) break;
    current = next;
  }
  assert(detail::ideal_bits(R, current));
  return ElementSubset(k, current);
}

/// { x | x <= r } under the natural order. For inclines the down-set of any
/// element is a k-ideal (asserted).
inline ElementSubset down_set(const FiniteSemiring& R, element_type r) {
  OrderMatrix order = natural_leq(R);
  ElementSubset out(R.size());
  for (element_type x = 0; x < R.size(); ++x) {
    if (order.leq(x, r)) out.insert(x);
  }
  if (is_incline(R)) {
    assert(is_k_ideal(R, out));
  }
  return out;
}

/// For an incline with at least 3 elements, produces a proper nontrivial
/// k-ideal: the down-set of the lowest-indexed element that is neither the
/// greatest nor the least. Returns nothing for orders 1 and 2.
inline std::optional<ElementSubset> find_nontrivial_k_ideal(const FiniteSemiring& R) {
  if (!is_incline(R)) throw PreconditionError("find_nontrivial_k_ideal requires an incline");
  if (R.size() <= 2) return std::nullopt;
  Extremals ex = extremal_elements(R);
  assert(ex.greatest && ex.least);
  for (element_type r = 0; r < R.size(); ++r) {
    if (r == *ex.greatest || r == *ex.least) continue;
    ElementSubset witness = down_set(R, r);
    assert(is_k_ideal(R, witness));
    assert(witness.count() < R.size());
    std::optional<element_type> zero = find_zero(R);
    assert(!zero || witness != ElementSubset::of(R.size(), {*zero}));
    (void)zero;
    return witness;
  }
  assert(false && "an incline of order >= 3 has a non-extremal element");
  return std::nullopt;
}

/// No k-ideals besides R itself and, when a zero exists, {0}.
inline bool is_k_simple(const FiniteSemiring& R) {
  std::optional<element_type> zero = find_zero(R);
  const std::uint32_t full = ElementSubset::full(R.size()).bits();
  for (const ElementSubset& A : enumerate_k_ideals(R)) {
    if (A.bits() == full) continue;
    if (zero && A.bits() == (std::uint32_t{1} << *zero)) continue;
    return false;
  }
  return true;
}

/// No ideals at all besides the trivial ones.
inline bool is_ideal_free(const FiniteSemiring& R) {
  std::optional<element_type> zero = find_zero(R);
  const std::uint32_t full = ElementSubset::full(R.size()).bits();
  for (const ElementSubset& A : enumerate_ideals(R)) {
    if (A.bits() == full) continue;
    if (zero && A.bits() == (std::uint32_t{1} << *zero)) continue;
    return false;
  }
  return true;
}

}  // namespace semiring
