#pragma once

// Subsets of a semiring carrier as fixed-width bit vectors. Used for
// candidate ideals and congruence classes; iteration order is always
// ascending element index, so enumeration output is deterministic.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

class ElementSubset {
 public:
  static constexpr int max_universe = 32;

  ElementSubset() = default;

  explicit ElementSubset(int universe, std::uint32_t bits = 0)
      : universe_(universe), bits_(bits) {
    if (universe < 0 || universe > max_universe) {
      throw PreconditionError("subset universe must have at most 32 elements");
    }
    if (universe < max_universe && (bits >> universe) != 0) {
      throw PreconditionError("subset bits outside the universe");
    }
  }

  static ElementSubset of(int universe, std::initializer_list<element_type> members) {
    ElementSubset s(universe);
    for (element_type e : members) s.insert(e);
    return s;
  }

  static ElementSubset full(int universe) {
    return ElementSubset(universe, universe == max_universe
                                       ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << universe) - 1);
  }

  int universe_size() const { return universe_; }
  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }

  bool contains(element_type e) const { return (bits_ >> e) & 1u; }

  void insert(element_type e) {
    if (e < 0 || e >= universe_) throw PreconditionError("element outside the subset universe");
    bits_ |= std::uint32_t{1} << e;
  }

  bool subset_of(const ElementSubset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  ElementSubset operator|(const ElementSubset& other) const {
    return ElementSubset(universe_, bits_ | other.bits_);
  }

  ElementSubset operator&(const ElementSubset& other) const {
    return ElementSubset(universe_, bits_ & other.bits_);
  }

  /// Members in ascending index order.
  std::vector<element_type> members() const {
    std::vector<element_type> out;
    for (element_type e = 0; e < universe_; ++e) {
      if (contains(e)) out.push_back(e);
    }
    return out;
  }

  std::string to_string(const FiniteSemiring& R) const {
    std::string out = "{";
    bool first = true;
    for (element_type e : members()) {
      if (!first) out += ',';
      out += R.element_name(e);
      first = false;
    }
    out += '}';
    return out;
  }

  bool operator==(const ElementSubset&) const = default;

  // Ascending bit-pattern order; the canonical enumeration order.
  bool operator<(const ElementSubset& other) const {
    return bits_ < other.bits_;
  }

 private:
  int universe_ = 0;
  std::uint32_t bits_ = 0;
};

}  // namespace semiring
