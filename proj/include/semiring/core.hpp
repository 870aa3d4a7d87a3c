#pragma once

// Finite semirings represented by explicit operation tables, with axiom
// validation and the structural predicates (zero, identity, additive
// idempotence, incline law, natural order) everything else builds on.
//
// Elements are dense indices 0..k-1; display names live in FiniteSemiring
// and only matter at parse/print boundaries.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semiring {

using element_type = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural table problems (wrong shape, entry out of range): distinct from
// axiom violations, which are reported through AxiomReport.
class TableShapeError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A requested order or search size is beyond the supported desk-scale bound.
class UnsupportedBoundError : public Error {
 public:
  using Error::Error;
};

// A numeric argument is outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A k-by-k operation table; entry(i,j) is the result of applying the
/// operation to elements i and j. Entries are range-checked at construction,
/// so a constructed table is always total.
class OpTable {
 public:
  OpTable() = default;

  OpTable(int size, std::vector<element_type> entries)
      : size_(size), entries_(std::move(entries)) {
    if (size_ < 0 ||
        entries_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)) {
      throw TableShapeError("operation table must have exactly size*size entries");
    }
    for (element_type e : entries_) {
      if (e < 0 || e >= size_) {
        throw TableShapeError("operation table entry out of range");
      }
    }
  }

  template <typename F>
  static OpTable from_fn(int size, F f) {
    std::vector<element_type> entries;
    entries.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (element_type i = 0; i < size; ++i) {
      for (element_type j = 0; j < size; ++j) {
        entries.push_back(f(i, j));
      }
    }
    return OpTable(size, std::move(entries));
  }

  int size() const { return size_; }

  element_type at(element_type i, element_type j) const {
    return entries_[static_cast<std::size_t>(i) * size_ + j];
  }

  const std::vector<element_type>& entries() const { return entries_; }

  bool operator==(const OpTable&) const = default;

 private:
  int size_ = 0;
  std::vector<element_type> entries_;
};

enum class Law {
  add_commutative,
  add_associative,
  mul_associative,
  left_distributive,
  right_distributive,
};

inline std::string_view law_name(Law law) {
  switch (law) {
    case Law::add_commutative: return "add-commutative";
    case Law::add_associative: return "add-associative";
    case Law::mul_associative: return "mul-associative";
    case Law::left_distributive: return "left-distributive";
    case Law::right_distributive: return "right-distributive";
  }
  return "unknown-law";
}

struct LawViolation {
  Law law;
  // Lexicographically first witness: (x,y) for commutativity, (x,y,z) for
  // the three-variable laws.
  std::vector<element_type> witness;

  bool operator==(const LawViolation&) const = default;
};

struct AxiomReport {
  std::vector<LawViolation> violations;
  // An additively neutral element that fails to be multiplicatively
  // absorbing. Not an axiom violation; surfaced because "zero" means
  // neutral AND absorbing and table authors tend to conflate the two.
  std::optional<element_type> neutral_non_absorbing;

  bool valid() const { return violations.empty(); }
};

/// Checks every semiring law over all element triples and reports each
/// violated law with its lexicographically first witness. O(k^3) per law.
inline AxiomReport validate(int size, const OpTable& add, const OpTable& mul) {
  if (add.size() != size || mul.size() != size) {
    throw TableShapeError("table size does not match the element count");
  }
  AxiomReport report;

  auto first_pair_violation = [&](auto bad) -> std::optional<std::vector<element_type>> {
    for (element_type x = 0; x < size; ++x) {
      for (element_type y = 0; y < size; ++y) {
        if (bad(x, y)) return std::vector<element_type>{x, y};
      }
    }
    return std::nullopt;
  };
  auto first_triple_violation = [&](auto bad) -> std::optional<std::vector<element_type>> {
    for (element_type x = 0; x < size; ++x) {
      for (element_type y = 0; y < size; ++y) {
        for (element_type z = 0; z < size; ++z) {
          if (bad(x, y, z)) return std::vector<element_type>{x, y, z};
        }
      }
    }
    return std::nullopt;
  };
  auto record = [&](Law law, std::optional<std::vector<element_type>> witness) {
    if (witness) report.violations.push_back({law, std::move(*witness)});
  };

  record(Law::add_commutative, first_pair_violation([&](element_type x, element_type y) {
           return add.at(x, y) != add.at(y, x);
         }));
  record(Law::add_associative, first_triple_violation([&](element_type x, element_type y, element_type z) {
           return add.at(add.at(x, y), z) != add.at(x, add.at(y, z));
         }));
  record(Law::mul_associative, first_triple_violation([&](element_type x, element_type y, element_type z) {
           return mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z));
         }));
  record(Law::left_distributive, first_triple_violation([&](element_type x, element_type y, element_type z) {
           return mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z));
         }));
  record(Law::right_distributive, first_triple_violation([&](element_type x, element_type y, element_type z) {
           return mul.at(add.at(x, y), z) != add.at(mul.at(x, z), mul.at(y, z));
         }));

  for (element_type e = 0; e < size && !report.neutral_non_absorbing; ++e) {
    bool neutral = true;
    bool absorbing = true;
    for (element_type r = 0; r < size; ++r) {
      if (add.at(e, r) != r || add.at(r, e) != r) neutral = false;
      if (mul.at(e, r) != e || mul.at(r, e) != e) absorbing = false;
    }
    if (neutral && !absorbing) report.neutral_non_absorbing = e;
  }
  return report;
}

/// Thrown when a FiniteSemiring is constructed from tables that violate the
/// semiring laws; carries the full validation report and, when known, the
/// element names for witness display.
class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomReport report, std::vector<std::string> element_names = {})
      : Error(describe(report)),
        report_(std::move(report)),
        element_names_(std::move(element_names)) {}

  const AxiomReport& report() const { return report_; }
  const std::vector<std::string>& element_names() const { return element_names_; }

 private:
  static std::string describe(const AxiomReport& report) {
    std::string msg = "semiring axioms violated:";
    for (const auto& v : report.violations) {
      msg += ' ';
      msg += law_name(v.law);
    }
    return msg;
  }

  AxiomReport report_;
  std::vector<std::string> element_names_;
};

/// A finite semiring: named carrier plus validated addition and
/// multiplication tables. Immutable after construction.
class FiniteSemiring {
 public:
  FiniteSemiring(std::string name, std::vector<std::string> elements, OpTable add, OpTable mul)
      : name_(std::move(name)),
        elements_(std::move(elements)),
        add_(std::move(add)),
        mul_(std::move(mul)) {
    if (elements_.empty()) throw TableShapeError("a semiring needs at least one element");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].empty()) throw TableShapeError("element names must be nonempty");
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (elements_[i] == elements_[j]) {
          throw TableShapeError("element names must be pairwise distinct: \"" + elements_[i] + '"');
        }
      }
    }
    AxiomReport report = validate(static_cast<int>(elements_.size()), add_, mul_);
    if (!report.valid()) throw AxiomError(std::move(report), elements_);
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return elements_; }
  const std::string& element_name(element_type e) const { return elements_[e]; }

  std::optional<element_type> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] == name) return static_cast<element_type>(i);
    }
    return std::nullopt;
  }

  element_type add(element_type x, element_type y) const { return add_.at(x, y); }
  element_type mul(element_type x, element_type y) const { return mul_.at(x, y); }
  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }

  // Order-1 semirings are representable but flagged: classification
  // operations skip them.
  bool single_element() const { return size() == 1; }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  OpTable add_;
  OpTable mul_;
};

/// The zero of a semiring: additively neutral AND multiplicatively
/// absorbing. At most one element can qualify (neutrality forces
/// uniqueness).
inline std::optional<element_type> find_zero(const FiniteSemiring& R) {
  std::optional<element_type> zero;
  for (element_type e = 0; e < R.size(); ++e) {
    bool ok = true;
    for (element_type r = 0; r < R.size() && ok; ++r) {
      ok = R.add(e, r) == r && R.add(r, e) == r && R.mul(e, r) == e && R.mul(r, e) == e;
    }
    if (ok) {
      assert(!zero);
      zero = e;
    }
  }
  return zero;
}

inline std::optional<element_type> find_identity(const FiniteSemiring& R) {
  std::optional<element_type> identity;
  for (element_type e = 0; e < R.size(); ++e) {
    bool ok = true;
    for (element_type r = 0; r < R.size() && ok; ++r) {
      ok = R.mul(e, r) == r && R.mul(r, e) == r;
    }
    if (ok) {
      assert(!identity);
      identity = e;
    }
  }
  return identity;
}

inline bool is_additively_idempotent(const FiniteSemiring& R) {
  for (element_type r = 0; r < R.size(); ++r) {
    if (R.add(r, r) != r) return false;
  }
  return true;
}

inline bool is_commutative_mul(const FiniteSemiring& R) {
  for (element_type x = 0; x < R.size(); ++x) {
    for (element_type y = x + 1; y < R.size(); ++y) {
      if (R.mul(x, y) != R.mul(y, x)) return false;
    }
  }
  return true;
}

/// Incline law: x + xy = x = x + yx for all x, y. Checked together with
/// additive idempotence (the law is stated for additively idempotent
/// semirings; non-idempotent semirings simply return false).
inline bool is_incline(const FiniteSemiring& R) {
  if (!is_additively_idempotent(R)) return false;
  for (element_type x = 0; x < R.size(); ++x) {
    for (element_type y = 0; y < R.size(); ++y) {
      if (R.add(x, R.mul(x, y)) != x) return false;
      if (R.add(x, R.mul(y, x)) != x) return false;
    }
  }
  return true;
}

/// A reflexive partial order on element indices, stored densely.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  OrderMatrix(int size, std::vector<char> leq) : size_(size), leq_(std::move(leq)) {
    assert(leq_.size() == static_cast<std::size_t>(size_) * size_);
  }

  int size() const { return size_; }
  bool leq(element_type x, element_type y) const {
    return leq_[static_cast<std::size_t>(x) * size_ + y] != 0;
  }

  bool strictly_less(element_type x, element_type y) const { return x != y && leq(x, y); }

  /// Covering pairs (x,y): x < y with nothing strictly between.
  std::vector<std::pair<element_type, element_type>> covers() const {
    std::vector<std::pair<element_type, element_type>> result;
    for (element_type x = 0; x < size_; ++x) {
      for (element_type y = 0; y < size_; ++y) {
        if (!strictly_less(x, y)) continue;
        bool covered = true;
        for (element_type z = 0; z < size_ && covered; ++z) {
          if (strictly_less(x, z) && strictly_less(z, y)) covered = false;
        }
        if (covered) result.emplace_back(x, y);
      }
    }
    return result;
  }

  bool operator==(const OrderMatrix&) const = default;

 private:
  int size_ = 0;
  std::vector<char> leq_;
};

/// Natural order of an additively idempotent semiring: x <= y iff x+y = y.
/// Always a partial order under the precondition; the order axioms are
/// asserted rather than trusted.
inline OrderMatrix natural_leq(const FiniteSemiring& R) {
  if (!is_additively_idempotent(R)) {
    throw PreconditionError("natural order requires an additively idempotent semiring");
  }
  const int k = R.size();
  std::vector<char> leq(static_cast<std::size_t>(k) * k, 0);
  for (element_type x = 0; x < k; ++x) {
    for (element_type y = 0; y < k; ++y) {
      leq[static_cast<std::size_t>(x) * k + y] = R.add(x, y) == y ? 1 : 0;
    }
  }
  OrderMatrix order(k, std::move(leq));
#ifndef NDEBUG
  for (element_type x = 0; x < k; ++x) {
    assert(order.leq(x, x));
    for (element_type y = 0; y < k; ++y) {
      assert(!(order.leq(x, y) && order.leq(y, x)) || x == y);
      for (element_type z = 0; z < k; ++z) {
        assert(!(order.leq(x, y) && order.leq(y, z)) || order.leq(x, z));
      }
    }
  }
#endif
  return order;
}

struct Extremals {
  std::vector<element_type> maximal;
  std::vector<element_type> minimal;
  std::optional<element_type> greatest;
  std::optional<element_type> least;
};

/// Maximal/minimal/greatest/least elements under the natural order. For
/// inclines this asserts that the (finite, so existing) maximal element is
/// the greatest and dually for minimal/least.
inline Extremals extremal_elements(const FiniteSemiring& R) {
  OrderMatrix order = natural_leq(R);
  const int k = R.size();
  Extremals out;
  for (element_type x = 0; x < k; ++x) {
    bool is_maximal = true;
    bool is_minimal = true;
    bool is_greatest = true;
    bool is_least = true;
    for (element_type y = 0; y < k; ++y) {
      if (order.strictly_less(x, y)) is_maximal = false;
      if (order.strictly_less(y, x)) is_minimal = false;
      if (!order.leq(y, x)) is_greatest = false;
      if (!order.leq(x, y)) is_least = false;
    }
    if (is_maximal) out.maximal.push_back(x);
    if (is_minimal) out.minimal.push_back(x);
    if (is_greatest) {
      assert(!out.greatest);
      out.greatest = x;
    }
    if (is_least) {
      assert(!out.least);
      out.least = x;
    }
  }
  if (is_incline(R)) {
    assert(out.maximal.size() == 1 && out.greatest && *out.greatest == out.maximal[0]);
    assert(out.minimal.size() == 1 && out.least && *out.least == out.minimal[0]);
  }
  return out;
}

}  // namespace semiring
