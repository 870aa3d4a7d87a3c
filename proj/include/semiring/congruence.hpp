#pragma once

// Congruences, the Bourne relation kappa_A, quotient semirings, the
// k-congruence criterion, the iota/kappa maps between k-ideals and
// k-congruences, and the enumeration and bijection checks built on them.

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiring/core.hpp"
#include "semiring/ideals.hpp"
#include "semiring/subset.hpp"

namespace semiring {

/// A partition of [0,k) in canonical restricted-growth form: class indices
/// appear in element order, so equal partitions have equal class arrays.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> class_of) {
    // Canonicalize arbitrary labels to restricted-growth form.
    std::vector<int> relabel(class_of.size(), -1);
    int next = 0;
    class_of_.reserve(class_of.size());
    for (int label : class_of) {
      if (label < 0 || label >= static_cast<int>(class_of.size())) {
        throw PreconditionError("partition class label out of range");
      }
      if (relabel[label] < 0) relabel[label] = next++;
      class_of_.push_back(relabel[label]);
    }
    class_count_ = next;
    if (class_of_.empty()) throw PreconditionError("partition of an empty carrier");
  }

  static Partition identity(int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return Partition(std::move(labels));
  }

  static Partition universal(int n) { return Partition(std::vector<int>(n, 0)); }

  static Partition from_classes(int n, const std::vector<std::vector<element_type>>& classes) {
    std::vector<int> labels(n, -1);
    int label = 0;
    for (const auto& cls : classes) {
      for (element_type e : cls) {
        if (e < 0 || e >= n || labels[e] >= 0) {
          throw PreconditionError("classes must partition the carrier exactly");
        }
        labels[e] = label;
      }
      ++label;
    }
    for (int taken : labels) {
      if (taken < 0) throw PreconditionError("classes must cover the carrier");
    }
    return Partition(std::move(labels));
  }

  int size() const { return static_cast<int>(class_of_.size()); }
  int class_count() const { return class_count_; }
  int class_of(element_type e) const { return class_of_[e]; }
  bool same_class(element_type a, element_type b) const { return class_of_[a] == class_of_[b]; }
  const std::vector<int>& labels() const { return class_of_; }

  std::vector<ElementSubset> classes() const {
    std::vector<ElementSubset> out(class_count_, ElementSubset(size()));
    for (element_type e = 0; e < size(); ++e) out[class_of_[e]].insert(e);
    return out;
  }

  /// True when this partition refines other, i.e. this relation is
  /// contained in other's as a set of pairs.
  bool refines(const Partition& other) const {
    assert(size() == other.size());
    std::vector<int> image(class_count_, -1);
    for (element_type e = 0; e < size(); ++e) {
      int& img = image[class_of_[e]];
      if (img < 0) {
        img = other.class_of(e);
      } else if (img != other.class_of(e)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(const FiniteSemiring& R) const {
    std::string out;
    for (const ElementSubset& cls : classes()) {
      if (!out.empty()) out += '|';
      out += cls.to_string(R);
    }
    return out;
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> class_of_;
  int class_count_ = 0;
};

/// Compatibility of a partition with both operations: a ~ b implies
/// a+c ~ b+c, ac ~ bc, and ca ~ cb. Checking each class against its first
/// member suffices since the relation is already an equivalence.
inline bool is_congruence(const FiniteSemiring& R, const Partition& p) {
  if (p.size() != R.size()) {
    throw PreconditionError("partition size does not match the semiring order");
  }
  const int k = R.size();
  std::vector<element_type> anchor(p.class_count(), -1);
  for (element_type e = 0; e < k; ++e) {
    element_type& a = anchor[p.class_of(e)];
    if (a < 0) {
      a = e;
      continue;
    }
    for (element_type c = 0; c < k; ++c) {
      if (!p.same_class(R.add(a, c), R.add(e, c))) return false;
      if (!p.same_class(R.mul(a, c), R.mul(e, c))) return false;
      if (!p.same_class(R.mul(c, a), R.mul(c, e))) return false;
    }
  }
  return true;
}

/// A partition whose compatibility with the owner's operations has been
/// verified at construction.
class Congruence {
 public:
  Congruence(const FiniteSemiring& R, Partition p) : partition_(std::move(p)) {
    if (!is_congruence(R, partition_)) {
      throw PreconditionError("partition is not a congruence");
    }
  }

  const Partition& partition() const { return partition_; }
  int class_count() const { return partition_.class_count(); }
  bool same_class(element_type a, element_type b) const { return partition_.same_class(a, b); }

  bool operator==(const Congruence&) const = default;

 private:
  Partition partition_;
};

/// The Bourne relation of an ideal A: x ~ y iff x+a = y+b for some a,b in
/// A. Always an equivalence compatible with both operations; transitivity
/// is asserted rather than trusted, and compatibility is checked by the
/// Congruence constructor.
inline Congruence kappa(const FiniteSemiring& R, const ElementSubset& A) {
  detail::check_owner(R, A);
  if (!is_ideal(R, A)) throw PreconditionError("kappa requires an ideal");
  const int k = R.size();
  const auto members = A.members();

  // sums_into[x] = set of values x+a over a in A, as bits
  std::vector<std::uint32_t> reach(k, 0);
  for (element_type x = 0; x < k; ++x) {
    for (element_type a : members) reach[x] |= std::uint32_t{1} << R.add(x, a);
  }
  std::vector<char> related(static_cast<std::size_t>(k) * k, 0);
  for (element_type x = 0; x < k; ++x) {
    for (element_type y = 0; y < k; ++y) {
      related[static_cast<std::size_t>(x) * k + y] = (reach[x] & reach[y]) != 0 ? 1 : 0;
    }
  }
#ifndef NDEBUG
  for (element_type x = 0; x < k; ++x) {
    assert(related[static_cast<std::size_t>(x) * k + x]);
    for (element_type y = 0; y < k; ++y) {
      for (element_type z = 0; z < k; ++z) {
        assert(!(related[static_cast<std::size_t>(x) * k + y] &&
                 related[static_cast<std::size_t>(y) * k + z]) ||
               related[static_cast<std::size_t>(x) * k + z]);
      }
    }
  }
#endif
  std::vector<int> labels(k, -1);
  int next = 0;
  for (element_type x = 0; x < k; ++x) {
    if (labels[x] >= 0) continue;
    labels[x] = next;
    for (element_type y = x + 1; y < k; ++y) {
      if (related[static_cast<std::size_t>(x) * k + y]) labels[y] = next;
    }
    ++next;
  }
  return Congruence(R, Partition(std::move(labels)));
}

/// Quotient semiring of R by a congruence. Class representatives are the
/// lowest element index of each class; classes are named "[rep]".
struct QuotientSemiring {
  FiniteSemiring base;
  Congruence congruence;
  FiniteSemiring quotient;
  std::vector<int> projection;  // element index -> class index
};

inline QuotientSemiring quotient(const FiniteSemiring& R, const Congruence& theta) {
  const Partition& p = theta.partition();
  if (p.size() != R.size()) {
    throw PreconditionError("congruence size does not match the semiring order");
  }
  const int classes = p.class_count();
  std::vector<element_type> rep(classes, -1);
  for (element_type e = 0; e < R.size(); ++e) {
    if (rep[p.class_of(e)] < 0) rep[p.class_of(e)] = e;
  }
#ifndef NDEBUG
  // Class-wise operations are independent of representative choice.
  for (element_type x = 0; x < R.size(); ++x) {
    for (element_type y = 0; y < R.size(); ++y) {
      assert(p.class_of(R.add(x, y)) == p.class_of(R.add(rep[p.class_of(x)], rep[p.class_of(y)])));
      assert(p.class_of(R.mul(x, y)) == p.class_of(R.mul(rep[p.class_of(x)], rep[p.class_of(y)])));
    }
  }
#endif
  std::vector<std::string> names;
  names.reserve(classes);
  for (int c = 0; c < classes; ++c) names.push_back("[" + R.element_name(rep[c]) + "]");
  OpTable add = OpTable::from_fn(classes, [&](element_type i, element_type j) {
    return p.class_of(R.add(rep[i], rep[j]));
  });
  OpTable mul = OpTable::from_fn(classes, [&](element_type i, element_type j) {
    return p.class_of(R.mul(rep[i], rep[j]));
  });
  FiniteSemiring q(R.name() + "/~", std::move(names), std::move(add), std::move(mul));
#ifndef NDEBUG
  if (std::optional<element_type> zero = find_zero(R)) {
    std::optional<element_type> qzero = find_zero(q);
    assert(qzero && *qzero == p.class_of(*zero));
  }
#endif
  return QuotientSemiring{R, theta, std::move(q), p.labels()};
}

/// The congruence class acting as the zero of the quotient, as a subset of
/// R, or nothing if the quotient has no zero. When present it is always a
/// k-ideal of R (asserted).
inline std::optional<ElementSubset> zero_class(const FiniteSemiring& R, const Congruence& theta) {
  QuotientSemiring q = quotient(R, theta);
  std::optional<element_type> qzero = find_zero(q.quotient);
  if (!qzero) return std::nullopt;
  ElementSubset cls(R.size());
  for (element_type e = 0; e < R.size(); ++e) {
    if (q.projection[e] == *qzero) cls.insert(e);
  }
  assert(is_k_ideal(R, cls));
  return cls;
}

/// Decides whether theta is induced by an ideal, via the cheap criterion:
/// the quotient has a zero class Z and theta equals kappa_Z. (The
/// existential scan over all ideals is kept as a test oracle only.)
inline bool is_k_congruence(const FiniteSemiring& R, const Congruence& theta) {
  std::optional<ElementSubset> zc = zero_class(R, theta);
  if (!zc) return false;
  return kappa(R, *zc).partition() == theta.partition();
}

/// For a k-congruence theta, the k-ideal that induces it: the zero class of
/// the quotient. kappa(iota(theta)) == theta.
inline ElementSubset iota(const FiniteSemiring& R, const Congruence& theta) {
  std::optional<ElementSubset> zc = zero_class(R, theta);
  if (!zc || kappa(R, *zc).partition() != theta.partition()) {
    throw PreconditionError("iota requires a k-congruence");
  }
  return *zc;
}

namespace detail {

// All restricted-growth strings of length n in lexicographic order.
template <typename Visit>
void for_each_rgs(int n, Visit visit) {
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  while (true) {
    visit(rgs);
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    for (int j = 1; j < n; ++j) prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
  }
}

}  // namespace detail

/// All congruences, as the restricted-growth enumeration of set partitions
/// filtered by compatibility. Bounded at order 9 (Bell(9) = 21147).
inline std::vector<Congruence> enumerate_congruences(const FiniteSemiring& R) {
  const int k = R.size();
  if (k > 9) throw UnsupportedBoundError("congruence enumeration supports order <= 9");
  std::vector<Congruence> out;
  detail::for_each_rgs(k, [&](const std::vector<int>& rgs) {
    Partition p(rgs);
    if (is_congruence(R, p)) out.emplace_back(R, std::move(p));
  });
  return out;
}

inline std::vector<Congruence> enumerate_k_congruences(const FiniteSemiring& R) {
  std::vector<Congruence> out;
  for (Congruence& theta : enumerate_congruences(R)) {
    if (is_k_congruence(R, theta)) out.push_back(std::move(theta));
  }
  return out;
}

/// Checks that kappa restricted to k-ideals is an inclusion-preserving
/// bijection onto the k-congruences, and that both round trips
/// (iota after kappa, kappa after iota) are identities.
struct BijectionReport {
  int k_ideal_count = 0;
  int k_congruence_count = 0;
  bool kappa_injective = false;
  bool kappa_surjective = false;
  bool inclusion_preserved = false;
  bool round_trips_ok = false;

  bool ok() const {
    return k_ideal_count == k_congruence_count && kappa_injective && kappa_surjective &&
           inclusion_preserved && round_trips_ok;
  }
};

inline BijectionReport verify_bijection(const FiniteSemiring& R) {
  BijectionReport report;
  std::vector<ElementSubset> k_ideals = enumerate_k_ideals(R);
  std::vector<Congruence> k_congruences = enumerate_k_congruences(R);
  report.k_ideal_count = static_cast<int>(k_ideals.size());
  report.k_congruence_count = static_cast<int>(k_congruences.size());

  std::vector<Partition> images;
  images.reserve(k_ideals.size());
  for (const ElementSubset& A : k_ideals) images.push_back(kappa(R, A).partition());

  report.kappa_injective = true;
  for (std::size_t i = 0; i < images.size() && report.kappa_injective; ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) {
        report.kappa_injective = false;
        break;
      }
    }
  }
  report.kappa_surjective = true;
  for (const Congruence& theta : k_congruences) {
    if (std::find(images.begin(), images.end(), theta.partition()) == images.end()) {
      report.kappa_surjective = false;
      break;
    }
  }
  report.inclusion_preserved = true;
  for (std::size_t i = 0; i < k_ideals.size() && report.inclusion_preserved; ++i) {
    for (std::size_t j = 0; j < k_ideals.size(); ++j) {
      bool set_incl = k_ideals[i].subset_of(k_ideals[j]);
      bool rel_incl = images[i].refines(images[j]);
      if (set_incl != rel_incl) {
        report.inclusion_preserved = false;
        break;
      }
    }
  }
  report.round_trips_ok = true;
  for (std::size_t i = 0; i < k_ideals.size(); ++i) {
    Congruence theta(R, images[i]);
    if (iota(R, theta) != k_ideals[i]) {
      report.round_trips_ok = false;
      break;
    }
  }
  if (report.round_trips_ok) {
    for (const Congruence& theta : k_congruences) {
      if (kappa(R, iota(R, theta)).partition() != theta.partition()) {
        report.round_trips_ok = false;
        break;
      }
    }
  }
  return report;
}

/// Looks for an ideal that is not k-closed; such an ideal collides with its
/// closure under kappa, so kappa cannot be injective on any family that
/// properly contains the k-ideals. Returns the first (A, closure) pair in
/// family order, or nothing when every ideal in the family is k-closed.
inline std::optional<std::pair<ElementSubset, ElementSubset>> kappa_injectivity_probe(
    const FiniteSemiring& R, const std::vector<ElementSubset>& family) {
  for (const ElementSubset& A : family) {
    ElementSubset closure = k_closure(R, A);
    if (closure != A) {
      assert(kappa(R, A) == kappa(R, closure));
      return std::make_pair(A, closure);
    }
  }
  return std::nullopt;
}

/// A zero exists iff the identity relation is a k-congruence. Returns
/// whether the biconditional holds; it always should.
inline bool has_zero_iff_identity_k(const FiniteSemiring& R) {
  bool zero = find_zero(R).has_value();
  bool identity_k = is_k_congruence(R, Congruence(R, Partition::identity(R.size())));
  return zero == identity_k;
}

/// Exactly two congruences in total.
inline bool is_congruence_simple(const FiniteSemiring& R) {
  return enumerate_congruences(R).size() == 2;
}

/// Every k-congruence is the universal or the identity relation. The
/// identity need not itself be a k-congruence, so a zero-free semiring
/// whose only k-congruence is the universal relation qualifies.
inline bool is_k_congruence_simple(const FiniteSemiring& R) {
  const Partition universal = Partition::universal(R.size());
  const Partition identity = Partition::identity(R.size());
  for (const Congruence& theta : enumerate_k_congruences(R)) {
    if (theta.partition() != universal && theta.partition() != identity) return false;
  }
  return true;
}

}  // namespace semiring
