#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "semiring/congruence.hpp"
#include "semiring/specfmt.hpp"
#include "test_helpers.hpp"

using namespace semiring;
using test_helpers::load_fixture;
using test_helpers::make_maxmax;

namespace {

std::vector<FiniteSemiring> fixtures() {
  std::vector<FiniteSemiring> out;
  out.push_back(load_fixture("fig1_example34"));
  out.push_back(load_fixture("fig2_example35"));
  out.push_back(load_fixture("r0"));
  out.push_back(load_fixture("r1"));
  return out;
}

ElementSubset by_names(const FiniteSemiring& R, std::initializer_list<const char*> names) {
  ElementSubset out(R.size());
  for (const char* name : names) out.insert(*R.index_of(name));
  return out;
}

Partition partition_by_names(const FiniteSemiring& R,
                             std::initializer_list<std::initializer_list<const char*>> classes) {
  std::vector<std::vector<element_type>> indexed;
  for (const auto& cls : classes) {
    std::vector<element_type> members;
    for (const char* name : cls) members.push_back(*R.index_of(name));
    indexed.push_back(std::move(members));
  }
  return Partition::from_classes(R.size(), indexed);
}

// Direct transcription of the induced-relation definition, quantifying over
// witness pairs without the reachability shortcut.
bool related_by_definition(const FiniteSemiring& R, const ElementSubset& A, element_type x,
                           element_type y) {
  for (element_type a : A.members()) {
    for (element_type b : A.members()) {
      if (R.add(x, a) == R.add(y, b)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("partitions canonicalize to restricted growth form") {
  Partition p(std::vector<int>{2, 2, 0, 1});
  CHECK(p.labels() == std::vector<int>{0, 0, 1, 2});
  CHECK(p.class_count() == 3);
  CHECK(p.same_class(0, 1));
  CHECK_FALSE(p.same_class(0, 2));

  CHECK(Partition::identity(3).class_count() == 3);
  CHECK(Partition::universal(3).class_count() == 1);

  Partition q = Partition::from_classes(4, {{3, 1}, {0, 2}});
  CHECK(q.labels() == std::vector<int>{0, 1, 0, 1});

  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}, {1, 2}}), PreconditionError);
}

TEST_CASE("partition refinement") {
  Partition fine = Partition::identity(4);
  Partition coarse = Partition::universal(4);
  Partition mid(std::vector<int>{0, 0, 1, 1});
  CHECK(fine.refines(mid));
  CHECK(mid.refines(coarse));
  CHECK_FALSE(coarse.refines(mid));
  CHECK(mid.refines(mid));
}

TEST_CASE("congruence compatibility") {
  FiniteSemiring fig2 = load_fixture("fig2_example35");
  Partition theta = partition_by_names(fig2, {{"0"}, {"a", "b", "c", "1"}});
  CHECK(is_congruence(fig2, theta));
  CHECK(is_congruence(fig2, Partition::identity(5)));
  CHECK_FALSE(is_congruence(fig2, partition_by_names(fig2, {{"0", "a"}, {"b"}, {"c"}, {"1"}})));

  CHECK_THROWS_AS(Congruence(fig2, partition_by_names(fig2, {{"0", "a"}, {"b"}, {"c"}, {"1"}})),
                  PreconditionError);
}

TEST_CASE("kappa of the classic ideal splits the lattice in two") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  Congruence theta = kappa(fig1, by_names(fig1, {"0", "a"}));
  CHECK(theta.partition() ==
        partition_by_names(fig1, {{"0", "a"}, {"b", "c", "d", "1"}}));
  CHECK(is_k_congruence(fig1, theta));
}

TEST_CASE("kappa extremes") {
  for (const FiniteSemiring& R : fixtures()) {
    CHECK(kappa(R, ElementSubset::full(R.size())).partition() == Partition::universal(R.size()));
    if (std::optional<element_type> zero = find_zero(R)) {
      CHECK(kappa(R, ElementSubset::of(R.size(), {*zero})).partition() ==
            Partition::identity(R.size()));
    }
  }
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK_THROWS_AS(kappa(fig1, by_names(fig1, {"a"})), PreconditionError);
}

TEST_CASE("kappa agrees with the definitional relation on every fixture ideal") {
  for (const FiniteSemiring& R : fixtures()) {
    for (const ElementSubset& A : enumerate_ideals(R)) {
      Congruence theta = kappa(R, A);
      for (element_type x = 0; x < R.size(); ++x) {
        for (element_type y = 0; y < R.size(); ++y) {
          CHECK(theta.same_class(x, y) == related_by_definition(R, A, x, y));
        }
      }
    }
  }
}

TEST_CASE("quotients") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");

  QuotientSemiring by_identity = quotient(fig1, Congruence(fig1, Partition::identity(6)));
  CHECK(by_identity.quotient.size() == 6);
  CHECK(by_identity.quotient.add_table() == fig1.add_table());
  CHECK(by_identity.quotient.mul_table() == fig1.mul_table());

  QuotientSemiring by_universal = quotient(fig1, Congruence(fig1, Partition::universal(6)));
  CHECK(by_universal.quotient.size() == 1);

  // Splitting at {0,a} leaves the boolean two-element semiring: class [0]
  // absorbs, the other class is multiplicatively idempotent.
  QuotientSemiring split = quotient(fig1, kappa(fig1, by_names(fig1, {"0", "a"})));
  CHECK(split.quotient.size() == 2);
  CHECK(split.quotient.add_table() == OpTable(2, {0, 1, 1, 1}));
  CHECK(split.quotient.mul_table() == OpTable(2, {0, 0, 0, 1}));
  CHECK(split.quotient.element_names() == std::vector<std::string>{"[0]", "[b]"});
  CHECK(split.projection == std::vector<int>{0, 0, 1, 1, 1, 1});
}

TEST_CASE("zero classes") {
  FiniteSemiring fig2 = load_fixture("fig2_example35");
  Congruence theta(fig2, partition_by_names(fig2, {{"0"}, {"a", "b", "c", "1"}}));
  std::optional<ElementSubset> zc = zero_class(fig2, theta);
  REQUIRE(zc.has_value());
  CHECK(*zc == by_names(fig2, {"0"}));

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  std::optional<ElementSubset> zc1 = zero_class(fig1, kappa(fig1, by_names(fig1, {"0", "a"})));
  REQUIRE(zc1.has_value());
  CHECK(*zc1 == by_names(fig1, {"0", "a"}));

  std::optional<ElementSubset> universal =
      zero_class(fig1, Congruence(fig1, Partition::universal(6)));
  REQUIRE(universal.has_value());
  CHECK(*universal == ElementSubset::full(6));
}

TEST_CASE("the five-element lattice congruence is not induced by an ideal") {
  FiniteSemiring fig2 = load_fixture("fig2_example35");
  Congruence theta(fig2, partition_by_names(fig2, {{"0"}, {"a", "b", "c", "1"}}));
  CHECK_FALSE(is_k_congruence(fig2, theta));

  // kappa of its zero class is the identity, which theta exceeds: the pair
  // (a,b) is related by theta but not by kappa.
  Congruence k0 = kappa(fig2, by_names(fig2, {"0"}));
  CHECK(k0.partition() == Partition::identity(5));
  CHECK_FALSE(theta.partition().refines(k0.partition()));
  CHECK(theta.same_class(*fig2.index_of("a"), *fig2.index_of("b")));
  CHECK_FALSE(k0.same_class(*fig2.index_of("a"), *fig2.index_of("b")));
}

TEST_CASE("iota inverts kappa on k-ideals") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(iota(fig1, kappa(fig1, by_names(fig1, {"0", "a"}))) == by_names(fig1, {"0", "a"}));
  CHECK(iota(fig1, Congruence(fig1, Partition::universal(6))) == ElementSubset::full(6));

  FiniteSemiring r1 = load_fixture("r1");
  CHECK(iota(r1, Congruence(r1, Partition::identity(2))) == by_names(r1, {"0"}));

  FiniteSemiring fig2 = load_fixture("fig2_example35");
  Congruence theta(fig2, partition_by_names(fig2, {{"0"}, {"a", "b", "c", "1"}}));
  CHECK_THROWS_AS(iota(fig2, theta), PreconditionError);
}

TEST_CASE("congruence enumeration") {
  CHECK(enumerate_congruences(load_fixture("r0")).size() == 2);
  CHECK(enumerate_congruences(zn_ring(4)).size() == 3);
  CHECK(enumerate_congruences(load_fixture("fig1_example34")).size() == 15);
  CHECK_THROWS_AS(enumerate_congruences(zn_ring(10)), UnsupportedBoundError);

  FiniteSemiring fig2 = load_fixture("fig2_example35");
  std::vector<Congruence> congruences = enumerate_congruences(fig2);
  CHECK(congruences.size() == 8);
  Partition theta = partition_by_names(fig2, {{"0"}, {"a", "b", "c", "1"}});
  bool found = false;
  for (const Congruence& c : congruences) found = found || c.partition() == theta;
  CHECK(found);
}

TEST_CASE("partition scan visits every set partition exactly once") {
  // Both operations constant: every equivalence relation is compatible, so
  // the congruence count equals the Bell number.
  auto all_partitions_semiring = [](int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("e" + std::to_string(i));
    return FiniteSemiring("const" + std::to_string(k), std::move(names),
                          OpTable::from_fn(k, [](element_type, element_type) { return 0; }),
                          OpTable::from_fn(k, [](element_type, element_type) { return 0; }));
  };
  const int bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int k = 1; k <= 7; ++k) {
    std::vector<Congruence> congruences = enumerate_congruences(all_partitions_semiring(k));
    CHECK(congruences.size() == static_cast<std::size_t>(bell[k]));
    for (std::size_t i = 1; i < congruences.size(); ++i) {
      CHECK(congruences[i - 1].partition().labels() < congruences[i].partition().labels());
    }
  }
}

TEST_CASE("k-congruence enumeration") {
  CHECK(enumerate_k_congruences(load_fixture("r0")).size() == 2);
  CHECK(enumerate_k_congruences(load_fixture("fig2_example35")).size() == 5);
  CHECK(enumerate_k_congruences(load_fixture("fig1_example34")).size() == 6);

  // Zero-free: the identity relation is not induced by any ideal.
  FiniteSemiring maxmax = make_maxmax();
  std::vector<Congruence> ks = enumerate_k_congruences(maxmax);
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].partition() == Partition::universal(2));
}

TEST_CASE("bijection between k-ideals and k-congruences") {
  for (const FiniteSemiring& R : fixtures()) {
    BijectionReport report = verify_bijection(R);
    CHECK(report.ok());
    CHECK(report.k_ideal_count == static_cast<int>(enumerate_k_ideals(R).size()));
  }
  BijectionReport z6 = verify_bijection(zn_ring(6));
  CHECK(z6.ok());
  CHECK(z6.k_ideal_count == 4);
  CHECK(z6.k_congruence_count == 4);
}

TEST_CASE("kappa collides exactly on ideals that are not k-closed") {
  FiniteSemiring z4 = zn_ring(4);
  CHECK_FALSE(kappa_injectivity_probe(z4, enumerate_ideals(z4)).has_value());

  FiniteSemiring r0 = load_fixture("r0");
  CHECK_FALSE(kappa_injectivity_probe(r0, enumerate_ideals(r0)).has_value());

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  auto collision = kappa_injectivity_probe(fig1, enumerate_ideals(fig1));
  REQUIRE(collision.has_value());
  CHECK(collision->first == by_names(fig1, {"0", "d", "1"}));
  CHECK(collision->second == ElementSubset::full(6));
  CHECK(kappa(fig1, collision->first) == kappa(fig1, collision->second));
}

TEST_CASE("zero existence is equivalent to the identity being induced") {
  for (const FiniteSemiring& R : fixtures()) CHECK(has_zero_iff_identity_k(R));
  CHECK(has_zero_iff_identity_k(make_maxmax()));
  CHECK(has_zero_iff_identity_k(zn_ring(4)));
}

TEST_CASE("congruence simplicity") {
  FiniteSemiring r0 = load_fixture("r0");
  CHECK(is_congruence_simple(r0));
  CHECK(is_k_congruence_simple(r0));

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK_FALSE(is_congruence_simple(fig1));
  CHECK_FALSE(is_k_congruence_simple(fig1));

  CHECK_FALSE(is_congruence_simple(zn_ring(4)));
  CHECK_FALSE(is_k_congruence_simple(zn_ring(4)));

  // Zero-free with only the universal k-congruence: still k-congruence-simple.
  FiniteSemiring maxmax = make_maxmax();
  CHECK(is_congruence_simple(maxmax));
  CHECK(is_k_congruence_simple(maxmax));
}

TEST_CASE("kappa is blind to the difference between an ideal and its closure") {
  for (const FiniteSemiring& R : fixtures()) {
    for (const ElementSubset& A : enumerate_ideals(R)) {
      ElementSubset closure = k_closure(R, A);
      CHECK(kappa(R, A) == kappa(R, closure));
      std::optional<ElementSubset> zc = zero_class(R, kappa(R, A));
      REQUIRE(zc.has_value());
      CHECK(*zc == closure);
    }
  }
}

TEST_CASE("congruence-simple implies k-congruence-simple") {
  std::vector<FiniteSemiring> all = fixtures();
  all.push_back(make_maxmax());
  all.push_back(zn_ring(4));
  all.push_back(zn_ring(5));
  for (const FiniteSemiring& R : all) {
    if (is_congruence_simple(R)) CHECK(is_k_congruence_simple(R));
  }
}
