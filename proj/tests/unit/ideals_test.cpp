#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "semiring/ideals.hpp"
#include "semiring/specfmt.hpp"
#include "semiring/subset.hpp"
#include "test_helpers.hpp"

using namespace semiring;
using test_helpers::load_fixture;
using test_helpers::make_chain3;
using test_helpers::make_fig1;
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

// Direct transcription of the closure definition: x is in the closure when
// some a, b in A satisfy x+a = b.
ElementSubset k_closure_oracle(const FiniteSemiring& R, const ElementSubset& A) {
  ElementSubset out(R.size());
  for (element_type x = 0; x < R.size(); ++x) {
    for (element_type a : A.members()) {
      for (element_type b : A.members()) {
        if (R.add(x, a) == b) out.insert(x);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ideal membership") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(is_ideal(fig1, by_names(fig1, {"0", "a"})));
  CHECK(is_ideal(fig1, by_names(fig1, {"0"})));
  CHECK_FALSE(is_ideal(fig1, ElementSubset(fig1.size())));  // empty

  FiniteSemiring fig2 = load_fixture("fig2_example35");
  CHECK_FALSE(is_ideal(fig2, by_names(fig2, {"a"})));
  CHECK(is_ideal(fig2, ElementSubset::full(fig2.size())));
}

TEST_CASE("k_closure matches the definitional scan on every fixture ideal") {
  for (const FiniteSemiring& R : fixtures()) {
    for (const ElementSubset& A : enumerate_ideals(R)) {
      CHECK(k_closure(R, A) == k_closure_oracle(R, A));
    }
  }
}

TEST_CASE("k_closure fixed points") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(k_closure(fig1, by_names(fig1, {"0", "a"})) == by_names(fig1, {"0", "a"}));

  FiniteSemiring r0 = load_fixture("r0");
  CHECK(k_closure(r0, by_names(r0, {"0"})) == by_names(r0, {"0"}));

  FiniteSemiring fig2 = load_fixture("fig2_example35");
  CHECK(k_closure(fig2, by_names(fig2, {"0", "c"})) == by_names(fig2, {"0", "c"}));

  // An up-reaching ideal blows up to the whole carrier.
  CHECK(k_closure(fig1, by_names(fig1, {"0", "d", "1"})) == ElementSubset::full(6));
  CHECK_FALSE(is_k_ideal(fig1, by_names(fig1, {"0", "d", "1"})));

  CHECK_THROWS_AS(k_closure(fig1, by_names(fig1, {"a"})), PreconditionError);
}

TEST_CASE("k_ideal membership") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(is_k_ideal(fig1, by_names(fig1, {"0", "a"})));
  CHECK(is_k_ideal(fig1, ElementSubset::full(6)));
  CHECK(is_k_ideal(fig1, by_names(fig1, {"0"})));
}

TEST_CASE("ideal enumeration") {
  FiniteSemiring r0 = load_fixture("r0");
  CHECK(enumerate_ideals(r0).size() == 2);

  FiniteSemiring fig2 = load_fixture("fig2_example35");
  std::vector<ElementSubset> fig2_ideals = enumerate_ideals(fig2);
  CHECK(fig2_ideals.size() == 5);
  std::vector<std::string> rendered;
  for (const ElementSubset& A : fig2_ideals) rendered.push_back(A.to_string(fig2));
  CHECK(rendered == std::vector<std::string>{"{0}", "{0,c}", "{0,c,a}", "{0,c,b}",
                                             "{0,c,a,b,1}"});

  FiniteSemiring z4 = zn_ring(4);
  std::vector<ElementSubset> z4_ideals = enumerate_ideals(z4);
  CHECK(z4_ideals.size() == 3);
  CHECK(z4_ideals[0] == by_names(z4, {"0"}));
  CHECK(z4_ideals[1] == by_names(z4, {"0", "2"}));
  CHECK(z4_ideals[2] == ElementSubset::full(4));

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(enumerate_ideals(fig1).size() == 13);
}

TEST_CASE("k-ideal enumeration") {
  FiniteSemiring z4 = zn_ring(4);
  CHECK(enumerate_k_ideals(z4).size() == 3);  // every ring ideal is k-closed

  FiniteSemiring r1 = load_fixture("r1");
  CHECK(enumerate_k_ideals(r1).size() == 2);

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  std::vector<ElementSubset> k_ideals = enumerate_k_ideals(fig1);
  CHECK(k_ideals.size() == 6);
  CHECK(std::find(k_ideals.begin(), k_ideals.end(), by_names(fig1, {"0", "a"})) !=
        k_ideals.end());
}

TEST_CASE("ideal sums") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  ElementSubset A = by_names(fig1, {"0", "a"});
  CHECK(ideal_sum(fig1, A, A) == A);

  FiniteSemiring z6 = zn_ring(6);
  CHECK(ideal_sum(z6, by_names(z6, {"0", "2", "4"}), by_names(z6, {"0", "3"})) ==
        ElementSubset::full(6));

  CHECK_THROWS_AS(ideal_sum(fig1, A, by_names(fig1, {"a"})), PreconditionError);

  // With idempotent addition, summing an ideal with itself changes nothing.
  for (const FiniteSemiring& R : fixtures()) {
    if (!is_additively_idempotent(R)) continue;
    for (const ElementSubset& I : enumerate_ideals(R)) {
      CHECK(ideal_sum(R, I, I) == I);
    }
  }
}

TEST_CASE("generated ideal is the least ideal containing the seed") {
  FiniteSemiring fig1 = load_fixture("fig1_example34");
  CHECK(generated_ideal(fig1, by_names(fig1, {"0"})) == by_names(fig1, {"0"}));
  CHECK(generated_ideal(fig1, by_names(fig1, {"d"})) == by_names(fig1, {"0", "d"}));

  FiniteSemiring r1 = load_fixture("r1");
  CHECK(generated_ideal(r1, by_names(r1, {"1"})) == ElementSubset::full(2));

  CHECK_THROWS_AS(generated_ideal(fig1, ElementSubset(6)), PreconditionError);

  // Cross-check minimality against the enumeration: the generated ideal is
  // the intersection of all ideals containing the seed.
  for (const FiniteSemiring& R : fixtures()) {
    for (element_type seed = 0; seed < R.size(); ++seed) {
      ElementSubset s = ElementSubset::of(R.size(), {seed});
      ElementSubset expected = ElementSubset::full(R.size());
      for (const ElementSubset& I : enumerate_ideals(R)) {
        if (s.subset_of(I)) expected = expected & I;
      }
      CHECK(generated_ideal(R, s) == expected);
    }
  }
}

TEST_CASE("down sets") {
  FiniteSemiring fig2 = load_fixture("fig2_example35");
  CHECK(down_set(fig2, *fig2.index_of("c")) == by_names(fig2, {"0", "c"}));
  CHECK(down_set(fig2, *fig2.index_of("0")) == by_names(fig2, {"0"}));
  CHECK(down_set(fig2, *fig2.index_of("1")) == ElementSubset::full(5));
}

TEST_CASE("nontrivial k-ideal witnesses for inclines of order three or more") {
  FiniteSemiring fig2 = load_fixture("fig2_example35");
  std::optional<ElementSubset> witness = find_nontrivial_k_ideal(fig2);
  REQUIRE(witness.has_value());
  CHECK(*witness == by_names(fig2, {"0", "c"}));

  FiniteSemiring fig1 = load_fixture("fig1_example34");
  std::optional<ElementSubset> w1 = find_nontrivial_k_ideal(fig1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == by_names(fig1, {"0", "a"}));

  FiniteSemiring chain = make_chain3();
  std::optional<ElementSubset> wc = find_nontrivial_k_ideal(chain);
  REQUIRE(wc.has_value());
  CHECK(*wc == by_names(chain, {"0", "m"}));

  CHECK_FALSE(find_nontrivial_k_ideal(load_fixture("r0")).has_value());
  CHECK_FALSE(find_nontrivial_k_ideal(load_fixture("r1")).has_value());

  CHECK_THROWS_AS(find_nontrivial_k_ideal(make_maxmax()), PreconditionError);
}

TEST_CASE("simplicity predicates") {
  CHECK(is_k_simple(load_fixture("r0")));
  CHECK(is_k_simple(load_fixture("r1")));
  CHECK_FALSE(is_k_simple(load_fixture("fig1_example34")));
  CHECK_FALSE(is_k_simple(zn_ring(4)));

  CHECK(is_ideal_free(load_fixture("r0")));
  CHECK_FALSE(is_ideal_free(load_fixture("fig1_example34")));
  CHECK(is_ideal_free(zn_ring(2)));

  // max/max has the proper ideal {2}, but it is not k-closed, so the
  // semiring is k-simple without being ideal-free.
  FiniteSemiring maxmax = make_maxmax();
  CHECK_FALSE(is_ideal_free(maxmax));
  CHECK(is_k_simple(maxmax));
}

TEST_CASE("enumeration rejects carriers beyond the supported scan sizes") {
  // A long chain with max addition and min multiplication is a valid
  // semiring of any size.
  auto chain = [](int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
    return FiniteSemiring(
        "chain" + std::to_string(k), std::move(names),
        OpTable::from_fn(k, [](element_type i, element_type j) { return std::max(i, j); }),
        OpTable::from_fn(k, [](element_type i, element_type j) { return std::min(i, j); }));
  };
  CHECK_THROWS_AS(enumerate_ideals(chain(17)), UnsupportedBoundError);
  CHECK_NOTHROW(enumerate_ideals(chain(16)));
}

TEST_CASE("closure laws hold on every enumerated ideal") {
  for (const FiniteSemiring& R : fixtures()) {
    std::vector<ElementSubset> ideals = enumerate_ideals(R);
    std::vector<ElementSubset> k_ideals = enumerate_k_ideals(R);
    CHECK(!ideals.empty());
    CHECK(std::find(ideals.begin(), ideals.end(), ElementSubset::full(R.size())) != ideals.end());
    CHECK(std::find(k_ideals.begin(), k_ideals.end(), ElementSubset::full(R.size())) !=
          k_ideals.end());
    for (const ElementSubset& A : k_ideals) {
      CHECK(std::find(ideals.begin(), ideals.end(), A) != ideals.end());
    }
    for (const ElementSubset& A : ideals) {
      ElementSubset closure = k_closure(R, A);
      CHECK(A.subset_of(closure));                    // extensive
      CHECK(k_closure(R, closure) == closure);        // idempotent
      CHECK(is_k_ideal(R, closure));                  // always a k-ideal
      for (const ElementSubset& B : ideals) {
        if (A.subset_of(B)) CHECK(closure.subset_of(k_closure(R, B)));  // monotone
      }
    }
  }
}
