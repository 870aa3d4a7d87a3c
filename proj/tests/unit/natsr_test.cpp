#include <doctest.h>

#include <numeric>
#include <optional>
#include <vector>

#include "semiring/natsr.hpp"

using namespace semiring;

namespace {

// Brute-force combination enumerator, structurally unrelated to the DP.
bool contains_brute(const std::vector<long long>& gens, std::size_t idx, long long x) {
  if (x == 0) return true;
  if (idx == gens.size()) return false;
  for (long long used = 0; used <= x; used += gens[idx]) {
    if (contains_brute(gens, idx + 1, x - used)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("generator sets normalize to the minimal system") {
  CHECK(NatIdeal({2, 3}).generators() == std::vector<long long>{2, 3});
  CHECK(NatIdeal({3, 2}).generators() == std::vector<long long>{2, 3});
  CHECK(NatIdeal({2, 2}).generators() == std::vector<long long>{2});
  CHECK(NatIdeal({2, 3, 4}).generators() == std::vector<long long>{2, 3});
  CHECK(NatIdeal({2, 4}).generators() == std::vector<long long>{2});
  CHECK(NatIdeal({4, 6}).generators() == std::vector<long long>{4, 6});
  CHECK(NatIdeal({4, 6}).gcd() == 2);
  CHECK(NatIdeal({6, 10, 15}).generators() == std::vector<long long>{6, 10, 15});
  CHECK(NatIdeal({6, 10, 15}).gcd() == 1);

  CHECK_THROWS_AS(NatIdeal({}), PreconditionError);
  CHECK_THROWS_AS(NatIdeal({0, 2}), PreconditionError);
  CHECK_THROWS_AS(NatIdeal({-3}), PreconditionError);
  CHECK_THROWS_AS(NatIdeal({2'000'000}), RangeError);
}

TEST_CASE("membership in the two-three ideal") {
  NatIdeal sum({2, 3});
  CHECK(nat_contains(sum, 0));
  CHECK_FALSE(nat_contains(sum, 1));
  CHECK(nat_contains(sum, 2));
  CHECK(nat_contains(sum, 3));
  CHECK(nat_contains(sum, 6));
  CHECK(nat_contains(sum, 7));
}

TEST_CASE("membership agrees with the brute-force enumerator") {
  for (const std::vector<long long>& gens :
       {std::vector<long long>{2, 3}, {3, 5, 7}, {4, 6, 9}, {5}, {8, 9}}) {
    NatIdeal ideal(gens);
    for (long long x = 0; x <= 100; ++x) {
      CHECK(nat_contains(ideal, x) == contains_brute(gens, 0, x));
    }
  }
}

TEST_CASE("ideal sums unite generator sets") {
  NatIdeal two({2});
  NatIdeal three({3});
  CHECK(nat_sum(two, three).generators() == std::vector<long long>{2, 3});
  CHECK(nat_sum(two, two).generators() == std::vector<long long>{2});
  CHECK(nat_sum(NatIdeal({4}), NatIdeal({6})).generators() == std::vector<long long>{4, 6});
}

TEST_CASE("closure witnesses") {
  NatIdeal sum({2, 3});
  std::optional<long long> witness = nat_k_closure_witness(sum, 1);
  REQUIRE(witness.has_value());
  CHECK(*witness == 2);  // smallest witness: 1+2 = 3
  CHECK(nat_contains(sum, *witness));
  CHECK(nat_contains(sum, 1 + *witness));

  // Members witness themselves through a = 0.
  CHECK(nat_k_closure_witness(sum, 4) == 0);

  // Parity obstruction: nothing in (2) can absorb an odd offset.
  CHECK_FALSE(nat_k_closure_witness(NatIdeal({2}), 1).has_value());
  CHECK_FALSE(nat_in_k_closure(NatIdeal({2}), 1));
  CHECK(nat_in_k_closure(sum, 1));
}

TEST_CASE("extensivity of the closure") {
  for (const std::vector<long long>& gens : {std::vector<long long>{2, 3}, {4, 6}, {5, 7}}) {
    NatIdeal ideal(gens);
    for (long long x = 0; x <= 60; ++x) {
      if (nat_contains(ideal, x)) CHECK(nat_in_k_closure(ideal, x));
    }
  }
}

TEST_CASE("closure membership is divisibility by the generator gcd") {
  std::vector<std::vector<long long>> families;
  for (long long a = 2; a <= 9; ++a) {
    families.push_back({a});
    for (long long b = a + 1; b <= 9; ++b) families.push_back({a, b});
  }
  families.push_back({2, 3, 5});
  families.push_back({4, 6, 9});
  for (const auto& gens : families) {
    NatIdeal ideal(gens);
    long long g = ideal.gcd();
    for (long long x = 0; x <= 200; ++x) {
      CHECK(nat_in_k_closure(ideal, x) == (x % g == 0));
    }
  }
}

TEST_CASE("closure violations") {
  CHECK(nat_is_k_closed_upto(NatIdeal({2, 3}), 100) == 1);
  CHECK_FALSE(nat_is_k_closed_upto(NatIdeal({2}), 100).has_value());
  CHECK_FALSE(nat_is_k_closed_upto(NatIdeal({1}), 100).has_value());
  // gcd 2: the first even non-member is 2 itself.
  CHECK(nat_is_k_closed_upto(NatIdeal({4, 6}), 100) == 2);

  // Principal ideals are k-closed.
  for (long long n = 1; n <= 12; ++n) {
    CHECK_FALSE(nat_is_k_closed_upto(NatIdeal({n}), 200).has_value());
  }
}

TEST_CASE("operations reject values beyond the supported range") {
  NatIdeal sum({2, 3});
  CHECK_THROWS_AS(nat_contains(sum, 2'000'000), RangeError);
  CHECK_THROWS_AS(nat_k_closure_witness(sum, 2'000'000), RangeError);
  CHECK_THROWS_AS(nat_contains(sum, -1), PreconditionError);
}
