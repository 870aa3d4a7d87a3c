#pragma once

// Named verification items: each check replays one published statement
// about k-ideals and k-congruences (a lemma, theorem, or worked example)
// by exhaustive desk-scale computation over the shipped fixtures and the
// enumerated small semirings. The CLI `check-paper` command and the
// acceptance suite both run this registry, so CI and a human exercise the
// same code.

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semiring/classify.hpp"
#include "semiring/congruence.hpp"
#include "semiring/core.hpp"
#include "semiring/ideals.hpp"
#include "semiring/natsr.hpp"
#include "semiring/specfmt.hpp"
#include "semiring/subset.hpp"

namespace semiring {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline FiniteSemiring load_semiring_file(const std::string& path) {
  return parse_document(read_text_file(path));
}

namespace checks {

inline FiniteSemiring fixture(const std::string& dir, const std::string& name) {
  return load_semiring_file(dir + "/" + name + ".sr");
}

inline std::vector<FiniteSemiring> all_fixtures(const std::string& dir) {
  std::vector<FiniteSemiring> out;
  out.push_back(fixture(dir, "fig1_example34"));
  out.push_back(fixture(dir, "fig2_example35"));
  out.push_back(fixture(dir, "r0"));
  out.push_back(fixture(dir, "r1"));
  return out;
}

// Two-element zero-free semiring with max as both operations; its identity
// relation is not induced by any ideal.
inline FiniteSemiring max_max_semiring() {
  return FiniteSemiring("maxmax2", {"1", "2"}, OpTable(2, {0, 1, 1, 1}), OpTable(2, {0, 1, 1, 1}));
}

inline bool is_k_congruence_by_ideal_scan(const FiniteSemiring& R, const Congruence& theta) {
  for (const ElementSubset& A : enumerate_ideals(R)) {
    if (kappa(R, A).partition() == theta.partition()) return true;
  }
  return false;
}

inline bool nat_contains_brute(const std::vector<long long>& gens, std::size_t idx, long long x) {
  if (x == 0) return true;
  if (idx == gens.size()) return false;
  for (long long used = 0; used <= x; used += gens[idx]) {
    if (nat_contains_brute(gens, idx + 1, x - used)) return true;
  }
  return false;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline CheckResult check_section_2(const std::string& dir) {
  int checked = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    std::vector<ElementSubset> ideals = enumerate_ideals(R);
    for (const ElementSubset& A : ideals) {
      ElementSubset closure = k_closure(R, A);
      if (!A.subset_of(closure)) return {"section-2", false, "closure is not extensive"};
      if (k_closure(R, closure) != closure) return {"section-2", false, "closure is not idempotent"};
      if (!is_k_ideal(R, closure)) return {"section-2", false, "closure is not a k-ideal"};
      if (kappa(R, A) != kappa(R, closure)) {
        return {"section-2", false, "kappa differs between an ideal and its closure"};
      }
      std::optional<ElementSubset> zc = zero_class(R, kappa(R, A));
      if (!zc || *zc != closure) {
        return {"section-2", false, "quotient zero class is not the closure"};
      }
      for (const ElementSubset& B : ideals) {
        if (A.subset_of(B) && !closure.subset_of(k_closure(R, B))) {
          return {"section-2", false, "closure is not monotone"};
        }
      }
      ++checked;
    }
  }
  return {"section-2", true, std::to_string(checked) + " ideals checked"};
}

inline CheckResult check_lemma_3_1(const std::string& dir) {
  int with_zero = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    for (const Congruence& theta : enumerate_congruences(R)) {
      std::optional<ElementSubset> zc = zero_class(R, theta);
      if (!zc) continue;
      ++with_zero;
      if (!is_k_ideal(R, *zc)) {
        return {"lemma-3.1", false, "zero class " + zc->to_string(R) + " is not a k-ideal"};
      }
    }
  }
  return {"lemma-3.1", true, std::to_string(with_zero) + " zero classes checked"};
}

inline CheckResult check_theorem_3_3(const std::string& dir) {
  int congruences = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    if (R.size() > 6) return {"theorem-3.3", false, "fixture above order 6"};
    for (const Congruence& theta : enumerate_congruences(R)) {
      ++congruences;
      bool c1 = is_k_congruence_by_ideal_scan(R, theta);
      std::optional<ElementSubset> zc = zero_class(R, theta);
      bool c2 = zc && theta.partition().refines(kappa(R, *zc).partition());
      bool c3 = zc && theta.partition() == kappa(R, *zc).partition();
      bool impl = is_k_congruence(R, theta);
      if (c1 != c2 || c2 != c3 || c3 != impl) {
        return {"theorem-3.3", false,
                "criteria disagree on " + theta.partition().to_string(R) + " in " + R.name()};
      }
    }
  }
  return {"theorem-3.3", true, std::to_string(congruences) + " congruences checked"};
}

inline CheckResult check_example_3_4(const std::string& dir) {
  FiniteSemiring R = fixture(dir, "fig1_example34");
  if (R.size() != 6) return {"example-3.4", false, "fixture has wrong order"};
  auto idx = [&](const char* name) {
    auto i = R.index_of(name);
    if (!i) throw Error(std::string("missing element ") + name);
    return *i;
  };
  ElementSubset A = ElementSubset::of(R.size(), {idx("0"), idx("a")});
  if (!is_ideal(R, A)) return {"example-3.4", false, "{0,a} is not an ideal"};
  Congruence kA = kappa(R, A);
  ElementSubset big(R.size());
  for (element_type e = 0; e < R.size(); ++e) {
    if (!A.contains(e)) big.insert(e);
  }
  Partition expected = Partition::from_classes(R.size(), {A.members(), big.members()});
  if (kA.partition() != expected) {
    return {"example-3.4", false, "kappa classes are " + kA.partition().to_string(R)};
  }
  if (!is_k_congruence(R, kA)) return {"example-3.4", false, "kappa_A is not a k-congruence"};
  return {"example-3.4", true, "classes " + kA.partition().to_string(R)};
}

inline CheckResult check_example_3_5(const std::string& dir) {
  FiniteSemiring R = fixture(dir, "fig2_example35");
  if (R.size() != 5) return {"example-3.5", false, "fixture has wrong order"};
  auto idx = [&](const char* name) { return *R.index_of(name); };
  element_type zero = idx("0"), a = idx("a"), b = idx("b");
  std::vector<element_type> rest;
  for (element_type e = 0; e < R.size(); ++e) {
    if (e != zero) rest.push_back(e);
  }
  Partition theta_p = Partition::from_classes(R.size(), {{zero}, rest});
  if (!is_congruence(R, theta_p)) return {"example-3.5", false, "theta is not a congruence"};
  Congruence theta(R, theta_p);
  std::optional<ElementSubset> zc = zero_class(R, theta);
  if (!zc || *zc != ElementSubset::of(R.size(), {zero})) {
    return {"example-3.5", false, "zero class of the quotient is not {0}"};
  }
  if (is_k_congruence(R, theta)) return {"example-3.5", false, "theta reported as a k-congruence"};
  Congruence kappa_zero = kappa(R, *zc);
  if (theta.partition().refines(kappa_zero.partition())) {
    return {"example-3.5", false, "theta is contained in kappa of the zero class"};
  }
  // The classic witness pair: a and b are theta-related but not
  // kappa-related.
  if (!theta.same_class(a, b) || kappa_zero.same_class(a, b)) {
    return {"example-3.5", false, "(a,b) fails as a witness pair"};
  }
  return {"example-3.5", true, "theta " + theta.partition().to_string(R) + " is not a k-congruence"};
}

inline CheckResult check_lemma_3_6(const std::string& dir) {
  int k_congruences = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    for (const Congruence& theta : enumerate_k_congruences(R)) {
      ++k_congruences;
      if (kappa(R, iota(R, theta)).partition() != theta.partition()) {
        return {"lemma-3.6", false, "round trip failed in " + R.name()};
      }
    }
  }
  return {"lemma-3.6", true, std::to_string(k_congruences) + " k-congruences round-tripped"};
}

inline CheckResult check_lemma_3_7(const std::string& dir) {
  int ideals = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    for (const ElementSubset& A : enumerate_ideals(R)) {
      ++ideals;
      ElementSubset back = iota(R, kappa(R, A));
      if (is_k_ideal(R, A) != (back == A)) {
        return {"lemma-3.7", false, "k-ideal criterion failed for " + A.to_string(R)};
      }
    }
  }
  return {"lemma-3.7", true, std::to_string(ideals) + " ideals round-tripped"};
}

inline CheckResult check_theorem_3_8(const std::string& dir) {
  std::string counts;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    BijectionReport report = verify_bijection(R);
    if (!report.ok()) return {"theorem-3.8", false, "bijection check failed for " + R.name()};
    // Part (2): kappa collides on any family that exceeds the k-ideals.
    std::vector<ElementSubset> ideals = enumerate_ideals(R);
    std::vector<ElementSubset> k_ideals = enumerate_k_ideals(R);
    auto collision = kappa_injectivity_probe(R, ideals);
    if (collision.has_value() != (ideals.size() != k_ideals.size())) {
      return {"theorem-3.8", false, "injectivity probe inconsistent for " + R.name()};
    }
    if (!counts.empty()) counts += ", ";
    counts += R.name() + ":" + std::to_string(report.k_ideal_count);
  }
  return {"theorem-3.8", true, "|KI|=|KC| with identity round trips (" + counts + ")"};
}

inline CheckResult check_remark_3_9(const std::string& dir) {
  int relations = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    if (!is_additively_idempotent(R)) continue;
    const int k = R.size();
    for (const ElementSubset& A : enumerate_ideals(R)) {
      ++relations;
      for (element_type x = 0; x < k; ++x) {
        for (element_type y = 0; y < k; ++y) {
          bool two = false;
          for (element_type a : A.members()) {
            for (element_type b : A.members()) {
              if (R.add(x, a) == R.add(y, b)) two = true;
            }
          }
          bool one = false;
          for (element_type c : A.members()) {
            if (R.add(x, c) == R.add(y, c)) one = true;
          }
          if (two != one) {
            return {"remark-3.9", false, "encodings disagree for " + A.to_string(R)};
          }
        }
      }
    }
  }
  return {"remark-3.9", true, std::to_string(relations) + " relations compared"};
}

inline CheckResult check_remark_4_1(const std::string& dir) {
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    Congruence universal = kappa(R, ElementSubset::full(R.size()));
    if (universal.partition() != Partition::universal(R.size())) {
      return {"remark-4.1", false, "kappa_R is not the universal relation in " + R.name()};
    }
    if (!is_k_congruence(R, universal)) {
      return {"remark-4.1", false, "universal relation is not a k-congruence in " + R.name()};
    }
  }
  FiniteSemiring noz = max_max_semiring();
  Congruence id_noz(noz, Partition::identity(noz.size()));
  if (is_k_congruence(noz, id_noz)) {
    return {"remark-4.1", false, "identity relation unexpectedly a k-congruence without a zero"};
  }
  return {"remark-4.1", true, "universal always induced; identity not necessarily"};
}

inline CheckResult check_theorem_4_2(const std::string& dir) {
  std::vector<FiniteSemiring> all = all_fixtures(dir);
  all.push_back(max_max_semiring());
  for (int order = 2; order <= 3; ++order) {
    for (FiniteSemiring& R : enumerate_semirings(order, ConstraintSet{})) all.push_back(std::move(R));
  }
  for (const FiniteSemiring& R : all) {
    if (!has_zero_iff_identity_k(R)) {
      return {"theorem-4.2", false, "biconditional failed for " + R.name()};
    }
    if (std::optional<element_type> zero = find_zero(R)) {
      Congruence k0 = kappa(R, ElementSubset::of(R.size(), {*zero}));
      if (k0.partition() != Partition::identity(R.size())) {
        return {"theorem-4.2", false, "kappa of {0} is not the identity in " + R.name()};
      }
    }
  }
  return {"theorem-4.2", true, std::to_string(all.size()) + " semirings checked"};
}

inline CheckResult check_theorem_4_4(const std::string& dir) {
  std::vector<FiniteSemiring> all = all_fixtures(dir);
  all.push_back(max_max_semiring());
  for (int order = 2; order <= 3; ++order) {
    for (FiniteSemiring& R : enumerate_semirings(order, ConstraintSet{})) all.push_back(std::move(R));
  }
  for (const FiniteSemiring& R : all) {
    if (is_k_simple(R) != is_k_congruence_simple(R)) {
      return {"theorem-4.4", false, "equivalence failed for " + R.name()};
    }
  }
  return {"theorem-4.4", true, std::to_string(all.size()) + " semirings checked"};
}

inline CheckResult check_corollary_4_5(const std::string&) {
  std::string summary;
  for (int n = 2; n <= 8; ++n) {
    RingSimplicityReport report = ring_simplicity_conditions(zn_ring(n), n);
    if (!report.all_agree()) {
      return {"corollary-4.5", false, "conditions disagree for n=" + std::to_string(n)};
    }
    if (report.k_simple != is_prime(n)) {
      return {"corollary-4.5", false,
              "simplicity does not match primality for n=" + std::to_string(n)};
    }
    if (!summary.empty()) summary += " ";
    summary += std::to_string(n) + (report.k_simple ? ":simple" : ":not");
  }
  return {"corollary-4.5", true, summary};
}

inline CheckResult check_lemma_5_1(const std::string& dir) {
  int inclines = 0;
  std::vector<FiniteSemiring> all;
  for (int order = 1; order <= 4; ++order) {
    for (FiniteSemiring& R : enumerate_inclines(order)) all.push_back(std::move(R));
  }
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    if (is_incline(R)) all.push_back(R);
  }
  for (const FiniteSemiring& R : all) {
    ++inclines;
    Extremals ex = extremal_elements(R);
    if (!(ex.greatest && ex.least && ex.maximal.size() == 1 && ex.minimal.size() == 1)) {
      return {"lemma-5.1", false, "incline " + R.name() + " lacks greatest/least"};
    }
  }
  return {"lemma-5.1", true, std::to_string(inclines) + " inclines checked"};
}

inline CheckResult check_lemma_5_2(const std::string& dir) {
  int inclines = 0;
  std::vector<FiniteSemiring> all;
  for (int order = 3; order <= 4; ++order) {
    for (FiniteSemiring& R : enumerate_inclines(order)) all.push_back(std::move(R));
  }
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    if (is_incline(R) && R.size() >= 3) all.push_back(R);
  }
  for (const FiniteSemiring& R : all) {
    ++inclines;
    std::optional<ElementSubset> witness = find_nontrivial_k_ideal(R);
    bool witness_ok = witness && is_k_ideal(R, *witness) && witness->count() < R.size();
    if (witness_ok) {
      std::optional<element_type> zero = find_zero(R);
      if (zero && *witness == ElementSubset::of(R.size(), {*zero})) witness_ok = false;
    }
    if (!witness_ok || is_k_simple(R)) {
      return {"lemma-5.2", false, "no nontrivial k-ideal witness for " + R.name()};
    }
  }
  return {"lemma-5.2", true, std::to_string(inclines) + " inclines of order >= 3 witnessed"};
}

inline CheckResult check_example_5_3(const std::string& dir) {
  std::vector<FiniteSemiring> inclines = enumerate_inclines(2);
  if (inclines.size() != 2) {
    return {"example-5.3", false, std::to_string(inclines.size()) + " two-element inclines"};
  }
  CanonicalKey k0 = canonical_key(inclines[0]);
  CanonicalKey k1 = canonical_key(inclines[1]);
  CanonicalKey kr0 = canonical_key(r0());
  CanonicalKey kr1 = canonical_key(r1());
  bool keys_match = (k0 == kr0 && k1 == kr1) || (k0 == kr1 && k1 == kr0);
  if (!keys_match) return {"example-5.3", false, "canonical tables do not match r0/r1"};
  for (const FiniteSemiring& two_incline : {fixture(dir, "r0"), fixture(dir, "r1")}) {
    if (!is_incline(two_incline)) return {"example-5.3", false, "fixture is not an incline"};
    if (!is_k_simple(two_incline) || !is_congruence_simple(two_incline) ||
        !is_ideal_free(two_incline)) {
      return {"example-5.3", false, two_incline.name() + " is not simple/ideal-free"};
    }
  }
  return {"example-5.3", true, "exactly two 2-element inclines, both congruence-simple and ideal-free"};
}

inline CheckResult check_theorem_5_4(const std::string&) {
  InclineSurveyReport report = incline_simplicity_survey(4);
  if (!report.ok()) return {"theorem-5.4", false, "survey failed"};
  std::string summary;
  for (const auto& row : report.rows) {
    if (!summary.empty()) summary += ", ";
    summary += "order " + std::to_string(row.order) + ": " + std::to_string(row.incline_count) +
               " inclines / " + std::to_string(row.k_simple_count) + " k-simple";
  }
  return {"theorem-5.4", true, summary};
}

inline CheckResult check_example_6_1(const std::string&) {
  NatIdeal two({2});
  NatIdeal three({3});
  if (nat_is_k_closed_upto(two, 100) || nat_is_k_closed_upto(three, 100)) {
    return {"example-6.1", false, "(2) or (3) reported a closure violation"};
  }
  NatIdeal sum = nat_sum(two, three);
  if (sum.generators() != std::vector<long long>{2, 3}) {
    return {"example-6.1", false, "(2)+(3) has unexpected generators"};
  }
  if (!nat_contains(sum, 6) || !nat_contains(sum, 7) || nat_contains(sum, 1)) {
    return {"example-6.1", false, "membership of 6/7/1 in (2)+(3) is wrong"};
  }
  std::optional<long long> witness = nat_k_closure_witness(sum, 1);
  if (!witness || !nat_contains(sum, *witness) || !nat_contains(sum, 1 + *witness)) {
    return {"example-6.1", false, "no valid closure witness for 1"};
  }
  // The textbook witness: 6 and 7 both lie in the sum and 1+6 = 7.
  if (!nat_contains(sum, 6) || !nat_contains(sum, 1 + 6)) {
    return {"example-6.1", false, "witness pair (6,7) fails"};
  }
  std::optional<long long> violation = nat_is_k_closed_upto(sum, 100);
  if (!violation || *violation != 1) {
    return {"example-6.1", false, "smallest closure violation is not 1"};
  }
  return {"example-6.1", true, "(2)+(3) is not k-closed: 1+6=7 with 1 outside"};
}

inline CheckResult check_oracle_cross_checks(const std::string& dir) {
  int congruences = 0;
  for (const FiniteSemiring& R : all_fixtures(dir)) {
    if (R.size() > 5) continue;
    for (const Congruence& theta : enumerate_congruences(R)) {
      ++congruences;
      if (is_k_congruence(R, theta) != is_k_congruence_by_ideal_scan(R, theta)) {
        return {"oracle-cross-checks", false, "k-congruence criteria disagree in " + R.name()};
      }
    }
  }
  int memberships = 0;
  std::vector<std::vector<long long>> generator_sets;
  for (long long a = 2; a <= 9; ++a) {
    generator_sets.push_back({a});
    for (long long b = a + 1; b <= 9; ++b) {
      generator_sets.push_back({a, b});
      for (long long c = b + 1; c <= 9; ++c) generator_sets.push_back({a, b, c});
    }
  }
  for (const auto& gens : generator_sets) {
    NatIdeal ideal(gens);
    for (long long x = 0; x <= 200; ++x) {
      ++memberships;
      if (nat_contains(ideal, x) != nat_contains_brute(gens, 0, x)) {
        return {"oracle-cross-checks", false, "membership oracle disagrees at x=" + std::to_string(x)};
      }
    }
  }
  return {"oracle-cross-checks", true,
          std::to_string(congruences) + " congruences, " + std::to_string(memberships) +
              " memberships cross-checked"};
}

}  // namespace checks

struct PaperCheck {
  std::string id;
  std::function<CheckResult(const std::string&)> run;
};

inline const std::vector<PaperCheck>& paper_checks() {
  static const std::vector<PaperCheck> registry = {
      {"section-2", checks::check_section_2},
      {"lemma-3.1", checks::check_lemma_3_1},
      {"theorem-3.3", checks::check_theorem_3_3},
      {"example-3.4", checks::check_example_3_4},
      {"example-3.5", checks::check_example_3_5},
      {"lemma-3.6", checks::check_lemma_3_6},
      {"lemma-3.7", checks::check_lemma_3_7},
      {"theorem-3.8", checks::check_theorem_3_8},
      {"remark-3.9", checks::check_remark_3_9},
      {"remark-4.1", checks::check_remark_4_1},
      {"theorem-4.2", checks::check_theorem_4_2},
      {"theorem-4.4", checks::check_theorem_4_4},
      {"corollary-4.5", checks::check_corollary_4_5},
      {"lemma-5.1", checks::check_lemma_5_1},
      {"lemma-5.2", checks::check_lemma_5_2},
      {"example-5.3", checks::check_example_5_3},
      {"theorem-5.4", checks::check_theorem_5_4},
      {"example-6.1", checks::check_example_6_1},
      {"oracle-cross-checks", checks::check_oracle_cross_checks},
  };
  return registry;
}

/// Runs one named check; any exception (missing or corrupt fixture, parse
/// error, failed validation) becomes a FAIL for that item rather than an
/// abort.
inline CheckResult run_paper_check(const PaperCheck& check, const std::string& fixtures_dir) {
  try {
    return check.run(fixtures_dir);
  } catch (const std::exception& e) {
    return {check.id, false, std::string("error: ") + e.what()};
  }
}

inline std::vector<CheckResult> run_all_paper_checks(const std::string& fixtures_dir) {
  std::vector<CheckResult> results;
  for (const PaperCheck& check : paper_checks()) {
    results.push_back(run_paper_check(check, fixtures_dir));
  }
  return results;
}

}  // namespace semiring
