#pragma once

// Aggregated per-semiring analysis (ideals, congruences, bijection check,
// simplicity verdicts) and the text/JSON renderings of analysis and census
// reports. Structured output is deterministic: identical inputs produce
// byte-identical strings.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiring/classify.hpp"
#include "semiring/congruence.hpp"
#include "semiring/core.hpp"
#include "semiring/ideals.hpp"

namespace semiring {

inline constexpr int report_format_version = 1;

struct AnalysisReport {
  std::string name;
  int order = 0;
  std::optional<std::string> zero;
  std::optional<std::string> identity;
  bool additively_idempotent = false;
  bool commutative_mul = false;
  bool incline = false;
  bool single_element = false;

  struct IdealEntry {
    std::vector<std::string> elements;
    bool k_ideal = false;
  };
  std::vector<IdealEntry> ideals;

  // Congruence data is present only when the order admits the partition
  // scan (order <= 9).
  bool congruences_enumerated = false;
  struct CongruenceEntry {
    std::vector<std::vector<std::string>> classes;
    bool k_congruence = false;
  };
  std::vector<CongruenceEntry> congruences;
  std::optional<BijectionReport> bijection;

  bool k_simple = false;
  bool ideal_free = false;
  std::optional<bool> congruence_simple;
  std::optional<bool> k_congruence_simple;
};

inline AnalysisReport analyze(const FiniteSemiring& R) {
  AnalysisReport report;
  report.name = R.name();
  report.order = R.size();
  if (auto zero = find_zero(R)) report.zero = R.element_name(*zero);
  if (auto identity = find_identity(R)) report.identity = R.element_name(*identity);
  report.additively_idempotent = is_additively_idempotent(R);
  report.commutative_mul = is_commutative_mul(R);
  report.incline = is_incline(R);
  report.single_element = R.single_element();

  for (const ElementSubset& A : enumerate_ideals(R)) {
    AnalysisReport::IdealEntry entry;
    for (element_type e : A.members()) entry.elements.push_back(R.element_name(e));
    entry.k_ideal = is_k_ideal(R, A);
    report.ideals.push_back(std::move(entry));
  }
  report.k_simple = is_k_simple(R);
  report.ideal_free = is_ideal_free(R);

  if (R.size() <= 9) {
    report.congruences_enumerated = true;
    int k_count = 0;
    for (const Congruence& theta : enumerate_congruences(R)) {
      AnalysisReport::CongruenceEntry entry;
      for (const ElementSubset& cls : theta.partition().classes()) {
        std::vector<std::string> names;
        for (element_type e : cls.members()) names.push_back(R.element_name(e));
        entry.classes.push_back(std::move(names));
      }
      entry.k_congruence = is_k_congruence(R, theta);
      if (entry.k_congruence) ++k_count;
      report.congruences.push_back(std::move(entry));
    }
    report.bijection = verify_bijection(R);
    assert(report.bijection->k_congruence_count == k_count);
#ifndef NDEBUG
    int k_ideal_count = 0;
    for (const auto& entry : report.ideals) k_ideal_count += entry.k_ideal ? 1 : 0;
    assert(report.bijection->k_ideal_count == k_ideal_count);
#endif
    report.congruence_simple = is_congruence_simple(R);
    report.k_congruence_simple = is_k_congruence_simple(R);
  }
  return report;
}

namespace detail {

inline std::string join_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  out += '}';
  return out;
}

}  // namespace detail

inline std::string to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "semiring " << report.name << " (order " << report.order << ")\n";
  out << "zero: " << (report.zero ? *report.zero : "(none)") << '\n';
  out << "identity: " << (report.identity ? *report.identity : "(none)") << '\n';
  out << "flags:";
  if (report.additively_idempotent) out << " additively-idempotent";
  if (report.commutative_mul) out << " commutative-mul";
  if (report.incline) out << " incline";
  if (report.single_element) out << " single-element";
  out << '\n';
  out << "ideals (" << report.ideals.size() << "):\n";
  for (const auto& entry : report.ideals) {
    out << "  " << detail::join_names(entry.elements) << (entry.k_ideal ? "  k-ideal" : "") << '\n';
  }
  if (report.congruences_enumerated) {
    out << "congruences (" << report.congruences.size() << "):\n";
    for (const auto& entry : report.congruences) {
      out << "  ";
      for (std::size_t i = 0; i < entry.classes.size(); ++i) {
        if (i) out << '|';
        out << detail::join_names(entry.classes[i]);
      }
      out << (entry.k_congruence ? "  k-congruence" : "") << '\n';
    }
    const BijectionReport& b = *report.bijection;
    out << "bijection: |KI|=" << b.k_ideal_count << " |KC|=" << b.k_congruence_count
        << (b.ok() ? " ok" : " FAILED") << '\n';
  } else {
    out << "congruences: not enumerated (order > 9)\n";
  }
  out << "verdicts: k-simple=" << (report.k_simple ? "yes" : "no")
      << " ideal-free=" << (report.ideal_free ? "yes" : "no");
  if (report.congruence_simple) {
    out << " congruence-simple=" << (*report.congruence_simple ? "yes" : "no");
  }
  if (report.k_congruence_simple) {
    out << " k-congruence-simple=" << (*report.k_congruence_simple ? "yes" : "no");
  }
  out << '\n';
  return out.str();
}

inline nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["version"] = report_format_version;
  j["name"] = report.name;
  j["order"] = report.order;
  j["zero"] = report.zero ? nlohmann::json(*report.zero) : nlohmann::json(nullptr);
  j["identity"] = report.identity ? nlohmann::json(*report.identity) : nlohmann::json(nullptr);
  j["flags"] = {
      {"additively_idempotent", report.additively_idempotent},
      {"commutative_mul", report.commutative_mul},
      {"incline", report.incline},
      {"single_element", report.single_element},
  };
  j["ideals"] = nlohmann::json::array();
  for (const auto& entry : report.ideals) {
    j["ideals"].push_back({{"elements", entry.elements}, {"k_ideal", entry.k_ideal}});
  }
  j["congruences_enumerated"] = report.congruences_enumerated;
  if (report.congruences_enumerated) {
    j["congruences"] = nlohmann::json::array();
    for (const auto& entry : report.congruences) {
      j["congruences"].push_back(
          {{"classes", entry.classes}, {"k_congruence", entry.k_congruence}});
    }
    const BijectionReport& b = *report.bijection;
    j["bijection"] = {
        {"k_ideal_count", b.k_ideal_count},
        {"k_congruence_count", b.k_congruence_count},
        {"kappa_injective", b.kappa_injective},
        {"kappa_surjective", b.kappa_surjective},
        {"inclusion_preserved", b.inclusion_preserved},
        {"round_trips_ok", b.round_trips_ok},
        {"ok", b.ok()},
    };
  }
  j["verdicts"] = {
      {"k_simple", report.k_simple},
      {"ideal_free", report.ideal_free},
      {"congruence_simple",
       report.congruence_simple ? nlohmann::json(*report.congruence_simple) : nlohmann::json(nullptr)},
      {"k_congruence_simple", report.k_congruence_simple ? nlohmann::json(*report.k_congruence_simple)
                                                         : nlohmann::json(nullptr)},
  };
  return j;
}

inline nlohmann::json table_to_json(const OpTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (element_type i = 0; i < table.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (element_type j = 0; j < table.size(); ++j) row.push_back(table.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json census_to_json(const CensusReport& report) {
  nlohmann::json j;
  j["version"] = report_format_version;
  j["order"] = report.order;
  j["constraints"] = report.constraints.names();
  j["total_up_to_iso"] = report.total;
  j["k_simple_count"] = report.k_simple_count;
  j["below_min_order"] = report.below_min_order;
  j["entries"] = nlohmann::json::array();
  for (const CensusEntry& entry : report.entries) {
    j["entries"].push_back({
        {"key", key_to_hex(entry.key)},
        {"add", table_to_json(entry.add)},
        {"mul", table_to_json(entry.mul)},
        {"k_simple", entry.k_simple},
        {"has_zero", entry.has_zero},
        {"has_identity", entry.has_identity},
        {"additively_idempotent", entry.additively_idempotent},
        {"commutative_mul", entry.commutative_mul},
        {"incline", entry.incline},
    });
  }
  return j;
}

inline std::string census_to_text(const CensusReport& report) {
  std::ostringstream out;
  out << "census order=" << report.order;
  out << " constraints=";
  auto names = report.constraints.names();
  if (names.empty()) {
    out << "(none)";
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ',';
      out << names[i];
    }
  }
  out << '\n';
  if (report.below_min_order) out << "note: order below 2, outside the usual convention\n";
  out << "total(up to iso)=" << report.total << " k-simple=" << report.k_simple_count << '\n';
  for (const CensusEntry& entry : report.entries) {
    out << key_to_hex(entry.key) << (entry.k_simple ? "  k-simple" : "");
    if (entry.has_zero) out << "  zero";
    if (entry.has_identity) out << "  identity";
    if (entry.incline) {
      out << "  incline";
    } else if (entry.additively_idempotent) {
      out << "  add-idempotent";
    }
    if (entry.commutative_mul) out << "  commutative";
    out << '\n';
  }
  return out.str();
}

}  // namespace semiring
