#pragma once

// Graph-description export: the Hasse diagram of the natural order, the
// inclusion order on ideals, and the refinement order on congruences.
// Output is plain Graphviz text with deterministic node ordering; k-ideals
// and k-congruences are marked with doubled node borders.

#include <sstream>
#include <string>
#include <vector>

#include "semiring/congruence.hpp"
#include "semiring/core.hpp"
#include "semiring/ideals.hpp"

namespace semiring {

namespace detail {

inline std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Hasse edges of an arbitrary finite order given as a leq predicate.
template <typename Leq>
std::vector<std::pair<int, int>> cover_edges(int n, Leq leq) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < n && covered; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) covered = false;
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

template <typename Label, typename Marked, typename Leq>
std::string hasse_digraph(const std::string& graph_name, int n, Label label, Marked marked,
                          Leq leq) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < n; ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(label(i)) << '"';
    if (marked(i)) out << " peripheries=2";
    out << "];\n";
  }
  for (const auto& [lo, hi] : cover_edges(n, leq)) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace detail

/// Hasse diagram of the natural order; requires additive idempotence.
inline std::string export_hasse_dot(const FiniteSemiring& R) {
  OrderMatrix order = natural_leq(R);
  return detail::hasse_digraph(
      R.name() + " hasse", R.size(), [&](int i) { return R.element_name(i); },
      [](int) { return false; },
      [&](int x, int y) { return order.leq(x, y); });
}

/// Inclusion order on all ideals; k-ideals are double-bordered.
inline std::string export_ideal_lattice_dot(const FiniteSemiring& R) {
  std::vector<ElementSubset> ideals = enumerate_ideals(R);
  std::vector<char> k_flags;
  k_flags.reserve(ideals.size());
  for (const ElementSubset& A : ideals) k_flags.push_back(is_k_ideal(R, A) ? 1 : 0);
  return detail::hasse_digraph(
      R.name() + " ideals", static_cast<int>(ideals.size()),
      [&](int i) { return ideals[i].to_string(R); }, [&](int i) { return k_flags[i] != 0; },
      [&](int x, int y) { return ideals[x].subset_of(ideals[y]); });
}

/// Refinement order on all congruences; k-congruences are double-bordered.
inline std::string export_congruence_lattice_dot(const FiniteSemiring& R) {
  std::vector<Congruence> congruences = enumerate_congruences(R);
  std::vector<char> k_flags;
  k_flags.reserve(congruences.size());
  for (const Congruence& theta : congruences) {
    k_flags.push_back(is_k_congruence(R, theta) ? 1 : 0);
  }
  return detail::hasse_digraph(
      R.name() + " congruences", static_cast<int>(congruences.size()),
      [&](int i) { return congruences[i].partition().to_string(R); },
      [&](int i) { return k_flags[i] != 0; },
      [&](int x, int y) { return congruences[x].partition().refines(congruences[y].partition()); });
}

}  // namespace semiring
