#pragma once

// Plain-text spec formats for semirings and lattices, plus constructors
// that build semirings from lattice covering relations and from
// modular-integer rings.
//
// Semiring file:
//   semiring <name>
//   elements: <tok1> ... <tokK>
//   add:
//   <K rows of K tokens>        row i, column j = e_i + e_j
//   mul:
//   <K rows of K tokens>
//
// Lattice file:
//   lattice <name>
//   elements: <tok1> ... <tokK>
//   covers: a<b, c<d, ...
//   mul: meet                   (or "mul:" followed by K explicit rows)
//
// '#' starts a comment; blank lines are ignored. Element order in a file is
// significant and preserved, so fixtures stay stable under round trips.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semiring/core.hpp"

namespace semiring {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class LatticeError : public Error {
 public:
  using Error::Error;
};

/// Hasse diagram of a finite poset: irredundant covering pairs over an
/// ordered element list.
struct CoverRelation {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
};

struct LatticeOps {
  OrderMatrix order;
  OpTable join;
  OpTable meet;
};

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;
};

struct Line {
  std::vector<Token> tokens;
  int number;
};

// Comment-stripped, tokenized nonblank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    Line line{{}, line_no};
    int col = 1;
    std::string current;
    int current_col = 0;
    for (char c : raw) {
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!current.empty()) {
          line.tokens.push_back({current, line_no, current_col});
          current.clear();
        }
      } else {
        if (current.empty()) current_col = col;
        current += c;
      }
      ++col;
    }
    if (!current.empty()) line.tokens.push_back({current, line_no, current_col});
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

inline element_type token_to_element(const Token& tok, const std::vector<std::string>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == tok.text) return static_cast<element_type>(i);
  }
  throw ParseError(tok.line, tok.column, "unknown element token \"" + tok.text + '"');
}

inline OpTable parse_table(const std::vector<Line>& lines, std::size_t& idx,
                           const std::vector<std::string>& elements, const char* what) {
  const int k = static_cast<int>(elements.size());
  std::vector<element_type> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int row = 0; row < k; ++row) {
    if (idx >= lines.size()) {
      throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1,
                       std::string("missing row ") + std::to_string(row + 1) + " of the " + what +
                           " table");
    }
    const Line& line = lines[idx++];
    if (static_cast<int>(line.tokens.size()) != k) {
      throw ParseError(line.number, line.tokens.front().column,
                       std::string(what) + " table row has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(k));
    }
    for (const Token& tok : line.tokens) entries.push_back(token_to_element(tok, elements));
  }
  return OpTable(k, std::move(entries));
}

inline std::vector<std::string> parse_elements_line(const Line& line) {
  if (line.tokens.front().text != "elements:") {
    throw ParseError(line.number, line.tokens.front().column, "expected \"elements:\" line");
  }
  if (line.tokens.size() < 2) {
    throw ParseError(line.number, line.tokens.front().column, "element list is empty");
  }
  std::vector<std::string> elements;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    for (const auto& existing : elements) {
      if (existing == line.tokens[i].text) {
        throw ParseError(line.tokens[i].line, line.tokens[i].column,
                         "duplicate element token \"" + existing + '"');
      }
    }
    elements.push_back(line.tokens[i].text);
  }
  return elements;
}

}  // namespace detail

/// Parses the semiring file format; the result is axiom-validated (an
/// invalid table surfaces as AxiomError, not a parse error).
inline FiniteSemiring parse_semiring(std::string_view text) {
  auto lines = detail::tokenize(text);
  std::size_t idx = 0;
  if (lines.empty() || lines[0].tokens[0].text != "semiring" || lines[0].tokens.size() != 2) {
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1,
                     "expected header line \"semiring <name>\"");
  }
  std::string name = lines[0].tokens[1].text;
  idx = 1;
  if (idx >= lines.size()) throw ParseError(lines[0].number + 1, 1, "missing \"elements:\" line");
  std::vector<std::string> elements = detail::parse_elements_line(lines[idx++]);

  auto expect_keyword = [&](const char* kw) {
    if (idx >= lines.size() || lines[idx].tokens.size() != 1 || lines[idx].tokens[0].text != kw) {
      int line_no = idx < lines.size() ? lines[idx].number : lines.back().number + 1;
      throw ParseError(line_no, 1, std::string("expected \"") + kw + "\" line");
    }
    ++idx;
  };
  expect_keyword("add:");
  OpTable add = detail::parse_table(lines, idx, elements, "add");
  expect_keyword("mul:");
  OpTable mul = detail::parse_table(lines, idx, elements, "mul");
  if (idx != lines.size()) {
    throw ParseError(lines[idx].number, lines[idx].tokens[0].column, "unexpected trailing content");
  }
  return FiniteSemiring(std::move(name), std::move(elements), std::move(add), std::move(mul));
}

/// Canonical rendering; parse(render(R)) reproduces R exactly (names,
/// element order, tables).
inline std::string render(const FiniteSemiring& R) {
  std::ostringstream out;
  out << "semiring " << R.name() << '\n';
  out << "elements:";
  for (const auto& name : R.element_names()) out << ' ' << name;
  out << '\n';
  auto emit_table = [&](const char* kw, const OpTable& table) {
    out << kw << '\n';
    for (element_type i = 0; i < R.size(); ++i) {
      for (element_type j = 0; j < R.size(); ++j) {
        if (j) out << ' ';
        out << R.element_name(table.at(i, j));
      }
      out << '\n';
    }
  };
  emit_table("add:", R.add_table());
  emit_table("mul:", R.mul_table());
  return out.str();
}

/// Order, join, and meet tables of the lattice presented by its covering
/// pairs. Fails if the covers are cyclic, redundant, or if some pair lacks
/// a unique least upper / greatest lower bound.
inline LatticeOps lattice_from_covers(const CoverRelation& covers) {
  const int k = static_cast<int>(covers.elements.size());
  if (k == 0) throw LatticeError("lattice needs at least one element");

  auto index_of = [&](const std::string& tok) -> element_type {
    for (int i = 0; i < k; ++i) {
      if (covers.elements[i] == tok) return i;
    }
    throw LatticeError("cover pair uses unknown element \"" + tok + '"');
  };

  std::vector<char> leq(static_cast<std::size_t>(k) * k, 0);
  auto set_leq = [&](element_type x, element_type y) { leq[static_cast<std::size_t>(x) * k + y] = 1; };
  auto get_leq = [&](element_type x, element_type y) { return leq[static_cast<std::size_t>(x) * k + y] != 0; };

  for (int i = 0; i < k; ++i) set_leq(i, i);
  std::vector<std::pair<element_type, element_type>> edges;
  for (const auto& [lo_tok, hi_tok] : covers.covers) {
    element_type lo = index_of(lo_tok);
    element_type hi = index_of(hi_tok);
    if (lo == hi) throw LatticeError("cover pair relates \"" + lo_tok + "\" to itself");
    edges.emplace_back(lo, hi);
    set_leq(lo, hi);
  }
  // Reflexive-transitive closure.
  for (int m = 0; m < k; ++m) {
    for (int x = 0; x < k; ++x) {
      if (!get_leq(x, m)) continue;
      for (int y = 0; y < k; ++y) {
        if (get_leq(m, y)) set_leq(x, y);
      }
    }
  }
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      if (get_leq(x, y) && get_leq(y, x)) {
        throw LatticeError("covers are cyclic: \"" + covers.elements[x] + "\" and \"" +
                           covers.elements[y] + "\" order each other");
      }
    }
  }
  for (const auto& [lo, hi] : edges) {
    for (int z = 0; z < k; ++z) {
      if (z != lo && z != hi && get_leq(lo, z) && get_leq(z, hi)) {
        throw LatticeError("redundant cover pair " + covers.elements[lo] + "<" +
                           covers.elements[hi] + " (implied via " + covers.elements[z] + ")");
      }
    }
  }

  OrderMatrix order(k, std::move(leq));
  std::vector<element_type> join_entries, meet_entries;
  join_entries.reserve(static_cast<std::size_t>(k) * k);
  meet_entries.reserve(static_cast<std::size_t>(k) * k);
  for (element_type x = 0; x < k; ++x) {
    for (element_type y = 0; y < k; ++y) {
      std::optional<element_type> lub;
      for (element_type z = 0; z < k; ++z) {
        if (!(order.leq(x, z) && order.leq(y, z))) continue;
        if (lub && !order.leq(z, *lub)) continue;
        lub = z;
      }
      // Verify the candidate really is the least upper bound.
      if (lub) {
        for (element_type z = 0; z < k; ++z) {
          if (order.leq(x, z) && order.leq(y, z) && !order.leq(*lub, z)) {
            lub.reset();
            break;
          }
        }
      }
      if (!lub) {
        throw LatticeError("not a lattice: elements \"" + covers.elements[x] + "\" and \"" +
                           covers.elements[y] + "\" have no unique least upper bound");
      }
      std::optional<element_type> glb;
      for (element_type z = 0; z < k; ++z) {
        if (!(order.leq(z, x) && order.leq(z, y))) continue;
        if (glb && !order.leq(*glb, z)) continue;
        glb = z;
      }
      if (glb) {
        for (element_type z = 0; z < k; ++z) {
          if (order.leq(z, x) && order.leq(z, y) && !order.leq(z, *glb)) {
            glb.reset();
            break;
          }
        }
      }
      if (!glb) {
        throw LatticeError("not a lattice: elements \"" + covers.elements[x] + "\" and \"" +
                           covers.elements[y] + "\" have no unique greatest lower bound");
      }
      join_entries.push_back(*lub);
      meet_entries.push_back(*glb);
    }
  }
  return LatticeOps{std::move(order), OpTable(k, std::move(join_entries)),
                    OpTable(k, std::move(meet_entries))};
}

/// Builds a semiring with join as addition and either the meet table or an
/// explicit table as multiplication. Meet multiplication on a
/// non-distributive lattice fails validation with a distributivity witness.
inline FiniteSemiring semiring_from_lattice(std::string name, const CoverRelation& covers,
                                            const std::optional<OpTable>& explicit_mul) {
  LatticeOps ops = lattice_from_covers(covers);
  OpTable mul = explicit_mul ? *explicit_mul : ops.meet;
  return FiniteSemiring(std::move(name), covers.elements, std::move(ops.join), std::move(mul));
}

inline FiniteSemiring parse_lattice(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens[0].text != "lattice" || lines[0].tokens.size() != 2) {
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1,
                     "expected header line \"lattice <name>\"");
  }
  std::string name = lines[0].tokens[1].text;
  std::size_t idx = 1;
  if (idx >= lines.size()) throw ParseError(lines[0].number + 1, 1, "missing \"elements:\" line");
  CoverRelation covers;
  covers.elements = detail::parse_elements_line(lines[idx++]);

  if (idx >= lines.size() || lines[idx].tokens[0].text != "covers:") {
    int line_no = idx < lines.size() ? lines[idx].number : lines.back().number + 1;
    throw ParseError(line_no, 1, "expected \"covers:\" line");
  }
  {
    const detail::Line& line = lines[idx++];
    std::string joined;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) joined += line.tokens[i].text;
    std::istringstream stream(joined);
    std::string pair_text;
    while (std::getline(stream, pair_text, ',')) {
      if (pair_text.empty()) continue;
      std::size_t lt = pair_text.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == pair_text.size()) {
        throw ParseError(line.number, line.tokens[0].column,
                         "cover pair \"" + pair_text + "\" is not of the form a<b");
      }
      covers.covers.emplace_back(pair_text.substr(0, lt), pair_text.substr(lt + 1));
    }
    if (covers.covers.empty() && covers.elements.size() > 1) {
      throw ParseError(line.number, line.tokens[0].column, "covers list is empty");
    }
  }

  std::optional<OpTable> explicit_mul;
  if (idx < lines.size() && lines[idx].tokens[0].text == "mul:") {
    if (lines[idx].tokens.size() == 2 && lines[idx].tokens[1].text == "meet") {
      ++idx;
    } else if (lines[idx].tokens.size() == 1) {
      ++idx;
      explicit_mul = detail::parse_table(lines, idx, covers.elements, "mul");
    } else {
      throw ParseError(lines[idx].number, lines[idx].tokens[1].column,
                       "expected \"mul: meet\" or \"mul:\" followed by table rows");
    }
  }
  if (idx != lines.size()) {
    throw ParseError(lines[idx].number, lines[idx].tokens[0].column, "unexpected trailing content");
  }
  // Tokens in cover pairs are validated inside lattice_from_covers.
  return semiring_from_lattice(std::move(name), covers, explicit_mul);
}

/// Loads either file format, dispatching on the header keyword.
inline FiniteSemiring parse_document(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const std::string& kw = lines[0].tokens[0].text;
  if (kw == "semiring") return parse_semiring(text);
  if (kw == "lattice") return parse_lattice(text);
  throw ParseError(lines[0].number, lines[0].tokens[0].column,
                   "expected a \"semiring\" or \"lattice\" document, got \"" + kw + '"');
}

/// The ring of integers mod n as a semiring, elements named "0".."n-1".
inline FiniteSemiring zn_ring(int n) {
  if (n < 2) throw PreconditionError("zn_ring requires n >= 2");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  OpTable add = OpTable::from_fn(n, [n](element_type i, element_type j) { return (i + j) % n; });
  OpTable mul = OpTable::from_fn(n, [n](element_type i, element_type j) { return (i * j) % n; });
  return FiniteSemiring("z" + std::to_string(n), std::move(names), std::move(add), std::move(mul));
}

}  // namespace semiring
