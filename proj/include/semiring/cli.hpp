#pragma once

// Command-line driver. Exit codes: 0 success, 1 semantic failure (axiom
// violation or failed check), 2 input error (parse/IO/range), 3 unsupported
// bound. Everything is deterministic; identical inputs give byte-identical
// output.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiring/analysis.hpp"
#include "semiring/classify.hpp"
#include "semiring/congruence.hpp"
#include "semiring/core.hpp"
#include "semiring/dot.hpp"
#include "semiring/ideals.hpp"
#include "semiring/natsr.hpp"
#include "semiring/paper_checks.hpp"
#include "semiring/specfmt.hpp"

namespace semiring {

namespace cli_detail {

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_input = 2;
constexpr int exit_bound = 3;

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

inline ElementSubset parse_element_set(const FiniteSemiring& R, const std::string& csv) {
  ElementSubset subset(R.size());
  for (const std::string& name : split(csv, ',')) {
    if (name.empty()) throw PreconditionError("empty element name in set");
    std::optional<element_type> idx = R.index_of(name);
    if (!idx) throw ParseError(1, 1, "unknown element \"" + name + '"');
    subset.insert(*idx);
  }
  return subset;
}

inline Partition parse_partition(const FiniteSemiring& R, const std::string& spec) {
  std::vector<std::vector<element_type>> classes;
  for (const std::string& cls : split(spec, '|')) {
    std::vector<element_type> members;
    for (const std::string& name : split(cls, ',')) {
      if (name.empty()) throw PreconditionError("empty element name in class");
      std::optional<element_type> idx = R.index_of(name);
      if (!idx) throw ParseError(1, 1, "unknown element \"" + name + '"');
      members.push_back(*idx);
    }
    classes.push_back(std::move(members));
  }
  return Partition::from_classes(R.size(), classes);
}

inline std::vector<long long> parse_generators(const std::string& csv) {
  std::vector<long long> out;
  for (const std::string& token : split(csv, ',')) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(1, 1, "bad generator \"" + token + '"');
    }
  }
  return out;
}

inline void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + out_path);
  file << text;
}

inline void print_axiom_report(const AxiomError& error, std::ostream& out) {
  const AxiomReport& report = error.report();
  const std::vector<std::string>& names = error.element_names();
  auto show = [&](element_type e) -> std::string {
    if (e >= 0 && e < static_cast<element_type>(names.size())) return names[e];
    return std::to_string(e);
  };
  for (const LawViolation& v : report.violations) {
    out << "violated " << law_name(v.law) << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ',';
      out << show(v.witness[i]);
    }
    out << ")\n";
  }
  if (report.neutral_non_absorbing) {
    out << "note: element " << show(*report.neutral_non_absorbing)
        << " is additively neutral but not absorbing\n";
  }
}

}  // namespace cli_detail

/// Parses and runs one invocation. Arguments exclude the program name.
inline int run_cli(const std::vector<std::string>& arguments, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"finite semiring analysis: ideals, congruences, quotients, census"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string set_csv;
  std::string ideal_csv;
  std::string classes_spec;
  std::string out_path;
  std::string fixtures_dir = "fixtures";
  std::string only_id;
  std::string target;
  std::string gens_csv;
  long long x_value = 0;
  long long bound_value = 0;
  int order = 0;
  ConstraintSet constraints;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a spec file against the axioms");
  validate_cmd->add_option("path", path)->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full ideal/congruence analysis");
  analyze_cmd->add_option("path", path)->required();
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  CLI::App* kclosure_cmd = app.add_subcommand("kclosure", "subtractive closure of an ideal");
  kclosure_cmd->add_option("path", path)->required();
  kclosure_cmd->add_option("--set", set_csv, "comma-separated element names")->required();

  CLI::App* kappa_cmd = app.add_subcommand("kappa", "congruence induced by an ideal");
  kappa_cmd->add_option("path", path)->required();
  kappa_cmd->add_option("--set", set_csv, "comma-separated element names")->required();

  CLI::App* quotient_cmd = app.add_subcommand("quotient", "quotient semiring by a congruence");
  quotient_cmd->add_option("path", path)->required();
  CLI::Option* ideal_opt =
      quotient_cmd->add_option("--ideal", ideal_csv, "quotient by the congruence of this ideal");
  quotient_cmd->add_option("--classes", classes_spec, "explicit classes, e.g. 0,a|b,c")
      ->excludes(ideal_opt);

  CLI::App* census_cmd = app.add_subcommand("census", "enumerate semirings up to isomorphism");
  census_cmd->add_option("--order", order)->required();
  census_cmd->add_flag("--additively-idempotent", constraints.additively_idempotent);
  census_cmd->add_flag("--commutative-mul", constraints.commutative_mul);
  census_cmd->add_flag("--incline", constraints.incline);
  census_cmd->add_flag("--with-zero", constraints.with_zero);
  census_cmd->add_flag("--ring", constraints.ring);
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
  census_cmd->add_option("--out", out_path);

  CLI::App* check_cmd = app.add_subcommand("check-paper", "run the named verification items");
  check_cmd->add_option("--fixtures", fixtures_dir);
  check_cmd->add_option("--only", only_id);

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "emit a graph description");
  dot_cmd->add_option("path", path)->required();
  dot_cmd->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"hasse", "ideal-lattice", "congruence-lattice"}));
  dot_cmd->add_option("--out", out_path);

  CLI::App* nat_cmd = app.add_subcommand("nat", "finitely generated ideals of the nonnegative integers");
  nat_cmd->require_subcommand(1);
  CLI::App* nat_contains_cmd = nat_cmd->add_subcommand("contains", "ideal membership");
  nat_contains_cmd->add_option("--gens", gens_csv)->required();
  nat_contains_cmd->add_option("--x", x_value)->required();
  CLI::App* nat_kclosure_cmd = nat_cmd->add_subcommand("kclosure", "subtractive closure membership");
  nat_kclosure_cmd->add_option("--gens", gens_csv)->required();
  nat_kclosure_cmd->add_option("--x", x_value)->required();
  CLI::App* nat_kclosed_cmd = nat_cmd->add_subcommand("kclosed", "search for a closure violation");
  nat_kclosed_cmd->add_option("--gens", gens_csv)->required();
  nat_kclosed_cmd->add_option("--bound", bound_value)->required();

  std::vector<std::string> args(arguments.rbegin(), arguments.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << '\n';
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_input;
  }

  try {
    if (validate_cmd->parsed()) {
      try {
        FiniteSemiring R = load_semiring_file(path);
        out << "valid " << (R.single_element() ? "single-element " : "") << "semiring \""
            << R.name() << "\" (order " << R.size() << ")\n";
        return exit_ok;
      } catch (const AxiomError& e) {
        err << "invalid: " << e.what() << '\n';
        print_axiom_report(e, err);
        return exit_semantic;
      }
    }

    if (analyze_cmd->parsed()) {
      FiniteSemiring R = load_semiring_file(path);
      AnalysisReport report = analyze(R);
      if (format == "structured") {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << to_text(report);
      }
      return exit_ok;
    }

    if (kclosure_cmd->parsed()) {
      FiniteSemiring R = load_semiring_file(path);
      ElementSubset A = parse_element_set(R, set_csv);
      ElementSubset closure = k_closure(R, A);
      out << "closure " << closure.to_string(R) << '\n';
      out << (closure == A ? "the ideal is k-closed\n" : "the ideal is not k-closed\n");
      return exit_ok;
    }

    if (kappa_cmd->parsed()) {
      FiniteSemiring R = load_semiring_file(path);
      ElementSubset A = parse_element_set(R, set_csv);
      Congruence theta = kappa(R, A);
      out << "classes " << theta.partition().to_string(R) << '\n';
      out << (is_k_congruence(R, theta) ? "k-congruence\n" : "not a k-congruence\n");
      return exit_ok;
    }

    if (quotient_cmd->parsed()) {
      FiniteSemiring R = load_semiring_file(path);
      std::optional<Congruence> theta;
      if (!ideal_csv.empty()) {
        theta = kappa(R, parse_element_set(R, ideal_csv));
      } else if (!classes_spec.empty()) {
        theta.emplace(R, parse_partition(R, classes_spec));
      } else {
        err << "error: quotient needs --ideal or --classes\n";
        return exit_input;
      }
      QuotientSemiring q = quotient(R, *theta);
      out << render(q.quotient);
      out << "projection:";
      for (element_type e = 0; e < R.size(); ++e) {
        out << ' ' << R.element_name(e) << "->" << q.quotient.element_name(q.projection[e]);
      }
      out << '\n';
      return exit_ok;
    }

    if (census_cmd->parsed()) {
      CensusReport report = k_simple_census(order, constraints);
      std::string text =
          format == "structured" ? census_to_json(report).dump(2) + "\n" : census_to_text(report);
      write_output(text, out_path, out);
      return exit_ok;
    }

    if (check_cmd->parsed()) {
      bool all_pass = true;
      bool matched = false;
      for (const PaperCheck& check : paper_checks()) {
        if (!only_id.empty() && check.id != only_id) continue;
        matched = true;
        CheckResult result = run_paper_check(check, fixtures_dir);
        out << std::left << std::setw(20) << result.id << (result.pass ? "PASS" : "FAIL");
        if (!result.detail.empty()) out << "  " << result.detail;
        out << '\n';
        all_pass = all_pass && result.pass;
      }
      if (!matched) {
        err << "error: unknown check id \"" << only_id << "\"\n";
        return exit_input;
      }
      return all_pass ? exit_ok : exit_semantic;
    }

    if (dot_cmd->parsed()) {
      FiniteSemiring R = load_semiring_file(path);
      std::string text;
      if (target == "hasse") {
        text = export_hasse_dot(R);
      } else if (target == "ideal-lattice") {
        text = export_ideal_lattice_dot(R);
      } else {
        text = export_congruence_lattice_dot(R);
      }
      write_output(text, out_path, out);
      return exit_ok;
    }

    if (nat_contains_cmd->parsed()) {
      NatIdeal ideal(parse_generators(gens_csv));
      out << (nat_contains(ideal, x_value) ? "true" : "false") << '\n';
      return exit_ok;
    }
    if (nat_kclosure_cmd->parsed()) {
      NatIdeal ideal(parse_generators(gens_csv));
      std::optional<long long> witness = nat_k_closure_witness(ideal, x_value);
      if (witness) {
        out << "true (witness a=" << *witness << ": " << x_value << "+" << *witness << "="
            << x_value + *witness << ")\n";
      } else {
        out << "false\n";
      }
      return exit_ok;
    }
    if (nat_kclosed_cmd->parsed()) {
      NatIdeal ideal(parse_generators(gens_csv));
      std::optional<long long> violation = nat_is_k_closed_upto(ideal, bound_value);
      if (violation) {
        out << "violation x=" << *violation << '\n';
      } else {
        out << "k-closed up to " << bound_value << '\n';
      }
      return exit_ok;
    }

    err << "error: no command\n";
    return exit_input;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_input;
  } catch (const TableShapeError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return exit_input;
  } catch (const UnsupportedBoundError& e) {
    err << "unsupported bound: " << e.what() << '\n';
    return exit_bound;
  } catch (const AxiomError& e) {
    err << "invalid: " << e.what() << '\n';
    print_axiom_report(e, err);
    return exit_semantic;
  } catch (const LatticeError& e) {
    err << "lattice error: " << e.what() << '\n';
    return exit_semantic;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_semantic;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

}  // namespace semiring
