#include "nearring/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>

#include "nearring/checks.hpp"
#include "nearring/closure.hpp"
#include "nearring/predicates.hpp"
#include "nearring/witness.hpp"

namespace nearring {

namespace {

enum class Format { Text, Machine };

// Shared knobs; each subcommand registers the subset it uses.
struct Options {
  std::string basis;
  std::vector<std::string> gens;
  std::vector<std::string> positional;
  std::vector<std::string> contains;
  std::size_t degree_cap = 8;
  std::size_t coeff_cap = 3;
  std::size_t combo_width = 3;
  std::size_t max_rounds = 32;
  std::size_t work_degree = 0;
  std::size_t depth = SearchBounds{}.max_depth;
  std::optional<std::size_t> search_coeff_cap;
  std::optional<std::size_t> search_width;
  std::optional<std::size_t> j;
  std::string term;
  bool builtin = false;
  bool verbose = false;
  Format format = Format::Text;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text},
                                                                        {"machine", Format::Machine}}));
}

void add_closure_caps(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree-cap", o.degree_cap, "Largest degree D kept in the result");
  cmd->add_option("--coeff-cap", o.coeff_cap, "Largest |lambda| in right-argument combinations");
  cmd->add_option("--combo-width", o.combo_width, "Most basis rows combined into one right argument");
  cmd->add_option("--max-rounds", o.max_rounds, "Round limit for saturation");
  cmd->add_option("--work-degree", o.work_degree, "Working degree W >= D (0: 2D+1)");
}

ClosureConfig closure_config(const Options& o) {
  ClosureConfig cfg;
  cfg.degree_cap = o.degree_cap;
  cfg.coeff_cap = o.coeff_cap;
  cfg.combo_width = o.combo_width;
  cfg.max_rounds = o.max_rounds;
  cfg.work_degree = o.work_degree;
  cfg.validate();
  return cfg;
}

// Generators from --gen, or from --basis when no --gen is given.
std::vector<IntPoly> generator_list(const Options& o) {
  std::vector<IntPoly> out;
  for (const auto& g : o.gens) out.push_back(parse_poly(g));
  if (out.empty() && !o.basis.empty()) out = GeneratorBasis::parse(o.basis).generators();
  if (out.empty() && o.basis.empty()) throw UsageError("give generators with --gen or --basis");
  return out;
}

const std::string& single_positional(const Options& o, const char* what) {
  if (o.positional.size() != 1) throw UsageError(std::string("expected exactly one ") + what);
  return o.positional.front();
}

int result(std::ostream& out, const char* op, bool pass, const std::string& note = "") {
  out << "RESULT " << op << ' ' << (pass ? "PASS" : "FAIL");
  if (!note.empty()) out << " (" << note << ')';
  out << '\n';
  return pass ? 0 : 1;
}

int cmd_member(const Options& o, std::ostream& out) {
  if (o.basis.empty()) throw UsageError("member needs --basis");
  const GeneratorBasis b = GeneratorBasis::parse(o.basis);
  const IntPoly p = parse_poly(single_positional(o, "polynomial"));
  const MembershipVerdict v = member(b, p);
  if (o.format == Format::Text) out << "basis " << b.flags_string() << " <" << b.to_string() << ">, p = " << p << '\n';
  out << "MEMBER " << (v.member ? "true" : "false") << '\n';
  out << format_violations(v);
  return v.member ? 0 : 1;
}

int cmd_compose(const Options& o, std::ostream& out) {
  if (o.positional.size() != 2) throw UsageError("compose expects two polynomials");
  out << compose(parse_poly(o.positional[0]), parse_poly(o.positional[1])) << '\n';
  return 0;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const auto gens = generator_list(o);
  const ClosureConfig cfg = closure_config(o);
  const SaturationRun run = saturate_run(gens, cfg);
  if (o.format == Format::Text) {
    out << "generators:";
    for (const auto& g : gens) out << ' ' << g << ';';
    out << "\nworking degree " << cfg.effective_work_degree() << ", " << run.candidates
        << " compositions evaluated\n";
  }
  out << run.lattice.dump();
  out << "ROUNDS " << run.rounds << " FIXPOINT " << (run.fixpoint ? "yes" : "no") << '\n';
  bool all = run.fixpoint;
  for (const auto& c : o.contains) {
    const IntPoly p = parse_poly(c);
    const bool in = run.lattice.contains(p);
    out << "CONTAINS " << p << ' ' << (in ? "true" : "false") << '\n';
    all = all && in;
  }
  return result(out, "closure", all, run.fixpoint ? "" : "round limit reached");
}

int cmd_compare(const Options& o, std::ostream& out) {
  if (o.basis.empty()) throw UsageError("compare needs --basis");
  const CompareReport r = compare_closure_vs_predicate(GeneratorBasis::parse(o.basis), closure_config(o));
  if (o.format == Format::Text) {
    out << "basis " << r.basis.flags_string() << " D=" << o.degree_cap << ": saturation rank "
        << r.saturation.lattice.rank() << " after " << r.saturation.rounds << " rounds, predicted rank "
        << r.predicted.rank() << '\n';
  }
  for (const auto& p : r.unexplained) out << "UNEXPLAINED " << p << '\n';
  for (const auto& p : r.missing) out << "MISSING " << p << '\n';
  if (!r.contained) return result(out, "compare", false, "saturation escapes the predicate");
  return result(out, "compare", true, r.equal ? "equal" : "contained, not equal");
}

SearchBounds search_bounds(const Options& o) {
  SearchBounds b;
  b.max_depth = o.depth;
  if (o.search_coeff_cap) b.coeff_cap = *o.search_coeff_cap;
  if (o.search_width) b.combo_width = *o.search_width;
  b.work_degree = o.work_degree;
  if (b.coeff_cap < 1 || b.combo_width < 1) throw InfeasibleConfig("search caps must be at least 1");
  return b;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto gens = generator_list(o);
  const IntPoly target = parse_poly(single_positional(o, "target polynomial"));
  const auto t = search_witness(target, gens, search_bounds(o));
  if (!t) {
    out << "WITNESS none\n";
    return result(out, "witness", false, "nothing found within the bounds");
  }
  if (o.format == Format::Text)
    out << "term with " << dag_size(*t) << " shared nodes evaluates to " << eval_term(*t, gens) << '\n';
  out << "WITNESS " << to_sexpr(*t) << '\n';
  return result(out, "witness", true);
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.builtin) {
    bool all = true;
    for (const auto& d : builtin_derivations()) {
      const bool ok = verify_derivation(d);
      all = all && ok;
      out << "VERIFY " << d.name << ' ' << (ok ? "PASS" : "FAIL");
      if (o.format == Format::Text) out << "  " << d.claimed_value;
      out << '\n';
    }
    return result(out, "verify", all);
  }
  if (o.term.empty()) throw UsageError("verify needs --term (with --gen and a claimed value) or --builtin");
  std::vector<IntPoly> env;
  for (const auto& g : o.gens) env.push_back(parse_poly(g));
  if (env.empty() && !o.basis.empty()) env = GeneratorBasis::parse(o.basis).generators();
  Derivation d{"cli", parse_sexpr(o.term), env, parse_poly(single_positional(o, "claimed value"))};
  const bool ok = verify_derivation(d);
  if (o.format == Format::Text) {
    try {
      out << "term evaluates to " << eval_term(d.term, d.environment) << '\n';
    } catch (const UnresolvedLabel& e) {
      out << "term does not evaluate: " << e.what() << '\n';
    }
  }
  return result(out, "verify", ok);
}

int cmd_parity(const Options& o, std::ostream& out) {
  const std::size_t j = *o.j;
  if (j < 1 || j > 40) throw UsageError("--j must be between 1 and 40");
  const std::size_t target = (std::size_t{1} << (j + 1)) - 2;
  if (o.degree_cap < target) throw UsageError("--degree-cap must reach x^" + std::to_string(target));
  const ClosureConfig cfg = closure_config(o);
  const auto gens = power_gap_generators(j, o.degree_cap);
  const ParityReport r = parity_coefficient_check(gens, target, cfg);
  out << "PARITY j=" << j << " target=x^" << target << " generators=";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
  out << " rows=" << r.saturation.lattice.rank() << " violations=" << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "ODD " << v << '\n';
  return result(out, "check", r.pass());
}

int cmd_check(const Options& o, std::ostream& out) {
  const std::string& name = single_positional(o, "check name (all, 1-9 or a key)");
  if ((name == "theorem-4.1" || name == "parity-gap") && o.j) return cmd_parity(o, out);
  std::vector<const AcceptanceCheck*> todo;
  if (name == "all") {
    for (const auto& c : acceptance_checks()) todo.push_back(&c);
  } else if (const AcceptanceCheck* c = find_check(name == "theorem-4.1" ? "parity-gap" : name)) {
    todo.push_back(c);
  } else {
    throw UsageError("unknown check '" + name + "'");
  }
  bool all = true;
  for (const auto* c : todo) {
    const CheckRun run = run_check(*c);
    print_check_run(out, run, o.verbose || (o.format == Format::Text && todo.size() == 1));
    out.flush();
    all = all && run.outcome.pass;
  }
  return result(out, "check", all);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subnearrings of the composition nearring of integer polynomials", "nearring"};
  app.require_subcommand(1);
  Options o;

  auto* member_cmd = app.add_subcommand("member", "Test membership with the closed-form predicate");
  member_cmd->add_option("--basis", o.basis, "Generators as tokens from 1,x,x2,x3")->required();
  member_cmd->add_option("poly", o.positional, "Polynomial")->required();
  add_format(member_cmd, o);

  auto* compose_cmd = app.add_subcommand("compose", "Print p o q");
  compose_cmd->add_option("polys", o.positional, "p q")->required()->expected(2);
  add_format(compose_cmd, o);

  auto* closure_cmd = app.add_subcommand("closure", "Saturate a generator set into an HNF lattice");
  closure_cmd->add_option("--basis", o.basis, "Generators as tokens from 1,x,x2,x3");
  closure_cmd->add_option("--gen", o.gens, "Generator polynomial (repeatable)");
  closure_cmd->add_option("--contains", o.contains, "Report whether the lattice contains this (repeatable)");
  add_closure_caps(closure_cmd, o);
  add_format(closure_cmd, o);

  auto* compare_cmd = app.add_subcommand("compare", "Compare saturation with the predicted lattice");
  compare_cmd->add_option("--basis", o.basis, "Generators as tokens from 1,x,x2,x3")->required();
  add_closure_caps(compare_cmd, o);
  add_format(compare_cmd, o);

  auto* witness_cmd = app.add_subcommand("witness", "Search for a derivation term");
  witness_cmd->add_option("--basis", o.basis, "Generators as tokens from 1,x,x2,x3");
  witness_cmd->add_option("--gen", o.gens, "Generator polynomial (repeatable)");
  witness_cmd->add_option("--depth", o.depth, "Rounds of left composition");
  witness_cmd->add_option("--coeff-cap", o.search_coeff_cap, "Largest |lambda| in right arguments");
  witness_cmd->add_option("--combo-width", o.search_width, "Most rows combined into one right argument");
  witness_cmd->add_option("--work-degree", o.work_degree, "Working degree (0: 3 deg(target))");
  witness_cmd->add_option("target", o.positional, "Target polynomial")->required();
  add_format(witness_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Check a derivation term, or all built-in ones");
  verify_cmd->add_flag("--builtin", o.builtin, "Verify the built-in derivations");
  verify_cmd->add_option("--term", o.term, "Term as an s-expression");
  verify_cmd->add_option("--basis", o.basis, "Environment as tokens from 1,x,x2,x3");
  verify_cmd->add_option("--gen", o.gens, "Environment entry gK (repeatable, in order)");
  verify_cmd->add_option("claimed", o.positional, "Claimed value");
  add_format(verify_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Run acceptance checks: all, 1-9, or a key");
  check_cmd->add_option("name", o.positional, "Check name")->required();
  check_cmd->add_option("--j", o.j, "With theorem-4.1/parity-gap: the skipped index j");
  check_cmd->add_flag("-v,--verbose", o.verbose, "Print every sub-check");
  add_closure_caps(check_cmd, o);
  add_format(check_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    if (*member_cmd) return cmd_member(o, out);
    if (*compose_cmd) return cmd_compose(o, out);
    if (*closure_cmd) return cmd_closure(o, out);
    if (*compare_cmd) return cmd_compare(o, out);
    if (*witness_cmd) return cmd_witness(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*check_cmd) return cmd_check(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n' << "grammar: " << kPolyGrammarHint << '\n';
    return 2;
  } catch (const InfeasibleConfig& e) {
    err << "error: infeasible configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace nearring
