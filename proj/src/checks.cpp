#include "nearring/checks.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "nearring/closure.hpp"
#include "nearring/numtheory.hpp"
#include "nearring/predicates.hpp"
#include "nearring/witness.hpp"

namespace nearring {

void CheckOutcome::expect(bool ok, const std::string& line) {
  pass = pass && ok;
  details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_degree, long max_abs) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-max_abs, max_abs);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return IntPoly(std::move(c));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

IntPoly mono(long c, std::size_t e) { return IntPoly::monomial(c, e); }

void separation(CheckOutcome& out) {
  const auto t0 = Clock::now();
  const GeneratorBasis sq(false, false, true, false);
  out.expect(member(sq, mono(2, 10)).member, "2x^10 is in <x^2>");
  out.expect(!member(sq, mono(1, 10)).member, "x^10 is not in <x^2>");
  bool evaluated = false;
  for (const auto& d : builtin_derivations())
    if (d.name == "x2-2x10") evaluated = eval_term(d.term, d.environment) == mono(2, 10);
  out.expect(evaluated, "derivation over {x^2} evaluates to 2x^10");
  const double s = seconds_since(t0);
  out.expect(s < 1.0, "finished in " + fmt_seconds(s) + "s (limit 1s)");
}

void predicate_oracle(CheckOutcome& out) {
  struct Case {
    unsigned bits;
    std::size_t cap;
  };
  const Case equal_cases[] = {{4, 16}, {5, 16}, {6, 16}, {7, 16}, {12, 13}, {13, 13},
                              {14, 13}, {15, 13}, {0, 8},  {1, 8},  {2, 8},  {3, 8}};
  for (const auto& c : equal_cases) {
    ClosureConfig cfg;
    cfg.degree_cap = c.cap;
    const auto t0 = Clock::now();
    const CompareReport r = compare_closure_vs_predicate(GeneratorBasis::from_index(c.bits), cfg);
    const double s = seconds_since(t0);
    out.expect(r.equal && s < 60.0, "equality " + r.basis.flags_string() + " D=" + std::to_string(c.cap) +
                                        " missing=" + std::to_string(r.missing.size()) +
                                        " unexplained=" + std::to_string(r.unexplained.size()) + " in " +
                                        fmt_seconds(s) + "s");
  }
  // Containment only needs soundness, so the working degree can stay at D.
  std::size_t violations = 0;
  for (const auto& b : GeneratorBasis::all()) {
    ClosureConfig cfg;
    cfg.degree_cap = 24;
    cfg.work_degree = 24;
    const CompareReport r = compare_closure_vs_predicate(b, cfg);
    violations += r.unexplained.size();
    if (!r.contained) out.expect(false, "containment " + b.flags_string() + " D=24");
  }
  out.expect(violations == 0, "containment for all 16 bases at D=24, violations=" + std::to_string(violations));
}

void x3_fixtures(CheckOutcome& out) {
  const GeneratorBasis cube(false, false, false, true);
  const std::vector<IntPoly> fixtures = {
      mono(1, 3),
      mono(1, 9),
      mono(6, 15),
      mono(3, 15) + mono(3, 21),
      mono(1, 27),
      mono(6, 33),
      mono(3, 15) + mono(3, 39),
      mono(3, 15) + mono(3, 33) + mono(3, 45),
      mono(3, 33) + mono(9, 51),
      mono(3, 33) + mono(3, 57),
      mono(3, 15) + mono(3, 33) + mono(3, 63),
      mono(3, 15) + mono(9, 69),
      mono(3, 33) + mono(9, 75),
  };
  for (const auto& p : fixtures) out.expect(member(cube, p).member, "predicate accepts " + render_poly(p));

  ClosureConfig cfg;
  cfg.degree_cap = 75;
  cfg.work_degree = 225;
  cfg.coeff_cap = 3;
  cfg.combo_width = 3;
  const auto t0 = Clock::now();
  const SaturationRun run = saturate_run({mono(1, 3)}, cfg);
  const double s = seconds_since(t0);
  for (const auto& p : fixtures)
    out.expect(run.lattice.contains(p), "saturation at D=75 contains " + render_poly(p));
  out.expect(s < 600.0, "saturation W=225 coeff_cap=3 combo_width=3 took " + fmt_seconds(s) + "s, " +
                            std::to_string(run.rounds) + " rounds (limit 600s)");
}

void parity_gap(CheckOutcome& out) {
  for (std::size_t j = 1; j <= 3; ++j) {
    ClosureConfig cfg;
    cfg.degree_cap = 30;
    cfg.work_degree = 30;
    const std::size_t target = (std::size_t{1} << (j + 1)) - 2;
    const ParityReport r = parity_coefficient_check(power_gap_generators(j, 30), target, cfg);
    out.expect(r.pass(), "j=" + std::to_string(j) + " coefficient of x^" + std::to_string(target) +
                             " even on all " + std::to_string(r.saturation.lattice.rank()) +
                             " basis rows, violations=" + std::to_string(r.violations.size()));
  }
}

void multinomial_sweeps(CheckOutcome& out) {
  const auto t0 = Clock::now();
  auto line = [](const char* what, const SweepSummary& s) {
    return std::string(what) + " instances=" + std::to_string(s.instances) +
           " applicable=" + std::to_string(s.applicable) + " violations=" + std::to_string(s.violations);
  };
  const SweepSummary a = sweep_lemma_31(2, 2, 6, 3);
  out.expect(a.violations == 0 && a.applicable > 0, line("p=2 s<=2 parts<=6 len<=3", a));
  const SweepSummary b = sweep_lemma_31(3, 2, 9, 3);
  out.expect(b.violations == 0 && b.applicable > 0, line("p=3 s<=2 parts<=9 len<=3", b));
  const SweepSummary c = sweep_lemma_32(3, 3, 8);
  out.expect(c.violations == 0 && c.applicable > 0, line("even multinomials m<=3 n<=3 entries<=8", c));
  const std::uint64_t f = count_residue_identity_failures(10000);
  out.expect(f == 0, "mod 24 / mod 72 residue identities up to 10^4, failures=" + std::to_string(f));
  const double s = seconds_since(t0);
  out.expect(s < 30.0, "finished in " + fmt_seconds(s) + "s (limit 30s)");
}

void pullback(CheckOutcome& out) {
  struct Pair {
    GeneratorBasis big;
    GeneratorBasis small;
    IntPoly a;
  };
  const Pair pairs[] = {
      {GeneratorBasis(false, true, true, false), GeneratorBasis(false, false, true, false), mono(1, 2)},
      {GeneratorBasis(true, true, true, false), GeneratorBasis(true, false, true, false), mono(1, 2)},
      {GeneratorBasis(false, true, false, true), GeneratorBasis(false, false, false, true), mono(1, 3)},
      {GeneratorBasis(true, true, false, true), GeneratorBasis(true, false, false, true), mono(1, 3)},
  };
  std::mt19937_64 rng(0x5eed'0006);
  for (const auto& pr : pairs) {
    // Half the samples are drawn from the predicted lattice so both verdicts occur often.
    const std::vector<IntPoly> rows = predicate_lattice(pr.big, 10).rows();
    std::size_t members = 0, discrepancies = 0;
    for (int n = 0; n < 1000; ++n) {
      IntPoly p;
      if (n % 2 == 0 || rows.empty()) {
        p = random_poly(rng, 10, 4);
      } else {
        std::uniform_int_distribution<long> lam(-3, 3);
        for (const auto& r : rows) p = p + Integer(lam(rng)) * r;
        if (n % 8 == 1) p = p + random_poly(rng, 10, 1);
      }
      const bool lhs = member(pr.big, p).member;
      const bool rhs = member(pr.small, compose(p, pr.a)).member;
      members += lhs;
      discrepancies += lhs != rhs;
    }
    out.expect(discrepancies == 0 && members > 0 && members < 1000,
               "member(<" + pr.big.to_string() + ">, p) iff member(<" + pr.small.to_string() + ">, p o " +
                   render_poly(pr.a) + "): 1000 samples, " + std::to_string(members) +
                   " members, discrepancies=" + std::to_string(discrepancies));
  }
}

void witness_suite(CheckOutcome& out) {
  const auto derivations = builtin_derivations();
  std::size_t verified = 0;
  for (const auto& d : derivations) {
    const bool ok = verify_derivation(d);
    verified += ok;
    if (!ok) out.expect(false, "derivation " + d.name + " does not verify");
  }
  out.expect(verified == derivations.size(),
             std::to_string(verified) + "/" + std::to_string(derivations.size()) + " builtin derivations verify");

  // Lift round-trip: g0 is the cancellable element a, every other label a constant.
  const IntPoly anchors[] = {mono(1, 2), mono(1, 3), IntPoly{0, 1, 2}};
  std::size_t trips = 0, failures = 0;
  for (const auto& d : derivations) {
    for (const auto& a : anchors) {
      std::vector<IntPoly> env(d.environment.size());
      env[0] = a;
      for (std::size_t k = 1; k < env.size(); ++k) env[k] = IntPoly::constant(Integer(long(k) * 3 - 5));
      const Term lifted = lift_witness(d.term, 0);
      ++trips;
      failures += compose(eval_term(lifted, env), a) != eval_term(d.term, env);
    }
  }
  out.expect(failures == 0,
             "lift round-trip on " + std::to_string(trips) + " (derivation, anchor) pairs, failures=" +
                 std::to_string(failures));

  const std::vector<IntPoly> gens{mono(1, 2), mono(1, 3)};
  const std::vector<IntPoly> rows = predicate_lattice(GeneratorBasis(false, false, true, true), 13).rows();
  const auto t0 = Clock::now();
  const auto found = search_witnesses(rows, gens);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool good = found[i] && eval_term(*found[i], gens) == rows[i];
    ok += good;
    if (!good) out.expect(false, "no witness for " + render_poly(rows[i]));
  }
  out.expect(ok == rows.size(), "witnesses for " + std::to_string(ok) + "/" + std::to_string(rows.size()) +
                                    " basis rows of <x2,x3> up to degree 13 in " + fmt_seconds(seconds_since(t0)) +
                                    "s");
}

void algebra_laws(CheckOutcome& out) {
  constexpr int kCases = 10000;
  std::mt19937_64 rng(0x5eed'0008);
  std::size_t assoc = 0, rdist = 0, cancel = 0, absorb = 0, degree = 0;
  for (int n = 0; n < kCases; ++n) {
    const IntPoly p = random_poly(rng, 3, 5), q = random_poly(rng, 3, 5), r = random_poly(rng, 3, 5);
    assoc += compose(compose(p, q), r) != compose(p, compose(q, r));
    rdist += compose(p + q, r) != compose(p, r) + compose(q, r);

    IntPoly a = random_poly(rng, 3, 5);
    if (a.size() < 2) a = a + IntPoly::x();
    const IntPoly q2 = (n % 3 == 0) ? p : p + random_poly(rng, 2, 2);
    cancel += (compose(p, a) == compose(q2, a)) != (p == q2);

    const IntPoly c = IntPoly::constant(Integer(long(n % 41) - 20));
    absorb += compose(c, q) != c;

    if (p.size() >= 2 && q.size() >= 2) degree += compose(p, q).size() - 1 != (p.size() - 1) * (q.size() - 1);
  }
  auto line = [](const char* law, std::size_t bad) {
    return std::string(law) + ": " + std::to_string(kCases) + " cases, violations=" + std::to_string(bad);
  };
  out.expect(assoc == 0, line("associativity", assoc));
  out.expect(rdist == 0, line("right distributivity", rdist));
  out.expect(cancel == 0, line("right cancellation by degree >= 1", cancel));
  out.expect(absorb == 0, line("constant absorption", absorb));
  out.expect(degree == 0, line("degree multiplicativity", degree));
  const IntPoly x = IntPoly::x(), sq = mono(1, 2);
  const IntPoly left = compose(sq, x + x), right = compose(sq, x) + compose(sq, x);
  out.expect(left != right, "left distributivity fails: x^2 o (x + x) = " + render_poly(left) + ", x^2 o x + x^2 o x = " +
                                render_poly(right));
}

void descending_chain(CheckOutcome& out) {
  out.expect(compose(mono(1, 4), mono(1, 4)) == mono(1, 16), "x^4 o x^4 = x^16");
  ClosureConfig cfg;
  cfg.degree_cap = 64;
  cfg.work_degree = 64;
  const CoeffLattice lower = saturate({mono(1, 16)}, cfg);
  const CoeffLattice upper = saturate({mono(1, 4)}, cfg);
  out.expect(lower.is_sublattice_of(upper), "saturate({x^16}) within saturate({x^4}) at D=64 (ranks " +
                                                std::to_string(lower.rank()) + ", " + std::to_string(upper.rank()) +
                                                ")");
  out.expect(!lower.contains(mono(1, 4)), "x^4 not in saturate({x^16}) at D=64");
}

}  // namespace

const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks = {
      {1, "separation", "2x^10 in <x^2>, x^10 not", separation},
      {2, "predicate-oracle", "saturation matches the predicate lattices", predicate_oracle},
      {3, "x3-fixtures", "listed elements of <x^3> up to degree 75", x3_fixtures},
      {4, "parity-gap", "even coefficient at the skipped power x^(2^(j+1)-2)", parity_gap},
      {5, "multinomial-sweeps", "multinomial divisibility sweeps and residue identities", multinomial_sweeps},
      {6, "pullback", "membership pulls back along x^2 and x^3", pullback},
      {7, "witness-suite", "derivations, lifting and witness search", witness_suite},
      {8, "algebra-laws", "nearring laws on random polynomials", algebra_laws},
      {9, "descending-chain", "<x^16> below <x^4> without x^4", descending_chain},
  };
  return checks;
}

const AcceptanceCheck* find_check(const std::string& name) {
  for (const auto& c : acceptance_checks())
    if (c.key == name || std::to_string(c.number) == name) return &c;
  return nullptr;
}

CheckRun run_check(const AcceptanceCheck& c) {
  CheckRun run;
  run.check = &c;
  const auto t0 = Clock::now();
  try {
    c.body(run.outcome);
  } catch (const std::exception& e) {
    run.outcome.expect(false, std::string("exception: ") + e.what());
  }
  run.seconds = seconds_since(t0);
  return run;
}

void print_check_run(std::ostream& os, const CheckRun& run, bool verbose) {
  os << "CHECK " << run.check->number << ' ' << run.check->key << ' ' << (run.outcome.pass ? "PASS" : "FAIL")
     << " (" << fmt_seconds(run.seconds) << "s) " << run.check->title << '\n';
  if (verbose)
    for (const auto& d : run.outcome.details) os << "    " << d << '\n';
}

}  // namespace nearring
