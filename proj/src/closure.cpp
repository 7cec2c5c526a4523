#include "nearring/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace nearring {

void ClosureConfig::validate() const {
  if (coeff_cap < 1) throw InfeasibleConfig("coeff_cap must be at least 1");
  if (combo_width < 1) throw InfeasibleConfig("combo_width must be at least 1");
  if (work_degree != 0 && work_degree < degree_cap)
    throw InfeasibleConfig("work_degree must not be below degree_cap");
  if (effective_work_degree() > 4096) throw InfeasibleConfig("working degree too large");
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NEARRING_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return std::min<unsigned>(static_cast<unsigned>(n), hw);
    } catch (const std::exception&) {
    }
  }
  return hw;
}

namespace {

// All index subsets of {0..n-1} with 1..width elements, each ascending.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t width) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == width) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t degree_of(const IntPoly& p) { return p.is_zero() ? 0 : p.size() - 1; }

// One round of candidate generation: every g o q with q a small combination of rows,
// reduced modulo the current lattice. Only nonzero residues are returned.
std::vector<IntPoly> round_candidates(const CoeffLattice& lattice, const std::vector<IntPoly>& composers,
                                      const ClosureConfig& cfg, std::size_t& evaluated) {
  const std::size_t work = lattice.degree_cap();
  const std::vector<IntPoly> rows = lattice.rows();
  std::size_t min_deg = work;
  for (const auto& g : composers) min_deg = std::min(min_deg, degree_of(g));
  std::size_t usable = 0;
  while (usable < rows.size() && degree_of(rows[usable]) * min_deg <= work) ++usable;

  const auto subsets = index_subsets(usable, cfg.combo_width);
  const long cap = static_cast<long>(cfg.coeff_cap);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> count{0};
  std::mutex out_mutex;
  std::vector<IntPoly> out;

  auto worker = [&] {
    std::vector<IntPoly> local;
    std::size_t local_count = 0;
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= subsets.size()) break;
      const auto& idx = subsets[s];
      const std::size_t dq = degree_of(rows[idx.back()]);
      std::vector<long> lambda(idx.size(), -cap);
      for (;;) {
        IntPoly q;
        for (std::size_t k = 0; k < idx.size(); ++k) q = q + Integer(lambda[k]) * rows[idx[k]];
        for (const auto& g : composers) {
          if (degree_of(g) * dq > work) continue;
          ++local_count;
          IntPoly r = lattice.residue(compose(g, q));
          if (!r.is_zero()) local.push_back(std::move(r));
        }
        std::size_t k = 0;
        for (; k < lambda.size(); ++k) {
          lambda[k] = lambda[k] == -1 ? 1 : lambda[k] + 1;
          if (lambda[k] <= cap) break;
          lambda[k] = -cap;
        }
        if (k == lambda.size()) break;
      }
    }
    count += local_count;
    std::lock_guard lock(out_mutex);
    for (auto& p : local) out.push_back(std::move(p));
  };

  const unsigned n_threads = cfg.threads ? cfg.threads : default_thread_count();
  if (n_threads <= 1 || subsets.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  evaluated += count.load();
  return out;
}

}  // namespace

SaturationRun saturate_run(const std::vector<IntPoly>& generators, const ClosureConfig& config) {
  config.validate();
  const std::size_t work = config.effective_work_degree();
  CoeffLattice lattice(work);
  std::vector<IntPoly> composers;
  for (const auto& g : generators) {
    if (g.is_zero() || degree_of(g) > work) continue;
    lattice.insert(g);
    // Constants absorb every right argument (c o q = c) and x o q = q is already a
    // member, so neither can add anything as a left factor.
    if (degree_of(g) >= 1 && g != IntPoly::x()) composers.push_back(g);
  }
  lattice.canonicalize();

  SaturationRun run{CoeffLattice(config.degree_cap), 0, composers.empty(), 0};
  while (!run.fixpoint && run.rounds < config.max_rounds) {
    ++run.rounds;
    auto fresh = round_candidates(lattice, composers, config, run.candidates);
    bool grew = false;
    for (const auto& p : fresh) grew = lattice.insert(p) || grew;
    lattice.canonicalize();
    if (!grew) run.fixpoint = true;
  }
  run.lattice = lattice.restricted(config.degree_cap);
  return run;
}

CoeffLattice predicate_lattice(GeneratorBasis basis, std::size_t degree_cap) {
  const ConditionSet cs = predicate_conditions(basis, degree_cap);
  std::vector<Integer> modulus(degree_cap + 1, Integer(1));
  for (const auto& d : cs.divisibility) modulus[d.index] = lcm(modulus[d.index], d.modulus);
  for (std::size_t z : cs.zeros) modulus[z] = 0;

  std::vector<IntPoly> gens;
  for (std::size_t i = 0; i <= degree_cap; ++i)
    if (modulus[i] != 0) gens.push_back(IntPoly::monomial(modulus[i], i));

  // Intersect with the kernel of each "sum over S is even" functional: keep rows where it
  // is even, double one odd row, and shift the other odd rows by that row.
  for (const auto& par : cs.parity) {
    auto odd = [&](const IntPoly& p) {
      Integer s = 0;
      for (std::size_t i : par.indices) s += p.coeff(i);
      return mpz_odd_p(s.get_mpz_t()) != 0;
    };
    auto pivot = std::find_if(gens.begin(), gens.end(), odd);
    if (pivot == gens.end()) continue;
    const IntPoly base = *pivot;
    for (auto& g : gens)
      if (odd(g)) g = g - base;
    *pivot = Integer(2) * base;
  }
  return CoeffLattice::from_polys(degree_cap, gens);
}

CompareReport compare_closure_vs_predicate(GeneratorBasis basis, const ClosureConfig& config) {
  CompareReport rep{basis, saturate_run(basis.generators(), config), predicate_lattice(basis, config.degree_cap),
                    false, false, {}, {}};
  for (const auto& r : rep.saturation.lattice.rows())
    if (!rep.predicted.contains(r)) rep.unexplained.push_back(r);
  for (const auto& r : rep.predicted.rows())
    if (!rep.saturation.lattice.contains(r)) rep.missing.push_back(r);
  rep.contained = rep.unexplained.empty();
  rep.equal = rep.contained && rep.missing.empty();
  return rep;
}

ParityReport parity_coefficient_check(const std::vector<IntPoly>& generators, std::size_t target_exponent,
                                      const ClosureConfig& config) {
  if (target_exponent > config.degree_cap)
    throw std::invalid_argument("parity_coefficient_check: target exponent exceeds the degree cap");
  ParityReport rep{target_exponent, saturate_run(generators, config), {}};
  for (const auto& r : rep.saturation.lattice.rows())
    if (mpz_odd_p(r.coeff(target_exponent).get_mpz_t())) rep.violations.push_back(r);
  return rep;
}

std::vector<IntPoly> power_gap_generators(std::size_t skip, std::size_t degree_cap) {
  std::vector<IntPoly> out;
  for (std::size_t i = 1; i < 60; ++i) {
    const std::size_t e = (std::size_t{1} << (i + 1)) - 2;
    if (e > degree_cap) break;
    if (i != skip) out.push_back(IntPoly::monomial(1, e));
  }
  return out;
}

}  // namespace nearring
