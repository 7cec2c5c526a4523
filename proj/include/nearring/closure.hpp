#pragma once

/**
 * @file closure.hpp
 * @brief Bounded saturation of a generating set under +, - and left composition.
 *
 * Correctness rests on the generation criterion for nearrings: if a set M contains F,
 * lies inside <F>, is closed under + and -, and satisfies F o M within M, then M = <F>.
 * So it suffices to close F under the additive group operations and under q -> g o q
 * for the generators g only; composing on the left by arbitrary elements adds nothing.
 *
 * The engine works inside Z^(W+1) for a working degree W >= D, enumerates right
 * arguments q as small integer combinations of the current basis rows, inserts g o q
 * whenever deg(g) * deg(q) <= W, and repeats until the HNF stops changing. Everything
 * it finds is in <F> (soundness); whether it finds all of <F> restricted to degree <= D
 * depends on the caps. Elements of degree <= D that only arise as differences of
 * higher-degree elements need W > D.
 */

#include <cstddef>
#include <vector>

#include "nearring/lattice.hpp"
#include "nearring/predicates.hpp"

namespace nearring {

struct ClosureConfig {
  std::size_t degree_cap = 8;
  std::size_t coeff_cap = 3;     ///< max |lambda| in right-argument combinations
  std::size_t max_rounds = 32;
  std::size_t combo_width = 3;   ///< max basis rows combined into one right argument
  std::size_t work_degree = 0;   ///< 0 means 2 * degree_cap + 1
  unsigned threads = 0;          ///< 0 means NEARRING_THREADS or hardware concurrency

  // The default leaves room for the usual detour: c * x^i obtained as a difference of
  // products whose other terms cancel, with those terms up to roughly twice deg x^i.
  std::size_t effective_work_degree() const { return work_degree == 0 ? 2 * degree_cap + 1 : work_degree; }
  /// Throws InfeasibleConfig.
  void validate() const;
};

class InfeasibleConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SaturationRun {
  CoeffLattice lattice;  ///< restricted to degree_cap
  std::size_t rounds = 0;
  bool fixpoint = false;       ///< false if max_rounds was hit first
  std::size_t candidates = 0;  ///< compositions evaluated
};

SaturationRun saturate_run(const std::vector<IntPoly>& generators, const ClosureConfig& config);
inline CoeffLattice saturate(const std::vector<IntPoly>& generators, const ClosureConfig& config) {
  return saturate_run(generators, config).lattice;
}

inline bool lattice_contains(const CoeffLattice& lattice, const IntPoly& p) { return lattice.contains(p); }

/// Lattice of all coefficient vectors of degree <= degree_cap satisfying the
/// characterization of `basis`.
CoeffLattice predicate_lattice(GeneratorBasis basis, std::size_t degree_cap);

struct CompareReport {
  GeneratorBasis basis;
  SaturationRun saturation;
  CoeffLattice predicted;
  bool contained = false;             ///< saturated lattice lies inside the predicted one
  bool equal = false;
  std::vector<IntPoly> unexplained;   ///< saturated rows outside the predicted lattice
  std::vector<IntPoly> missing;       ///< predicted rows the saturation did not reach
};

CompareReport compare_closure_vs_predicate(GeneratorBasis basis, const ClosureConfig& config);

struct ParityReport {
  std::size_t target_exponent = 0;
  SaturationRun saturation;
  std::vector<IntPoly> violations;  ///< basis rows with an odd coefficient at the target
  bool pass() const { return violations.empty(); }
};

/// Checks that every element found by saturation has an even coefficient at x^target.
ParityReport parity_coefficient_check(const std::vector<IntPoly>& generators, std::size_t target_exponent,
                                      const ClosureConfig& config);

/// x^(2^(i+1) - 2) for i >= 1, i != skip, degree <= degree_cap.
std::vector<IntPoly> power_gap_generators(std::size_t skip, std::size_t degree_cap);

/// Worker count from NEARRING_THREADS, capped by hardware concurrency; at least 1.
unsigned default_thread_count();

}  // namespace nearring
