#pragma once

// Digit sums, multinomial coefficients, valuations and residue-class sets,
// plus brute-force checkers for two multinomial divisibility statements.

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nearring/intpoly.hpp"

namespace nearring {

/// Sum of the base-`base` digits of n. Throws std::invalid_argument for base < 2.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

/// k! / (k_1! ... k_n!), computed as a product of binomials.
/// Throws std::invalid_argument when the parts do not sum to k.
Integer multinomial(std::uint64_t k, std::span<const std::uint64_t> parts);

/// Largest e with p^e | n. Throws std::domain_error for n == 0.
std::uint64_t padic_valuation(const Integer& n, std::uint64_t p);

/// {n >= 0 : n mod modulus in residues} minus a finite exclusion set.
class ResidueClassSet {
 public:
  ResidueClassSet(std::string name, std::uint64_t modulus, std::set<std::uint64_t> residues,
                  std::set<std::uint64_t> exclusions = {});

  bool contains(std::uint64_t n) const {
    return residues_.contains(n % modulus_) && !exclusions_.contains(n);
  }
  /// Members in [0, bound], ascending.
  std::vector<std::size_t> members_upto(std::size_t bound) const;

  const std::string& name() const { return name_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::set<std::uint64_t>& residues() const { return residues_; }
  const std::set<std::uint64_t>& exclusions() const { return exclusions_; }

 private:
  std::string name_;
  std::uint64_t modulus_;
  std::set<std::uint64_t> residues_;
  std::set<std::uint64_t> exclusions_;
};

struct StandardSets {
  ResidueClassSet A;
  ResidueClassSet B;
  ResidueClassSet C;
  ResidueClassSet D;
};

/// The four parity-constraint index sets used by the x^3 characterizations.
const StandardSets& standard_sets();

/// Outcome of evaluating one instance of a conditional divisibility statement.
struct LemmaInstance {
  bool hypotheses = false;  ///< the hypotheses hold for this instance
  bool conclusion = true;   ///< only meaningful when hypotheses hold
  bool violated() const { return hypotheses && !conclusion; }
};

/// If p^s | sum(parts) and gcd(parts[j], p) = 1 then p^s | multinomial(sum, parts).
LemmaInstance check_lemma_31(std::uint64_t p, std::uint64_t s, std::span<const std::uint64_t> parts,
                             std::size_t j);

/// For m >= 1: if sum(ks) is even, every l_i is even and sum l_i k_i = 2^(m+1) - 2,
/// then multinomial(sum(ks), ks) is even.
LemmaInstance check_lemma_32(std::span<const std::uint64_t> ls, std::span<const std::uint64_t> ks,
                             std::uint64_t m);

struct SweepSummary {
  std::uint64_t instances = 0;  ///< tuples examined
  std::uint64_t applicable = 0; ///< tuples where the hypotheses held
  std::uint64_t violations = 0;
};

/// All parts tuples of length 1..max_len over {0..max_part}, every j, s in 1..max_s.
SweepSummary sweep_lemma_31(std::uint64_t p, std::uint64_t max_s, std::uint64_t max_part, std::size_t max_len);

/// m in 0..max_m, n in 1..max_n, l_i and k_i in {0..max_entry}.
SweepSummary sweep_lemma_32(std::uint64_t max_m, std::size_t max_n, std::uint64_t max_entry);

/// Residue identities behind the parity conditions for x^3: for k = 3 mod 6 up to bound,
/// 3k = 21 (24) iff k = 15 (24), 3k = 15 (24) iff k = 21 (24), and
/// 3k mod 72 in {3,33,45,51,57,63} iff k mod 72 in {15,21,39,45,63,69}.
/// Returns the number of k for which any of the three equivalences fails.
std::uint64_t count_residue_identity_failures(std::uint64_t bound);

}  // namespace nearring
