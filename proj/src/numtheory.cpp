#include "nearring/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace nearring {

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("digit_sum: base must be at least 2");
  std::uint64_t s = 0;
  for (; n; n /= base) s += n % base;
  return s;
}

Integer multinomial(std::uint64_t k, std::span<const std::uint64_t> parts) {
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  if (total != k) throw std::invalid_argument("multinomial: parts do not sum to k");
  // k!/(k_1!...k_n!) = prod_i binom(k_1 + ... + k_i, k_i)
  Integer result = 1;
  Integer b;
  std::uint64_t running = 0;
  for (auto v : parts) {
    running += v;
    mpz_bin_uiui(b.get_mpz_t(), running, v);
    result *= b;
  }
  return result;
}

std::uint64_t padic_valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("padic_valuation: valuation of zero is infinite");
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
  Integer rest;
  Integer prime(static_cast<unsigned long>(p));
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
}

ResidueClassSet::ResidueClassSet(std::string name, std::uint64_t modulus, std::set<std::uint64_t> residues,
                                 std::set<std::uint64_t> exclusions)
    : name_(std::move(name)), modulus_(modulus), residues_(std::move(residues)), exclusions_(std::move(exclusions)) {
  if (modulus_ == 0) throw std::invalid_argument("ResidueClassSet: modulus must be positive");
  if (residues_.empty()) throw std::invalid_argument("ResidueClassSet: residues must be nonempty");
  for (auto r : residues_)
    if (r >= modulus_) throw std::invalid_argument("ResidueClassSet: residue out of range");
}

std::vector<std::size_t> ResidueClassSet::members_upto(std::size_t bound) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

const StandardSets& standard_sets() {
  static const StandardSets sets{
      ResidueClassSet("A", 24, {15, 21}),
      ResidueClassSet("B", 72, {3, 33, 45, 51, 57, 63}, {3}),
      ResidueClassSet("C", 8, {5, 7}),
      ResidueClassSet("D", 24, {1, 11, 15, 17, 19, 21}, {1}),
  };
  return sets;
}

LemmaInstance check_lemma_31(std::uint64_t p, std::uint64_t s, std::span<const std::uint64_t> parts,
                             std::size_t j) {
  if (parts.empty() || j >= parts.size()) throw std::invalid_argument("check_lemma_31: bad part index");
  std::uint64_t k = 0;
  for (auto v : parts) k += v;
  Integer ps;
  mpz_ui_pow_ui(ps.get_mpz_t(), p, s);
  LemmaInstance out;
  out.hypotheses = (Integer(static_cast<unsigned long>(k)) % ps == 0) && std::gcd(parts[j], p) == 1;
  if (out.hypotheses) out.conclusion = mpz_divisible_p(multinomial(k, parts).get_mpz_t(), ps.get_mpz_t()) != 0;
  return out;
}

LemmaInstance check_lemma_32(std::span<const std::uint64_t> ls, std::span<const std::uint64_t> ks,
                             std::uint64_t m) {
  if (ls.size() != ks.size()) throw std::invalid_argument("check_lemma_32: length mismatch");
  std::uint64_t k = 0;
  Integer weighted = 0;
  bool ls_even = true;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    k += ks[i];
    weighted += Integer(static_cast<unsigned long>(ls[i])) * static_cast<unsigned long>(ks[i]);
    ls_even = ls_even && ls[i] % 2 == 0;
  }
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), 2, m + 1);
  target -= 2;
  LemmaInstance out;
  // m ranges over the positive integers; at m = 0 the target is 0 and k = 0 is a counterexample.
  out.hypotheses = m >= 1 && !ls.empty() && k % 2 == 0 && ls_even && weighted == target;
  if (out.hypotheses) out.conclusion = mpz_even_p(multinomial(k, ks).get_mpz_t()) != 0;
  return out;
}

namespace {

// Calls f on every tuple of the given length over {0..max_entry}.
template <typename F>
void for_each_tuple(std::size_t len, std::uint64_t max_entry, F&& f) {
  std::vector<std::uint64_t> t(len, 0);
  for (;;) {
    f(std::span<const std::uint64_t>(t));
    std::size_t i = 0;
    while (i < len && t[i] == max_entry) t[i++] = 0;
    if (i == len) return;
    ++t[i];
  }
}

void tally(SweepSummary& s, LemmaInstance r) {
  ++s.instances;
  if (r.hypotheses) ++s.applicable;
  if (r.violated()) ++s.violations;
}

}  // namespace

SweepSummary sweep_lemma_31(std::uint64_t p, std::uint64_t max_s, std::uint64_t max_part, std::size_t max_len) {
  SweepSummary summary;
  for (std::size_t len = 1; len <= max_len; ++len)
    for_each_tuple(len, max_part, [&](std::span<const std::uint64_t> parts) {
      for (std::uint64_t s = 1; s <= max_s; ++s)
        for (std::size_t j = 0; j < len; ++j) tally(summary, check_lemma_31(p, s, parts, j));
    });
  return summary;
}

SweepSummary sweep_lemma_32(std::uint64_t max_m, std::size_t max_n, std::uint64_t max_entry) {
  SweepSummary summary;
  for (std::size_t n = 1; n <= max_n; ++n)
    for_each_tuple(n, max_entry, [&](std::span<const std::uint64_t> ls) {
      const std::vector<std::uint64_t> lcopy(ls.begin(), ls.end());
      for_each_tuple(n, max_entry, [&](std::span<const std::uint64_t> ks) {
        for (std::uint64_t m = 0; m <= max_m; ++m) tally(summary, check_lemma_32(lcopy, ks, m));
      });
    });
  return summary;
}

std::uint64_t count_residue_identity_failures(std::uint64_t bound) {
  const std::set<std::uint64_t> image{3, 33, 45, 51, 57, 63};
  const std::set<std::uint64_t> preimage{15, 21, 39, 45, 63, 69};
  std::uint64_t failures = 0;
  for (std::uint64_t k = 3; k <= bound; k += 6) {
    const bool a = ((3 * k) % 24 == 21) == (k % 24 == 15);
    const bool b = ((3 * k) % 24 == 15) == (k % 24 == 21);
    const bool c = image.contains((3 * k) % 72) == preimage.contains(k % 72);
    if (!(a && b && c)) ++failures;
  }
  return failures;
}

}  // namespace nearring
