#pragma once

/**
 * @file predicates.hpp
 * @brief Membership tests for the sixteen subnearrings generated by subsets of {1, x, x^2, x^3}.
 *
 * Every characterization is a conjunction of three kinds of linear conditions on the
 * coefficient vector: forced zeros, per-index divisibility, and parity of a coefficient
 * sum over a residue-class set. predicate_conditions() exports them for a degree range,
 * member() evaluates them on a polynomial and reports every violated one.
 *
 * The rows for {x, x^2}, {1, x, x^2}, {1, x, x^3} and {1, x, x^2, x^3} restate results
 * proved elsewhere; their condition ids carry an "ext-" prefix.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearring/intpoly.hpp"

namespace nearring {

/// A subset of {1, x, x^2, x^3}, as the flags (a0, a1, a2, a3).
class GeneratorBasis {
 public:
  constexpr GeneratorBasis() = default;
  constexpr GeneratorBasis(bool one, bool x, bool x2, bool x3) : flags_{one, x, x2, x3} {}

  /// Bit i set iff x^i is included.
  static constexpr GeneratorBasis from_index(unsigned bits) {
    return GeneratorBasis(bits & 1u, bits & 2u, bits & 4u, bits & 8u);
  }
  static std::array<GeneratorBasis, 16> all();

  /// Comma-separated tokens from {1, x, x2, x3}; "none" or "" for the empty set.
  static GeneratorBasis parse(std::string_view text);

  constexpr bool has(std::size_t exponent) const { return flags_.at(exponent); }
  constexpr unsigned index() const {
    return unsigned(flags_[0]) | unsigned(flags_[1]) << 1 | unsigned(flags_[2]) << 2 | unsigned(flags_[3]) << 3;
  }
  /// Componentwise inclusion.
  constexpr bool subset_of(const GeneratorBasis& other) const {
    for (std::size_t i = 0; i < 4; ++i)
      if (flags_[i] && !other.flags_[i]) return false;
    return true;
  }

  std::vector<IntPoly> generators() const;
  /// "(a0,a1,a2,a3)"
  std::string flags_string() const;
  /// "1,x,x2" style; "none" when empty.
  std::string to_string() const;

  friend constexpr bool operator==(const GeneratorBasis&, const GeneratorBasis&) = default;

 private:
  std::array<bool, 4> flags_{};
};

struct DivisibilityCondition {
  std::size_t index;
  Integer modulus;
  friend bool operator==(const DivisibilityCondition&, const DivisibilityCondition&) = default;
};

/// sum of c_j over `indices` must be even.
struct ParityCondition {
  std::string set_name;
  std::vector<std::size_t> indices;
  friend bool operator==(const ParityCondition&, const ParityCondition&) = default;
};

struct ConditionSet {
  std::size_t degree_cap = 0;
  std::vector<std::size_t> zeros;
  std::vector<DivisibilityCondition> divisibility;
  std::vector<ParityCondition> parity;
  bool external = false;  ///< row restates a result proved elsewhere
};

ConditionSet predicate_conditions(GeneratorBasis basis, std::size_t degree_cap);

struct Violation {
  std::string condition;  ///< e.g. "zero", "div", "parity-A", or "ext-div"
  std::string index;      ///< coefficient index, or the set name for parity sums
  std::string need;
  std::string got;
};

struct MembershipVerdict {
  bool member = true;
  std::vector<Violation> violations;
};

MembershipVerdict member(GeneratorBasis basis, const IntPoly& p);

/// One "COND <id> idx=<i> need=<constraint> got=<value>" line per violation.
std::string format_violations(const MembershipVerdict& verdict);

}  // namespace nearring
