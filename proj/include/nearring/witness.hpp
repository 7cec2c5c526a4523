#pragma once

/**
 * @file witness.hpp
 * @brief Derivation terms certifying membership in a generated subnearring.
 *
 * A Term is an expression over 0, +, -, o, generator leaves g0, g1, ... and the
 * identity leaf (the polynomial x, the left identity of Z[x]). Terms are immutable and
 * share subterms, so a term is a DAG; evaluation memoizes on nodes. Two derivations are
 * equal when they evaluate to the same polynomial, not when their shapes agree.
 *
 * Text form is an s-expression: "(add a b)", "(sub a b)", "(comp a b)", "gK", "id", "0".
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nearring/intpoly.hpp"

namespace nearring {

class Term {
 public:
  enum class Kind { Zero, Gen, Identity, Add, Sub, Compose };

  Term();  // Zero
  static Term zero() { return Term(); }
  static Term gen(std::size_t label);
  static Term identity();
  static Term add(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term compose(Term outer, Term inner);

  Kind kind() const;
  std::size_t label() const;  ///< Gen only
  const Term& lhs() const;    ///< binary nodes only
  const Term& rhs() const;
  /// Stable node identity, for memoization.
  const void* node_id() const { return node_.get(); }

  friend Term operator+(Term a, Term b) { return add(std::move(a), std::move(b)); }
  friend Term operator-(Term a, Term b) { return sub(std::move(a), std::move(b)); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Term comp(Term outer, Term inner) { return Term::compose(std::move(outer), std::move(inner)); }

/// n * t as a sum built by doubling; negative n gives 0 - |n| * t.
Term scale(const Integer& n, const Term& t);
inline Term operator*(long n, const Term& t) { return scale(Integer(n), t); }

class UnresolvedLabel : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Evaluates t with g_k bound to env[k] and the identity leaf bound to x.
IntPoly eval_term(const Term& t, std::span<const IntPoly> env);

/// Number of distinct nodes and of nodes in the fully expanded tree (saturating).
std::size_t dag_size(const Term& t);
std::size_t tree_size(const Term& t);
/// Largest generator label used, or nullopt if none.
std::optional<std::size_t> max_label(const Term& t);
bool uses_identity(const Term& t);

std::string to_sexpr(const Term& t);
/// Throws ParseError.
Term parse_sexpr(std::string_view text);

struct Derivation {
  std::string name;
  Term term;
  std::vector<IntPoly> environment;
  IntPoly claimed_value;
};

/// Exact check eval_term(term, environment) == claimed_value. Unresolvable labels give false.
bool verify_derivation(const Derivation& d);

/// The explicit identities from the constructions for <x^2>, <x^2, x^3>, <x, x^2, x^3>
/// and <x^3>, each with its generator environment and claimed value.
std::vector<Derivation> builtin_derivations();

/// Lifting map behind the pullback property. Rewrites Gen(cancellable) to the identity leaf and
/// the right operand of every composition recursively; other generators are kept.
/// If the remaining generators are bound to constants and Gen(cancellable) to a, then
/// eval(lift(t)) o a = eval(t). Throws std::invalid_argument if t contains the identity leaf.
Term lift_witness(const Term& t, std::size_t cancellable = 0);

struct SearchBounds {
  std::size_t max_depth = 6;    ///< rounds of left composition
  std::size_t coeff_cap = 2;
  std::size_t combo_width = 2;
  std::size_t work_degree = 0;  ///< 0 means max(3 * deg(target), max generator degree)
  unsigned threads = 0;
};

/// Looks for a term over the generators evaluating to target. A returned term always
/// verifies; nullopt only means nothing was found within the bounds.
std::optional<Term> search_witness(const IntPoly& target, const std::vector<IntPoly>& generators,
                                   const SearchBounds& bounds = {});

/// Same search for several targets sharing one exploration.
std::vector<std::optional<Term>> search_witnesses(std::span<const IntPoly> targets,
                                                  const std::vector<IntPoly>& generators,
                                                  const SearchBounds& bounds = {});

}  // namespace nearring
