#pragma once

/**
 * @file intpoly.hpp
 * @brief Dense integer polynomials with composition.
 *
 * IntPoly is the universe element of the composition nearring (Z[x], +, o).
 * Coefficients are arbitrary precision; index i holds the coefficient of x^i
 * and the vector never ends in a zero, so the zero polynomial is empty.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nearring {

using Integer = mpz_class;

/// Polynomial degree with a distinguished value for the zero polynomial.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree{}; }
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

  constexpr bool is_finite() const { return finite_; }
  std::size_t value() const {
    if (!finite_) throw std::domain_error("degree of the zero polynomial");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  /// Positions of the nonzero coefficients, ascending.
  std::vector<std::size_t> support() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const Integer& c, const IntPoly& p);
  friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

inline IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
inline IntPoly sub(const IntPoly& p, const IntPoly& q) { return p - q; }
inline IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

/// p o q, i.e. p(q(x)).
IntPoly compose(const IntPoly& p, const IntPoly& q);

inline Integer coeff_at(const IntPoly& p, std::size_t i) { return p.coeff(i); }

IntPoly pow(const IntPoly& p, unsigned exponent);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::string_view kPolyGrammarHint =
    "poly := term (('+'|'-') term)*, term := [integer] ['x' ['^' natural]], e.g. \"2x^10\", "
    "\"-3x^3+1\", \"0\"";

IntPoly parse_poly(std::string_view text);
std::string render_poly(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace nearring
