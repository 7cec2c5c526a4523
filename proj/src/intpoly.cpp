#include "nearring/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace nearring {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<std::size_t> IntPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back(i);
  return out;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  const auto& big = p.size() >= q.size() ? p.coeffs_ : q.coeffs_;
  const auto& small = p.size() >= q.size() ? q.coeffs_ : p.coeffs_;
  std::vector<Integer> r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<Integer> r = p.coeffs_;
  if (r.size() < q.size()) r.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> r(p.size() + q.size() - 1);
  const auto qs = q.support();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j : qs) mpz_addmul(r[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, const IntPoly& p) {
  if (c == 0) return {};
  std::vector<Integer> r = p.coeffs_;
  for (auto& v : r) v *= c;
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

// Horner: p o q = (((c_n q + c_{n-1}) q + ...) q + c_0).
IntPoly compose(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return {};
  const auto& c = p.coeffs();
  IntPoly acc = IntPoly::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * q;
    if (c[i] != 0) acc = acc + IntPoly::constant(c[i]);
  }
  return acc;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    std::vector<Integer> acc;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      term(negative, acc);
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      negative = op == '-';
      ++pos_;
    }
    return IntPoly(std::move(acc));
  }

 private:
  void term(bool negative, std::vector<Integer>& acc) {
    skip_ws();
    const std::size_t start = pos_;
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      have_coeff = true;
    }
    skip_ws();
    std::size_t exponent = 0;
    if (peek() == 'x' || peek() == 'X') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent after '^'", pos_);
        const std::string e = digits();
        if (e.size() > 6) throw ParseError("exponent too large", pos_);
        exponent = std::stoul(e);
      }
    } else if (!have_coeff) {
      throw ParseError(at_end() ? "unexpected end of input" : std::string("unexpected character '") + peek() + "'",
                       start);
    }
    if (negative) coeff = -coeff;
    if (acc.size() <= exponent) acc.resize(exponent + 1);
    acc[exponent] += coeff;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string render_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Integer magnitude = abs(c[i]);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || magnitude != 1) os << magnitude.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << render_poly(p); }

}  // namespace nearring
