#include "nearring/predicates.hpp"

#include <sstream>
#include <stdexcept>

#include "nearring/numtheory.hpp"

namespace nearring {

std::array<GeneratorBasis, 16> GeneratorBasis::all() {
  std::array<GeneratorBasis, 16> out;
  for (unsigned i = 0; i < 16; ++i) out[i] = from_index(i);
  return out;
}

GeneratorBasis GeneratorBasis::parse(std::string_view text) {
  GeneratorBasis b;
  if (text.empty() || text == "none") return b;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "1") b.flags_[0] = true;
    else if (tok == "x" || tok == "x1" || tok == "x^1") b.flags_[1] = true;
    else if (tok == "x2" || tok == "x^2") b.flags_[2] = true;
    else if (tok == "x3" || tok == "x^3") b.flags_[3] = true;
    else throw std::invalid_argument("unknown basis token '" + std::string(tok) + "' (expected 1, x, x2, x3)");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return b;
}

std::vector<IntPoly> GeneratorBasis::generators() const {
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < 4; ++i)
    if (flags_[i]) out.push_back(IntPoly::monomial(1, i));
  return out;
}

std::string GeneratorBasis::flags_string() const {
  std::ostringstream os;
  os << '(' << flags_[0] << ',' << flags_[1] << ',' << flags_[2] << ',' << flags_[3] << ')';
  return os.str();
}

std::string GeneratorBasis::to_string() const {
  static constexpr const char* names[] = {"1", "x", "x2", "x3"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!flags_[i]) continue;
    if (!out.empty()) out += ',';
    out += names[i];
  }
  return out.empty() ? "none" : out;
}

namespace {

Integer power(unsigned long base, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// 2^(s_2(i) - 1), i >= 1.
Integer binary_weight_modulus(std::size_t i) { return power(2, digit_sum(i, 2) - 1); }

// 3^((s_3(i) - 1) / 2); s_3(i) is odd for every odd i.
Integer ternary_odd_modulus(std::size_t i) {
  const auto s = digit_sum(i, 3);
  if (s % 2 == 0) throw std::logic_error("ternary digit sum of " + std::to_string(i) + " is even");
  return power(3, (s - 1) / 2);
}

Integer ternary_floor_modulus(std::size_t i) { return power(3, digit_sum(i, 3) / 2); }

void add_parity(ConditionSet& cs, const ResidueClassSet& set) {
  auto idx = set.members_upto(cs.degree_cap);
  if (!idx.empty()) cs.parity.push_back({set.name(), std::move(idx)});
}

}  // namespace

ConditionSet predicate_conditions(GeneratorBasis basis, std::size_t cap) {
  ConditionSet cs;
  cs.degree_cap = cap;
  const auto& sets = standard_sets();
  auto zero_if = [&](auto pred) {
    for (std::size_t i = 0; i <= cap; ++i)
      if (pred(i)) cs.zeros.push_back(i);
  };
  auto div_if = [&](auto pred, auto modulus) {
    for (std::size_t i = 0; i <= cap; ++i)
      if (pred(i)) cs.divisibility.push_back({i, modulus(i)});
  };

  switch (basis.index()) {
    case 0b0000:  // {}
      zero_if([](std::size_t) { return true; });
      break;
    case 0b0001:  // {1}
      zero_if([](std::size_t i) { return i > 0; });
      break;
    case 0b0010:  // {x}
      zero_if([](std::size_t i) { return i != 1; });
      break;
    case 0b0011:  // {1, x}
      zero_if([](std::size_t i) { return i > 1; });
      break;
    case 0b0100:  // {x^2}
    case 0b0101:  // {1, x^2}
      zero_if([&](std::size_t i) { return (i == 0 && !basis.has(0)) || i % 2 == 1; });
      div_if([](std::size_t i) { return i > 0 && i % 2 == 0; },
             [](std::size_t i) { return binary_weight_modulus(i / 2); });
      break;
    case 0b0110:  // {x, x^2}
    case 0b0111:  // {1, x, x^2}
      cs.external = true;
      if (!basis.has(0)) cs.zeros.push_back(0);
      div_if([](std::size_t i) { return i > 0; }, binary_weight_modulus);
      break;
    case 0b1000:  // {x^3}
      zero_if([](std::size_t i) { return i % 6 != 3; });
      div_if([](std::size_t i) { return i % 6 == 3; }, ternary_odd_modulus);
      add_parity(cs, sets.A);
      add_parity(cs, sets.B);
      break;
    case 0b1001:  // {1, x^3}
      zero_if([](std::size_t i) { return i % 3 != 0; });
      div_if([](std::size_t i) { return i % 3 == 0; }, ternary_floor_modulus);
      break;
    case 0b1010:  // {x, x^3}
      zero_if([](std::size_t i) { return i % 2 == 0; });
      div_if([](std::size_t i) { return i % 2 == 1; }, ternary_odd_modulus);
      add_parity(cs, sets.C);
      add_parity(cs, sets.D);
      break;
    case 0b1011:  // {1, x, x^3}
      cs.external = true;
      div_if([](std::size_t) { return true; }, ternary_floor_modulus);
      break;
    case 0b1100:  // {x^2, x^3}
    case 0b1101:  // {1, x^2, x^3}
      zero_if([&](std::size_t i) { return (i == 0 && !basis.has(0)) || i == 1; });
      if (cap >= 5) cs.divisibility.push_back({5, 2});
      break;
    case 0b1110:  // {x, x^2, x^3}
      cs.zeros.push_back(0);
      break;
    case 0b1111:  // everything
      cs.external = true;
      break;
    default:
      throw std::logic_error("invalid generator basis");
  }
  return cs;
}

MembershipVerdict member(GeneratorBasis basis, const IntPoly& p) {
  MembershipVerdict v;
  if (p.is_zero()) return v;
  const ConditionSet cs = predicate_conditions(basis, p.size() - 1);
  const std::string prefix = cs.external ? "ext-" : "";

  for (std::size_t i : cs.zeros) {
    const Integer c = p.coeff(i);
    if (c != 0) v.violations.push_back({prefix + "zero", std::to_string(i), "0", c.get_str()});
  }
  for (const auto& d : cs.divisibility) {
    const Integer c = p.coeff(d.index);
    if (d.modulus != 1 && !mpz_divisible_p(c.get_mpz_t(), d.modulus.get_mpz_t()))
      v.violations.push_back({prefix + "div", std::to_string(d.index), d.modulus.get_str() + "|c", c.get_str()});
  }
  for (const auto& par : cs.parity) {
    Integer sum = 0;
    for (std::size_t i : par.indices) sum += p.coeff(i);
    if (mpz_odd_p(sum.get_mpz_t()))
      v.violations.push_back({prefix + "parity-" + par.set_name, par.set_name, "2|sum", sum.get_str()});
  }
  v.member = v.violations.empty();
  return v;
}

std::string format_violations(const MembershipVerdict& verdict) {
  std::ostringstream os;
  for (const auto& x : verdict.violations)
    os << "COND " << x.condition << " idx=" << x.index << " need=" << x.need << " got=" << x.got << '\n';
  return os.str();
}

}  // namespace nearring
