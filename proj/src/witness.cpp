#include "nearring/witness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "nearring/lattice.hpp"

namespace nearring {

struct Term::Node {
  Kind kind = Kind::Zero;
  std::size_t label = 0;
  Term lhs;
  Term rhs;
};

// A null node is the zero term.
Term::Term() = default;

Term Term::gen(std::size_t label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->label = label;
  return Term(std::move(n));
}

Term Term::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  return Term(std::move(n));
}

namespace {

Term::Kind binary_kind_check(Term::Kind k) {
  if (k != Term::Kind::Add && k != Term::Kind::Sub && k != Term::Kind::Compose)
    throw std::logic_error("Term: not a binary node");
  return k;
}

}  // namespace

Term Term::add(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Term(std::move(n));
}

Term Term::sub(Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sub;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return Term(std::move(n));
}

Term Term::compose(Term outer, Term inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->lhs = std::move(outer);
  n->rhs = std::move(inner);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::Zero; }

std::size_t Term::label() const {
  if (kind() != Kind::Gen) throw std::logic_error("Term: label of a non-generator node");
  return node_->label;
}

const Term& Term::lhs() const {
  binary_kind_check(kind());
  return node_->lhs;
}

const Term& Term::rhs() const {
  binary_kind_check(kind());
  return node_->rhs;
}

Term scale(const Integer& n, const Term& t) {
  if (n == 0) return Term::zero();
  if (n < 0) return Term::zero() - scale(-n, t);
  std::optional<Term> acc;
  Term power = t;
  Integer rest = n;
  for (;;) {
    if (mpz_odd_p(rest.get_mpz_t())) acc = acc ? *acc + power : power;
    rest >>= 1;
    if (rest == 0) break;
    power = power + power;
  }
  return *acc;
}

namespace {

bool is_binary(Term::Kind k) {
  return k == Term::Kind::Add || k == Term::Kind::Sub || k == Term::Kind::Compose;
}

class Evaluator {
 public:
  explicit Evaluator(std::span<const IntPoly> env) : env_(env) {}

  const IntPoly& eval(const Term& t) {
    if (auto it = memo_.find(t.node_id()); it != memo_.end()) return it->second;
    IntPoly v;
    switch (t.kind()) {
      case Term::Kind::Zero:
        break;
      case Term::Kind::Gen:
        if (t.label() >= env_.size())
          throw UnresolvedLabel("generator g" + std::to_string(t.label()) + " is not bound (environment has " +
                                std::to_string(env_.size()) + ")");
        v = env_[t.label()];
        break;
      case Term::Kind::Identity:
        v = IntPoly::x();
        break;
      case Term::Kind::Add:
        v = eval(t.lhs()) + eval(t.rhs());
        break;
      case Term::Kind::Sub:
        v = eval(t.lhs()) - eval(t.rhs());
        break;
      case Term::Kind::Compose: {
        const IntPoly& outer = eval(t.lhs());
        v = nearring::compose(outer, eval(t.rhs()));
        break;
      }
    }
    return memo_.emplace(t.node_id(), std::move(v)).first->second;
  }

 private:
  std::span<const IntPoly> env_;
  std::unordered_map<const void*, IntPoly> memo_;
};

// Post-order walk over distinct nodes.
void visit_dag(const Term& t, const std::function<void(const Term&)>& f) {
  std::unordered_map<const void*, bool> seen;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    if (!seen.emplace(u.node_id(), true).second) return;
    if (is_binary(u.kind())) {
      rec(u.lhs());
      rec(u.rhs());
    }
    f(u);
  };
  rec(t);
}

}  // namespace

IntPoly eval_term(const Term& t, std::span<const IntPoly> env) { return Evaluator(env).eval(t); }

std::size_t dag_size(const Term& t) {
  std::size_t n = 0;
  visit_dag(t, [&](const Term&) { ++n; });
  return n;
}

std::size_t tree_size(const Term& t) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::unordered_map<const void*, std::size_t> size;
  visit_dag(t, [&](const Term& u) {
    std::size_t s = 1;
    if (is_binary(u.kind())) {
      const std::size_t a = size[u.lhs().node_id()], b = size[u.rhs().node_id()];
      s = (a >= kMax - b - 1) ? kMax : a + b + 1;
    }
    size[u.node_id()] = s;
  });
  return size[t.node_id()];
}

std::optional<std::size_t> max_label(const Term& t) {
  std::optional<std::size_t> m;
  visit_dag(t, [&](const Term& u) {
    if (u.kind() == Term::Kind::Gen) m = std::max(m.value_or(0), u.label());
  });
  return m;
}

bool uses_identity(const Term& t) {
  bool found = false;
  visit_dag(t, [&](const Term& u) { found = found || u.kind() == Term::Kind::Identity; });
  return found;
}

namespace {

void write_sexpr(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      os << '0';
      return;
    case Term::Kind::Gen:
      os << 'g' << t.label();
      return;
    case Term::Kind::Identity:
      os << "id";
      return;
    case Term::Kind::Add:
      os << "(add ";
      break;
    case Term::Kind::Sub:
      os << "(sub ";
      break;
    case Term::Kind::Compose:
      os << "(comp ";
      break;
  }
  write_sexpr(os, t.lhs());
  os << ' ';
  write_sexpr(os, t.rhs());
  os << ')';
}

class SexprParser {
 public:
  explicit SexprParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input after term", pos_);
    return t;
  }

 private:
  Term term() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of term", pos_);
    if (s_[pos_] == '(') {
      const std::size_t start = pos_++;
      const std::string op = word();
      Term a = term();
      Term b = term();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      if (op == "add") return a + b;
      if (op == "sub") return a - b;
      if (op == "comp") return comp(std::move(a), std::move(b));
      throw ParseError("unknown operator '" + op + "'", start + 1);
    }
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "0") return Term::zero();
    if (w == "id") return Term::identity();
    if (w.size() >= 2 && w[0] == 'g' &&
        std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return Term::gen(std::stoul(w.substr(1)));
    throw ParseError("unknown atom '" + w + "'", start);
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw ParseError("expected a word", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Term& t) {
  std::ostringstream os;
  write_sexpr(os, t);
  return os.str();
}

Term parse_sexpr(std::string_view text) { return SexprParser(text).parse(); }

bool verify_derivation(const Derivation& d) {
  try {
    return eval_term(d.term, d.environment) == d.claimed_value;
  } catch (const UnresolvedLabel&) {
    return false;
  }
}

Term lift_witness(const Term& t, std::size_t cancellable) {
  // The left operand of a composition is copied untouched, so scan the whole DAG up front.
  visit_dag(t, [](const Term& u) {
    if (u.kind() == Term::Kind::Identity)
      throw std::invalid_argument("lift_witness: input already contains the identity leaf");
  });
  std::unordered_map<const void*, Term> memo;
  std::function<Term(const Term&)> lift = [&](const Term& u) -> Term {
    if (auto it = memo.find(u.node_id()); it != memo.end()) return it->second;
    Term r;
    switch (u.kind()) {
      case Term::Kind::Zero:
        break;
      case Term::Kind::Gen:
        r = u.label() == cancellable ? Term::identity() : u;
        break;
      case Term::Kind::Identity:
        break;
      case Term::Kind::Add:
        r = lift(u.lhs()) + lift(u.rhs());
        break;
      case Term::Kind::Sub:
        r = lift(u.lhs()) - lift(u.rhs());
        break;
      case Term::Kind::Compose:
        r = comp(u.lhs(), lift(u.rhs()));
        break;
    }
    memo.emplace(u.node_id(), r);
    return r;
  };
  return lift(t);
}

namespace {

IntPoly mono(long c, std::size_t e) { return IntPoly::monomial(c, e); }

// 3 p x^(2*3^a) + 3 p^2 x^(3^a) and its counterpart with -p, from
// x^3 o (p + x^(3^a)) - x^3 o p - x^(3^(a+1)).
struct CubeCross {
  Term plus;
  Term minus;
};

CubeCross cube_cross(const Term& cube, const Term& p, const Term& pow, const Term& pow_next) {
  const Term neg = Term::zero() - p;
  return {comp(cube, p + pow) - comp(cube, p) - pow_next, comp(cube, neg + pow) - comp(cube, neg) - pow_next};
}

}  // namespace

std::vector<Derivation> builtin_derivations() {
  std::vector<Derivation> out;

  {
    // <x^2>: x^2 o (x^2 + x^2 o x^2 o x^2) - x^2 o x^2 - x^2 o x^2 o x^2 o x^2 = 2x^10
    const std::vector<IntPoly> env{mono(1, 2)};
    const Term g = Term::gen(0);
    const Term x4 = comp(g, g);
    const Term x8 = comp(g, x4);
    out.push_back({"x2-2x10", comp(g, g + x8) - (x4 + comp(g, x8)), env, mono(2, 10)});
  }
  {
    const std::vector<IntPoly> env{mono(1, 4)};
    const Term g = Term::gen(0);
    out.push_back({"x4-chain-x16", comp(g, g), env, mono(1, 16)});
  }
  {
    // <x^2, x^3>
    const std::vector<IntPoly> env{mono(1, 2), mono(1, 3)};
    const Term sq = Term::gen(0);
    const Term cu = Term::gen(1);
    const Term x4 = comp(sq, sq);
    const Term x6 = comp(sq, cu);
    const Term x8 = comp(sq, x4);
    const Term x9 = comp(cu, cu);
    const Term two_x5 = comp(sq, sq + cu) - x4 - comp(sq, cu);
    const Term x7 = comp(sq, sq + two_x5) - x4 - comp(sq, two_x5) - (comp(cu, sq + cu) - x6 - x9 - 3 * x8);
    const Term x10 = comp(sq, two_x5) - (comp(cu, sq + x4) - x6 - 3 * x8 - comp(cu, x4));
    const Term x11 = comp(cu, cu + x4) - x9 - 3 * x10 - comp(cu, x4) - (comp(sq, x7 + x4) - comp(sq, x7) - x8);
    const Term x12 = comp(cu, x4);
    const Term three_x17 = comp(cu, x4 + x9) - x12 - 3 * comp(sq, x11) - comp(cu, x9);
    const Term x13 =
        comp(cu, cu + x7) - x9 - three_x17 - comp(cu, x7) - (comp(sq, sq + x11) - x4 - comp(sq, x11));
    // Induction step at i = 2 j1 + j2 with (j1, j2) = (6, 2).
    const Term step3 = comp(cu, x6 + sq) - comp(cu, sq) - comp(cu, x6) - 3 * x10;
    const Term step2 = comp(sq, x12 + sq) - comp(sq, x12) - comp(sq, sq);

    out.push_back({"x2x3-x4", x4, env, mono(1, 4)});
    out.push_back({"x2x3-2x5", two_x5, env, mono(2, 5)});
    out.push_back({"x2x3-x6", x6, env, mono(1, 6)});
    out.push_back({"x2x3-x7", x7, env, mono(1, 7)});
    out.push_back({"x2x3-x8", x8, env, mono(1, 8)});
    out.push_back({"x2x3-x9", x9, env, mono(1, 9)});
    out.push_back({"x2x3-x10", x10, env, mono(1, 10)});
    out.push_back({"x2x3-x11", x11, env, mono(1, 11)});
    out.push_back({"x2x3-x12", x12, env, mono(1, 12)});
    out.push_back({"x2x3-3x17", three_x17, env, mono(3, 17)});
    out.push_back({"x2x3-x13", x13, env, mono(1, 13)});
    out.push_back({"x2x3-step-3x14", step3, env, mono(3, 14)});
    out.push_back({"x2x3-step-2x14", step2, env, mono(2, 14)});
    out.push_back({"x2x3-step-x14", step3 - step2, env, mono(1, 14)});
  }
  {
    // <x, x^2, x^3>
    const std::vector<IntPoly> env{mono(1, 1), mono(1, 2), mono(1, 3)};
    const Term id = Term::gen(0);
    const Term sq = Term::gen(1);
    const Term cu = Term::gen(2);
    (void)id;
    const Term x4 = comp(sq, sq);
    const Term x5 = comp(cu, id + sq) - cu - comp(cu, sq) - 3 * x4 - (comp(sq, sq + cu) - x4 - comp(sq, cu));
    out.push_back({"xx2x3-x5", x5, env, mono(1, 5)});
  }
  {
    // <x^3>: the 3 p x^(2*3^a) + 3 p^2 x^(3^a) family.
    const std::vector<IntPoly> env{mono(1, 3)};
    const Term cu = Term::gen(0);
    const Term x9 = comp(cu, cu);
    const Term x27 = comp(cu, x9);
    const Term x81 = comp(cu, x27);
    out.push_back({"x3-x9", x9, env, mono(1, 9)});
    out.push_back({"x3-x27", x27, env, mono(1, 27)});

    const auto a2 = cube_cross(cu, cu, x9, x27);  // p = x^3, a = 2
    out.push_back({"x3-3x15-3x21", a2.plus, env, mono(3, 15) + mono(3, 21)});
    out.push_back({"x3-6x15", a2.plus + a2.minus, env, mono(6, 15)});
    out.push_back({"x3-6x21", a2.plus - a2.minus, env, mono(6, 21)});

    const auto a3 = cube_cross(cu, cu, x27, x81);  // p = x^3, a = 3
    out.push_back({"x3-3x33-3x57", a3.plus, env, mono(3, 33) + mono(3, 57)});
    out.push_back({"x3-6x33", a3.plus + a3.minus, env, mono(6, 33)});

    const auto b3 = cube_cross(cu, x9, x27, x81);  // p = x^9, a = 3
    out.push_back({"x3-3x45-3x63", b3.plus, env, mono(3, 45) + mono(3, 63)});
    out.push_back({"x3-6x45", b3.plus + b3.minus, env, mono(6, 45)});
    out.push_back({"x3-6x63", b3.plus - b3.minus, env, mono(6, 63)});

    const auto b1 = cube_cross(cu, x9, cu, x9);  // p = x^9, a = 1
    out.push_back({"x3-6x21-from-x9", b1.plus + b1.minus, env, mono(6, 21)});
  }
  return out;
}

namespace {

class WitnessExplorer {
 public:
  WitnessExplorer(const std::vector<IntPoly>& generators, std::size_t work, const SearchBounds& bounds)
      : work_(work), bounds_(bounds), span_(work + 1, true) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const IntPoly& g = generators[k];
      if (g.is_zero() || g.size() - 1 > work_) continue;
      add_atom(Term::gen(k), g);
      if (g.size() >= 2) composers_.push_back({k, g});
    }
    span_.canonicalize();
  }

  std::optional<Term> express(const IntPoly& target) const {
    if (target.size() > work_ + 1) return std::nullopt;
    Combination combo;
    if (!span_.express(to_vector(target), combo)) return std::nullopt;
    return combination_term(combo);
  }

  /// One round of left compositions. Returns true if the span grew.
  bool round() {
    if (composers_.empty()) return false;
    struct RowInfo {
      IntPoly value;
      Term term;
    };
    std::vector<RowInfo> rows;
    for (std::size_t pivot = 0; pivot <= work_; ++pivot) {
      const IntVector* v = span_.row_at(pivot);
      if (!v) continue;
      rows.push_back({to_poly(*v), combination_term(span_.row_combination(pivot))});
    }
    std::reverse(rows.begin(), rows.end());  // ascending degree

    std::size_t min_deg = work_;
    for (const auto& c : composers_) min_deg = std::min(min_deg, c.value.size() - 1);
    std::size_t usable = 0;
    while (usable < rows.size() && (rows[usable].value.size() - 1) * min_deg <= work_) ++usable;

    bool grew = false;
    const long cap = static_cast<long>(bounds_.coeff_cap);
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> subsets = [&](std::size_t start) {
      if (!idx.empty()) {
        // Small multipliers come first so early atoms are the plain compositions.
        std::vector<long> order;
        for (long a = 1; a <= cap; ++a) order.insert(order.end(), {a, -a});
        std::vector<std::size_t> pos(idx.size(), 0);
        std::vector<long> lambda(idx.size(), order[0]);
        for (;;) {
          IntPoly q;
          for (std::size_t k = 0; k < idx.size(); ++k) q = q + Integer(lambda[k]) * rows[idx[k]].value;
          const std::size_t dq = rows[idx.back()].value.size() - 1;
          for (const auto& c : composers_) {
            if ((c.value.size() - 1) * dq > work_) continue;
            IntPoly v = nearring::compose(c.value, q);
            if (span_.contains(to_vector(v))) continue;
            Term qt = scale(Integer(lambda[0]), rows[idx[0]].term);
            for (std::size_t k = 1; k < idx.size(); ++k) qt = qt + scale(Integer(lambda[k]), rows[idx[k]].term);
            grew = add_atom(comp(Term::gen(c.label), qt), v) || grew;
          }
          std::size_t k = 0;
          for (; k < lambda.size(); ++k) {
            if (++pos[k] < order.size()) {
              lambda[k] = order[pos[k]];
              break;
            }
            pos[k] = 0;
            lambda[k] = order[0];
          }
          if (k == lambda.size()) break;
        }
      }
      if (idx.size() == bounds_.combo_width) return;
      for (std::size_t i = start; i < usable; ++i) {
        idx.push_back(i);
        subsets(i + 1);
        idx.pop_back();
      }
    };
    subsets(0);
    span_.canonicalize();
    return grew;
  }

 private:
  struct Composer {
    std::size_t label;
    IntPoly value;
  };

  bool add_atom(Term t, const IntPoly& value) {
    atoms_.push_back(std::move(t));
    return span_.insert(to_vector(value), atoms_.size() - 1);
  }

  Term combination_term(const Combination& combo) const {
    std::optional<Term> acc;
    for (const auto& [atom, c] : combo) {
      Term part = scale(c, atoms_[atom]);
      acc = acc ? *acc + part : part;
    }
    return acc.value_or(Term::zero());
  }

  IntVector to_vector(const IntPoly& p) const {
    IntVector v(work_ + 1);
    for (std::size_t i = 0; i < p.size(); ++i) v[work_ - i] = p.coeffs()[i];
    return v;
  }
  IntPoly to_poly(const IntVector& v) const {
    std::vector<Integer> c(work_ + 1);
    for (std::size_t i = 0; i <= work_; ++i) c[i] = v[work_ - i];
    return IntPoly(std::move(c));
  }

  std::size_t work_;
  SearchBounds bounds_;
  HermiteBasis span_;
  std::vector<Term> atoms_;
  std::vector<Composer> composers_;
};

}  // namespace

std::vector<std::optional<Term>> search_witnesses(std::span<const IntPoly> targets,
                                                  const std::vector<IntPoly>& generators,
                                                  const SearchBounds& bounds) {
  std::vector<std::optional<Term>> found(targets.size());
  std::size_t work = bounds.work_degree;
  if (work == 0) {
    for (const auto& t : targets) work = std::max(work, 3 * (t.size() ? t.size() - 1 : 0));
    for (const auto& g : generators) work = std::max(work, g.size() ? g.size() - 1 : 0);
  }
  WitnessExplorer explorer(generators, work, bounds);

  auto resolve = [&] {
    bool all = true;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (found[i]) continue;
      if (targets[i].is_zero()) {
        found[i] = Term::zero();
        continue;
      }
      if (auto t = explorer.express(targets[i])) {
        if (eval_term(*t, generators) != targets[i])
          throw std::logic_error("search_witness: reconstructed term does not evaluate to the target");
        found[i] = std::move(t);
      } else {
        all = false;
      }
    }
    return all;
  };

  for (std::size_t depth = 0;; ++depth) {
    if (resolve() || depth == bounds.max_depth) break;
    if (!explorer.round()) {
      resolve();
      break;
    }
  }
  return found;
}

std::optional<Term> search_witness(const IntPoly& target, const std::vector<IntPoly>& generators,
                                   const SearchBounds& bounds) {
  return search_witnesses(std::span<const IntPoly>(&target, 1), generators, bounds).front();
}

}  // namespace nearring
