#include "nearring/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nearring {

namespace {

void add_scaled(Combination& dst, const Integer& f, const Combination& src) {
  for (const auto& [k, c] : src) {
    Integer& slot = dst[k];
    slot += f * c;
    if (slot == 0) dst.erase(k);
  }
}

}  // namespace

HermiteBasis::HermiteBasis(std::size_t columns, bool track_cofactors)
    : columns_(columns), track_(track_cofactors), by_pivot_(columns) {}

void HermiteBasis::axpy(Row& dst, const Integer& f, const Row& src, std::size_t from, bool track) {
  for (std::size_t i = from; i < dst.vec.size(); ++i)
    if (src.vec[i] != 0) mpz_addmul(dst.vec[i].get_mpz_t(), f.get_mpz_t(), src.vec[i].get_mpz_t());
  if (track) add_scaled(dst.combo, f, src.combo);
}

bool HermiteBasis::insert(IntVector v) {
  if (v.size() != columns_) throw std::invalid_argument("HermiteBasis::insert: wrong vector length");
  return insert_row(Row{std::move(v), {}});
}

bool HermiteBasis::insert(IntVector v, std::size_t tag) {
  if (v.size() != columns_) throw std::invalid_argument("HermiteBasis::insert: wrong vector length");
  Row r{std::move(v), {}};
  if (track_) r.combo[tag] = 1;
  return insert_row(std::move(r));
}

bool HermiteBasis::insert_row(Row r) {
  bool grew = false;
  std::size_t c = 0;
  for (;;) {
    while (c < columns_ && r.vec[c] == 0) ++c;
    if (c == columns_) return grew;
    Row& cur = by_pivot_[c];
    if (cur.vec.empty()) {
      if (r.vec[c] < 0) {
        for (auto& x : r.vec) x = -x;
        for (auto& [k, x] : r.combo) x = -x;
      }
      cur = std::move(r);
      ++rank_;
      return true;
    }
    if (mpz_divisible_p(r.vec[c].get_mpz_t(), cur.vec[c].get_mpz_t())) {
      const Integer f = -(r.vec[c] / cur.vec[c]);
      axpy(r, f, cur, c, track_);
      continue;
    }
    // s*a + t*b = g with a = pivot, b = incoming entry.
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cur.vec[c].get_mpz_t(), r.vec[c].get_mpz_t());
    const Integer a_g = cur.vec[c] / g;
    const Integer b_g = r.vec[c] / g;
    Row merged{IntVector(columns_), {}};
    Row rest{IntVector(columns_), {}};
    for (std::size_t i = c; i < columns_; ++i) {
      merged.vec[i] = s * cur.vec[i] + t * r.vec[i];
      rest.vec[i] = b_g * cur.vec[i] - a_g * r.vec[i];
    }
    if (track_) {
      add_scaled(merged.combo, s, cur.combo);
      add_scaled(merged.combo, t, r.combo);
      add_scaled(rest.combo, b_g, cur.combo);
      add_scaled(rest.combo, -a_g, r.combo);
    }
    cur = std::move(merged);
    r = std::move(rest);
    grew = true;
  }
}

void HermiteBasis::reduce(IntVector& v) const {
  Integer q;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (v[c] == 0) continue;
    const Row& row = by_pivot_[c];
    if (row.vec.empty()) continue;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), row.vec[c].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t i = c; i < columns_; ++i)
      if (row.vec[i] != 0) mpz_submul(v[i].get_mpz_t(), q.get_mpz_t(), row.vec[i].get_mpz_t());
  }
}

bool HermiteBasis::contains(IntVector v) const {
  if (v.size() != columns_) throw std::invalid_argument("HermiteBasis::contains: wrong vector length");
  for (std::size_t c = 0; c < columns_; ++c) {
    if (v[c] == 0) continue;
    const Row& row = by_pivot_[c];
    if (row.vec.empty() || !mpz_divisible_p(v[c].get_mpz_t(), row.vec[c].get_mpz_t())) return false;
    const Integer q = v[c] / row.vec[c];
    for (std::size_t i = c; i < columns_; ++i)
      if (row.vec[i] != 0) mpz_submul(v[i].get_mpz_t(), q.get_mpz_t(), row.vec[i].get_mpz_t());
  }
  return true;
}

bool HermiteBasis::express(IntVector v, Combination& out) const {
  if (!track_) throw std::logic_error("HermiteBasis::express: cofactors are not tracked");
  if (v.size() != columns_) throw std::invalid_argument("HermiteBasis::express: wrong vector length");
  out.clear();
  for (std::size_t c = 0; c < columns_; ++c) {
    if (v[c] == 0) continue;
    const Row& row = by_pivot_[c];
    if (row.vec.empty() || !mpz_divisible_p(v[c].get_mpz_t(), row.vec[c].get_mpz_t())) return false;
    const Integer q = v[c] / row.vec[c];
    for (std::size_t i = c; i < columns_; ++i)
      if (row.vec[i] != 0) mpz_submul(v[i].get_mpz_t(), q.get_mpz_t(), row.vec[i].get_mpz_t());
    add_scaled(out, q, row.combo);
  }
  return true;
}

void HermiteBasis::canonicalize() {
  Integer f;
  for (std::size_t pr = 0; pr < columns_; ++pr) {
    Row& r = by_pivot_[pr];
    if (r.vec.empty()) continue;
    for (std::size_t ps = pr + 1; ps < columns_; ++ps) {
      const Row& s = by_pivot_[ps];
      if (s.vec.empty() || r.vec[ps] == 0) continue;
      mpz_fdiv_q(f.get_mpz_t(), r.vec[ps].get_mpz_t(), s.vec[ps].get_mpz_t());
      if (f != 0) axpy(r, -f, s, ps, track_);
    }
  }
}

IntMatrix HermiteBasis::rows() const {
  IntMatrix out;
  for (const auto& r : by_pivot_)
    if (!r.vec.empty()) out.push_back(r.vec);
  return out;
}

const IntVector* HermiteBasis::row_at(std::size_t pivot) const {
  const auto& r = by_pivot_.at(pivot);
  return r.vec.empty() ? nullptr : &r.vec;
}

bool operator==(const HermiteBasis& a, const HermiteBasis& b) {
  if (a.columns_ != b.columns_ || a.rank_ != b.rank_) return false;
  for (std::size_t i = 0; i < a.columns_; ++i)
    if (a.by_pivot_[i].vec != b.by_pivot_[i].vec) return false;
  return true;
}

IntMatrix hnf(const IntMatrix& rows) {
  if (rows.empty()) return {};
  HermiteBasis basis(rows.front().size());
  for (const auto& r : rows) basis.insert(r);
  basis.canonicalize();
  return basis.rows();
}

CoeffLattice::CoeffLattice(std::size_t degree_cap) : cap_(degree_cap), basis_(degree_cap + 1) {}

CoeffLattice CoeffLattice::from_polys(std::size_t degree_cap, std::span<const IntPoly> polys) {
  CoeffLattice l(degree_cap);
  for (const auto& p : polys) l.insert(p);
  l.canonicalize();
  return l;
}

IntVector CoeffLattice::to_vector(const IntPoly& p) const {
  if (p.size() > cap_ + 1)
    throw std::out_of_range("polynomial degree " + std::to_string(p.size() - 1) + " exceeds lattice cap " +
                            std::to_string(cap_));
  IntVector v(cap_ + 1);
  for (std::size_t i = 0; i < p.size(); ++i) v[cap_ - i] = p.coeffs()[i];
  return v;
}

IntPoly CoeffLattice::to_poly(const IntVector& v) const {
  std::vector<Integer> c(cap_ + 1);
  for (std::size_t i = 0; i <= cap_; ++i) c[i] = v[cap_ - i];
  return IntPoly(std::move(c));
}

bool CoeffLattice::insert(const IntPoly& p) { return basis_.insert(to_vector(p)); }

bool CoeffLattice::contains(const IntPoly& p) const { return basis_.contains(to_vector(p)); }

IntPoly CoeffLattice::residue(const IntPoly& p) const {
  IntVector v = to_vector(p);
  basis_.reduce(v);
  return to_poly(v);
}

std::vector<IntPoly> CoeffLattice::rows() const {
  std::vector<IntPoly> out;
  for (const auto& r : basis_.rows()) out.push_back(to_poly(r));
  std::reverse(out.begin(), out.end());
  return out;
}

CoeffLattice CoeffLattice::restricted(std::size_t new_cap) const {
  if (new_cap > cap_) throw std::invalid_argument("CoeffLattice::restricted: cap can only shrink");
  CoeffLattice out(new_cap);
  for (const auto& r : rows())
    if (r.size() <= new_cap + 1) out.insert(r);
  out.canonicalize();
  return out;
}

bool CoeffLattice::is_sublattice_of(const CoeffLattice& other) const {
  for (const auto& r : rows()) {
    if (r.size() > other.cap_ + 1 || !other.contains(r)) return false;
  }
  return true;
}

std::string CoeffLattice::dump() const {
  std::ostringstream os;
  os << "HNF D=" << cap_ << " rows=" << rank() << '\n';
  for (const auto& r : rows()) {
    for (std::size_t i = 0; i <= cap_; ++i) os << (i ? " " : "") << r.coeff(i).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace nearring
