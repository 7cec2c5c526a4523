#pragma once

/**
 * @file lattice.hpp
 * @brief Integer row lattices in Hermite normal form.
 *
 * HermiteBasis keeps a row-style HNF of a subgroup of Z^n: at most one row per pivot
 * column (its first nonzero entry), pivots positive, and every entry sitting in another
 * row's pivot column reduced into [0, pivot). Two generating sets of the same subgroup
 * canonicalize to identical bases.
 *
 * CoeffLattice stores polynomial coefficient vectors with the columns ordered by
 * descending degree, so a row's pivot is its leading coefficient and the elements of
 * degree <= k are exactly the span of the rows whose degree is <= k.
 */

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nearring/intpoly.hpp"

namespace nearring {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Sparse integer combination of tagged inputs, used to track cofactors.
using Combination = std::map<std::size_t, Integer>;

class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t columns, bool track_cofactors = false);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rank_; }
  bool tracks_cofactors() const { return track_; }

  /// Adds v to the generating set. Returns true iff the lattice grew.
  /// The basis is left in echelon form; call canonicalize() before comparing.
  bool insert(IntVector v);
  /// Same, recording that v is the input tagged `tag`.
  bool insert(IntVector v, std::size_t tag);

  /// Reduces every reducible entry of v into [0, pivot), left to right. The result is a
  /// canonical representative of v modulo the lattice; it is zero iff v is a member.
  void reduce(IntVector& v) const;
  bool contains(IntVector v) const;

  /// Writes v as a combination of tagged inputs, or returns false if v is not a member.
  bool express(IntVector v, Combination& out) const;

  void canonicalize();

  /// Rows in pivot order.
  IntMatrix rows() const;
  /// Row with the given pivot column, or nullptr.
  const IntVector* row_at(std::size_t pivot) const;
  /// Cofactors of the row with the given pivot (empty if untracked or absent).
  const Combination& row_combination(std::size_t pivot) const { return by_pivot_.at(pivot).combo; }

  friend bool operator==(const HermiteBasis& a, const HermiteBasis& b);

 private:
  struct Row {
    IntVector vec;
    Combination combo;
  };

  bool insert_row(Row r);
  static void axpy(Row& dst, const Integer& f, const Row& src, std::size_t from, bool track);

  std::size_t columns_;
  bool track_;
  std::size_t rank_ = 0;
  std::vector<Row> by_pivot_;  // empty vec = no row with that pivot
};

/// Canonical HNF of the row span of `rows` (all rows must have equal length).
IntMatrix hnf(const IntMatrix& rows);

class CoeffLattice {
 public:
  explicit CoeffLattice(std::size_t degree_cap);
  static CoeffLattice from_polys(std::size_t degree_cap, std::span<const IntPoly> polys);

  std::size_t degree_cap() const { return cap_; }
  std::size_t rank() const { return basis_.rank(); }
  bool empty() const { return rank() == 0; }

  /// Throws std::out_of_range when deg(p) exceeds the cap.
  bool insert(const IntPoly& p);
  bool contains(const IntPoly& p) const;
  /// Canonical remainder of p modulo the lattice (zero iff p is a member).
  IntPoly residue(const IntPoly& p) const;
  void canonicalize() { basis_.canonicalize(); }

  /// Basis rows as polynomials, ascending degree.
  std::vector<IntPoly> rows() const;

  /// Elements of degree <= new_cap, as a lattice with that cap. Requires new_cap <= cap.
  CoeffLattice restricted(std::size_t new_cap) const;

  bool is_sublattice_of(const CoeffLattice& other) const;

  /// "HNF D=<cap> rows=<r>" followed by one line per row with c_0 .. c_D.
  std::string dump() const;

  IntVector to_vector(const IntPoly& p) const;
  IntPoly to_poly(const IntVector& v) const;

  friend bool operator==(const CoeffLattice& a, const CoeffLattice& b) {
    return a.cap_ == b.cap_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t cap_;
  HermiteBasis basis_;
};

}  // namespace nearring
