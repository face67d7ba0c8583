#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k2gr/zmat.hpp"

namespace k2gr {

/// Full-rank sublattice of (1/denominator) * Z^ambient_rank, stored as the
/// canonical row Hermite normal form of its integer numerator rows. Lattice
/// equality is (denominator-normalized) matrix equality.
class IntegerLattice {
 public:
  /// Builds the lattice spanned by `rows` / `denominator`. Rows must span
  /// full rank. The stored denominator is reduced to lowest terms against
  /// the content of the HNF.
  IntegerLattice(const ZMat& rows, Int denominator = 1);

  std::size_t ambient_rank() const { return basis_.size(); }
  const ZMat& basis() const { return basis_; }
  const Int& denominator() const { return denom_; }

  /// Membership of a rational vector.
  bool contains(const std::vector<Rat>& v) const;
  /// Membership of an integer vector.
  bool contains(const std::vector<Int>& v) const;

  /// Covolume |det basis| / denominator^rank as an exact rational.
  Rat covolume() const;

  bool operator==(const IntegerLattice& o) const {
    return denom_ == o.denom_ && basis_ == o.basis_;
  }

  /// Smallest lattice containing both (span of the union of bases).
  static IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b);
  /// The lattice scaled by an exact rational factor.
  static IntegerLattice scale(const IntegerLattice& a, const Rat& factor);

 private:
  ZMat basis_;  // canonical HNF of the numerator rows
  Int denom_;   // lattice = basis_ rows / denom_
};

/// L1 subset of L2.
bool lattice_leq(const IntegerLattice& l1, const IntegerLattice& l2);

/// Group index [L2 : L1] for L1 subset of L2 (covolume ratio). Throws
/// std::invalid_argument when L1 is not contained in L2.
Int lattice_index(const IntegerLattice& l1, const IntegerLattice& l2);

/// Finite commutative quotient ring Z^m / ideal, where Z^m carries the group
/// algebra multiplication of G = (Z/p)^n in the sigma basis (basis vectors
/// indexed by group elements, product = index addition mod p). The ideal must
/// be an integral full-rank lattice closed under multiplication by every
/// sigma-basis vector; closure is checked at construction.
class FiniteQuotientRing {
 public:
  FiniteQuotientRing(int p, int n, IntegerLattice ideal);

  int p() const { return p_; }
  int n() const { return n_; }
  std::size_t size() const { return m_; }  // rank p^n
  const IntegerLattice& ideal() const { return ideal_; }
  /// Number of cosets = det of the ideal basis.
  Int order() const;

  /// Canonical coset representative (entry i reduced into [0, diag_i) by
  /// back-substitution against the HNF rows).
  std::vector<Int> reduce(std::vector<Int> v) const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const;

  /// Structure-constant product in Z[G] (sigma basis), before reduction.
  std::vector<Int> group_algebra_mul(const std::vector<Int>& a,
                                     const std::vector<Int>& b) const;

 private:
  int p_, n_;
  std::size_t m_;
  IntegerLattice ideal_;
  std::vector<std::vector<std::size_t>> mul_table_;  // index addition mod p
};

}  // namespace k2gr
