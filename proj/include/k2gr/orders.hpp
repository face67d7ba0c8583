#pragma once

#include <vector>

#include "k2gr/lattice.hpp"

namespace k2gr {

/// Subgroup of G = (Z/p)^n, stored as the reduced row-echelon basis of the
/// corresponding subspace of F_p^n (canonical: one representative per
/// subgroup; rank = dimension).
struct Subgroup {
  int p = 2;
  int n = 1;
  std::vector<std::vector<int>> basis;  // RREF rows over F_p, possibly empty

  int dim() const { return static_cast<int>(basis.size()); }
  /// |H| = p^dim.
  Int order() const;
  /// All p^dim elements of H as exponent vectors in [0,p)^n (deterministic
  /// order: coefficient vectors of the basis rows counted mixed-radix).
  std::vector<std::vector<int>> elements() const;
};

/// All subgroups of (Z/p)^n, each exactly once, in deterministic order
/// (by dimension, then by echelon shape, then by free entries).
std::vector<Subgroup> enumerate_subgroups(int p, int n);

/// Gaussian binomial coefficient [n choose d]_p = number of d-dimensional
/// subspaces of F_p^n.
Int gaussian_binomial(int n, int d, int p);

/// |H| * e_H = sum of the elements of H, as a 0/1 vector over the sigma
/// basis of Z[G] (coordinate = mixed-radix index of the exponent vector).
struct IdempotentRep {
  Subgroup subgroup;
  std::vector<Int> numerator;  // entries in {0,1}; exactly |H| ones
  Int denominator;             // |H|
};

IdempotentRep idempotent(const Subgroup& h);

/// Verifies (|H| e_H)^2 == |H| * (|H| e_H) in Z[G] (scaled idempotency).
bool idempotent_check(const FiniteQuotientRing& ambient, const IdempotentRep& e);

/// The maximal order Gamma = sum over all H <= G of Z[G] e_H, as a lattice
/// in (1/|G|) Z^{p^n} over the sigma basis.
IntegerLattice gamma_lattice(int p, int n);

/// I = ideal of Z[G] generated by { |G| e_H : H < G proper }.
IntegerLattice ideal_I(int p, int n);

/// J = |G| * Gamma (also an ideal of Z[G]).
IntegerLattice ideal_J(int p, int n);

/// G-tilde = sum of all group elements, over the sigma basis (all-ones).
std::vector<Int> gtilde_sigma(int p, int n);

/// The finite ring Z[G] / p^k Gamma for k >= n (so that p^k Gamma is an
/// integral ideal). Throws std::invalid_argument for k < n.
FiniteQuotientRing quotient_mod_pk_gamma(int p, int n, int k);

/// Z[G] itself as the ambient "quotient" by p^k Z[G]; helper for running
/// structure-constant arithmetic in tests (k >= 1).
FiniteQuotientRing zg_mod_pk(int p, int n, int k);

}  // namespace k2gr
