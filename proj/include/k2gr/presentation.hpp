#pragma once

#include <string>
#include <vector>

#include "k2gr/ring.hpp"

namespace k2gr {

/// Identifier of a K2 generator: either a symbol <x_i, x^lambda> (i in
/// [1,n], lambda a nonzero exponent vector) or the special scalar symbol
/// <-p,-p> present for p = 2.
struct GeneratorId {
  int i = 0;                // 0 encodes the scalar <-p,-p> generator
  std::vector<int> lambda;  // empty for the scalar generator

  static GeneratorId scalar_pp();
  static GeneratorId symbol(int i, std::vector<int> lambda);
  bool is_scalar_pp() const { return i == 0; }

  std::string str() const;  // e.g. "<x2,x1^2*x2>" or "<-p,-p>"
  auto operator<=>(const GeneratorId&) const = default;
};

/// The symbol pool T = { <x_i, x^lambda> : i in [1,n], lambda != 0 } in
/// deterministic order (i ascending, then lambda by mixed-radix index).
std::vector<GeneratorId> enumerate_T(int p, int n);

/// Membership predicates for the distinguished subsets of T.
bool in_T1(const GeneratorId& g, int p, int n);  // supp(lambda) in [i..n], lambda_i <= p-2
bool in_T2(const GeneratorId& g, int p, int n);  // lambda = (p-1) e_i
bool in_T3(const GeneratorId& g, int p, int n);  // lambda = (p-1, ..., p-1)

/// Nonzero monomial exponent vectors (S), and the pure powers of x_i (S_i),
/// in mixed-radix index order.
std::vector<std::vector<int>> enumerate_S(int p, int n);
std::vector<std::vector<int>> enumerate_Si(int p, int n, int i);

/// Ordered coordinate basis for K2 of the given ring, following the
/// published rank theorems:
///   FpG           -> T \ (T1 u T2)
///   ZpkG (k >= 2) -> T \ T1, plus <-p,-p> when p = 2
///   FpGModGtilde  -> T \ (T1 u T2 u T3), n >= 2
///   ZGModPkGamma  -> k = n: T \ (T1 u T3); k >= n+1: T \ T1; plus <-p,-p>
///                    when p = 2; n = 1 requires k >= 2
/// Throws unsupported_error for parameter ranges the theorems do not cover.
std::vector<GeneratorId> basis(const RingSpec& spec);

/// Citation string of the theorem backing basis(spec) / its rank value.
std::string basis_citation(const RingSpec& spec);

/// Scholium relation matrix over F_p: one column per generator <x_i, s>
/// with s in S \ S_i, one row per monomial mu with at least two distinct
/// variables in its support; row mu has entry mu_j in column <x_j, mu-e_j>.
struct RelationMatrix {
  int p = 0;
  int n = 0;
  std::vector<GeneratorId> columns;
  std::vector<std::size_t> row_monomials;  // monomial index per row
  std::vector<std::vector<int>> rows;      // dense entries mod p
};

RelationMatrix relation_matrix(int p, int n);

/// Exact rank over F_p by Gaussian elimination (bit-packed rows for p = 2,
/// byte rows otherwise); deterministic first-nonzero pivot selection.
int fp_rank(const RelationMatrix& m);
int fp_rank_rows(std::vector<std::vector<int>> rows, int p);

struct RankCheck {
  int p = 0, n = 0;
  int columns = 0, rows = 0, rank = 0;
  int quotient_rank = 0, expected = 0;
  bool pass = false;
};

/// Builds the relation matrix, checks the rows are independent, and compares
/// columns - rank against the closed form (n-1)(p^n - 1).
RankCheck verify_rank(int p, int n);

}  // namespace k2gr
