#include "k2gr/orders.hpp"

#include <algorithm>
#include <numeric>

namespace k2gr {

namespace {

std::size_t pow_sz(int p, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(p);
  return r;
}

std::size_t vec_index(const std::vector<int>& v, int p) {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    idx += static_cast<std::size_t>(v[i]) * stride;
    stride *= p;
  }
  return idx;
}

}  // namespace

Int Subgroup::order() const {
  Int r = 1;
  for (int i = 0; i < dim(); ++i) r *= p;
  return r;
}

std::vector<std::vector<int>> Subgroup::elements() const {
  const int d = dim();
  std::vector<std::vector<int>> out;
  std::vector<int> coeff(d, 0);
  while (true) {
    std::vector<int> v(n, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff[i] * basis[i][j]) % p;
    out.push_back(v);
    int pos = 0;
    while (pos < d && ++coeff[pos] == p) coeff[pos++] = 0;
    if (pos == d) break;
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(int p, int n) {
  if (n < 1 || p < 2) throw std::invalid_argument("enumerate_subgroups: bad parameters");
  std::vector<Subgroup> out;
  // Dimension 0: the trivial subgroup.
  out.push_back(Subgroup{p, n, {}});
  // For each dimension d and each choice of pivot columns, fill the free
  // entries of the reduced echelon form in all possible ways. Every subspace
  // has exactly one RREF basis, so this is duplicate-free by construction.
  for (int d = 1; d <= n; ++d) {
    std::vector<int> pivots(d);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      // Free positions: row i, column c with c > pivots[i] and c not a pivot.
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(i, c);
      std::vector<int> fill(free_pos.size(), 0);
      while (true) {
        Subgroup h{p, n, std::vector<std::vector<int>>(d, std::vector<int>(n, 0))};
        for (int i = 0; i < d; ++i) h.basis[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f)
          h.basis[free_pos[f].first][free_pos[f].second] = fill[f];
        out.push_back(std::move(h));
        std::size_t pos = 0;
        while (pos < fill.size() && ++fill[pos] == p) fill[pos++] = 0;
        if (pos == fill.size()) break;
      }
      // Next pivot combination (lexicographic).
      int i = d - 1;
      while (i >= 0 && pivots[i] == n - d + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

Int gaussian_binomial(int n, int d, int p) {
  if (d < 0 || d > n) return 0;
  // [n d]_p = prod_{i=0}^{d-1} (p^{n-i} - 1) / (p^{d-i} - 1), exact.
  Int num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    Int pn = 1, pd = 1;
    for (int j = 0; j < n - i; ++j) pn *= p;
    for (int j = 0; j < d - i; ++j) pd *= p;
    num *= pn - 1;
    den *= pd - 1;
  }
  return num / den;
}

IdempotentRep idempotent(const Subgroup& h) {
  const std::size_t m = pow_sz(h.p, h.n);
  IdempotentRep rep{h, std::vector<Int>(m, 0), h.order()};
  for (const auto& el : h.elements()) rep.numerator[vec_index(el, h.p)] = 1;
  return rep;
}

bool idempotent_check(const FiniteQuotientRing& ambient, const IdempotentRep& e) {
  std::vector<Int> sq = ambient.group_algebra_mul(e.numerator, e.numerator);
  for (std::size_t i = 0; i < sq.size(); ++i)
    if (sq[i] != e.denominator * e.numerator[i]) return false;
  return true;
}

namespace {

// Rows spanning sum_H Z[G] * (|G|/|H|) * (|H| e_H) (an integral lattice;
// dividing by |G| gives Gamma). `proper_only` drops H = G (for the ideal I).
ZMat order_rows(int p, int n, bool proper_only) {
  const std::size_t m = pow_sz(p, n);
  FiniteQuotientRing ambient = zg_mod_pk(p, n, 1);  // only for group_algebra_mul
  ZMat rows;
  for (const auto& h : enumerate_subgroups(p, n)) {
    if (proper_only && h.dim() == n) continue;
    IdempotentRep e = idempotent(h);
    Int factor = 1;
    for (int i = 0; i < n - h.dim(); ++i) factor *= p;  // |G| / |H|
    // Z[G]-multiples: g * H-tilde over all g in G (scaled by |G|/|H|).
    for (std::size_t g = 0; g < m; ++g) {
      std::vector<Int> unit(m, 0);
      unit[g] = factor;
      rows.push_back(ambient.group_algebra_mul(unit, e.numerator));
    }
  }
  return rows;
}

}  // namespace

IntegerLattice gamma_lattice(int p, int n) {
  Int big = 1;
  for (int i = 0; i < n; ++i) big *= p;
  return IntegerLattice(order_rows(p, n, false), big);
}

IntegerLattice ideal_I(int p, int n) { return IntegerLattice(order_rows(p, n, true)); }

IntegerLattice ideal_J(int p, int n) { return IntegerLattice(order_rows(p, n, false)); }

std::vector<Int> gtilde_sigma(int p, int n) {
  return std::vector<Int>(pow_sz(p, n), 1);
}

FiniteQuotientRing quotient_mod_pk_gamma(int p, int n, int k) {
  if (k < n)
    throw std::invalid_argument(
        "quotient_mod_pk_gamma: requires k >= n (p^k Gamma must lie inside Z[G])");
  // p^k Gamma = p^{k-n} * J as integral lattices.
  IntegerLattice j = ideal_J(p, n);
  Int factor = 1;
  for (int i = 0; i < k - n; ++i) factor *= p;
  ZMat rows = j.basis();
  for (auto& r : rows)
    for (auto& e : r) e *= factor;
  return FiniteQuotientRing(p, n, IntegerLattice(rows));
}

FiniteQuotientRing zg_mod_pk(int p, int n, int k) {
  const std::size_t m = pow_sz(p, n);
  Int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  ZMat rows(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = pk;
  return FiniteQuotientRing(p, n, IntegerLattice(rows));
}

}  // namespace k2gr
