#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "k2gr/ring.hpp"
#include "k2gr/zmat.hpp"

namespace k2gr {

struct RankReport {
  std::string quantity;
  int p = 0, n = 0, k = 0;
  Int value;
  std::string citation;
};

/// Rank of K2 of the given ring by the published closed forms (independent
/// of the basis enumeration, which must agree). Throws unsupported_error for
/// parameter ranges the theorems do not cover.
RankReport k2_rank(const RingSpec& spec);

struct K2cReport {
  int p = 0, n = 0;
  Int exponent_enumerated;   // sum over g in G of log_p |G/<g>| by literal cycling
  Int exponent_closed_form;  // (n-1) p^n + 1
  int tau = 0;               // extra Z/2 factor for p = 2
  Int total_rank;            // exponent + tau
  std::string citation;
};

/// The order exponent of the continuous K2 of the p-adic group ring, computed
/// both by enumeration over the group and by the closed form.
K2cReport k2c_exponent(int p, int n);

struct Character {
  int p = 0, n = 0;
  std::vector<int> c;  // chi(sigma_i) = zeta_p^(c_i)
  int image_order() const { return std::any_of(c.begin(), c.end(), [](int x) { return x != 0; }) ? p : 1; }
};

/// One representative per scalar (Galois) orbit of characters, trivial
/// character included: 1 + (p^n - 1)/(p - 1) representatives.
struct Cluster {
  std::vector<Character> representatives;
};
Cluster character_cluster(int p, int n);

/// Number of orbits with image bigger than the p = 2 cutoff: all nontrivial
/// orbits for odd p, none for p = 2.
Int s0_count(int p, int n);

struct Sk1Limit {
  int p = 0, n = 0;
  Int copies;         // inverse limit = C_p^copies
  std::string shape;  // e.g. "C_3^4", or "trivial"
};
Sk1Limit sk1_inverse_limit(int p, int n);

/// Rank of SK1 of the mod-p^k group ring (odd p only; throws
/// unsupported_error for p = 2).
RankReport sk1_rank(int p, int n, int k);

struct BoundsReport {
  int p = 0, n = 0;
  Int k2_zg;        // lower bound for the rank of K2 of the integral group ring
  Int wh2;          // lower bound for the rank of Wh2
  Int sk1_zg_rank;  // rank of SK1 of the integral group ring
  bool clamped = false;
  std::string citation;
  std::string sk1_citation;
};

/// Closed-form lower bounds (odd p only; throws unsupported_error for p = 2);
/// negative values are clamped to zero with the flag set.
BoundsReport lower_bounds(int p, int n);

/// Exact binomial coefficient.
Int binomial_int(int a, int b);

}  // namespace k2gr
