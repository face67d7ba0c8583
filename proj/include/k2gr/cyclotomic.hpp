#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k2gr/ring.hpp"
#include "k2gr/zmat.hpp"

namespace k2gr {

/// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^(p-2), with
/// zeta^(p-1) folded through Phi_p(zeta) = 0. A nonzero modulus switches the
/// arithmetic to Z[zeta_p]/(modulus) by coefficientwise reduction.
class CycInt {
 public:
  CycInt(int p, std::vector<Int> coeffs, Int modulus = 0);

  static CycInt zero(int p, Int modulus = 0);
  static CycInt one(int p, Int modulus = 0);
  static CycInt zeta(int p, Int modulus = 0);
  static CycInt integer(int p, const Int& c, Int modulus = 0);

  int p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& modulus() const { return mod_; }

  bool is_zero() const;
  bool is_integer() const;  // all non-constant coordinates zero
  Int integer_value() const;

  bool operator==(const CycInt& o) const;
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt pow(int e) const;

  /// Galois conjugate zeta -> zeta^j, j in [1, p-1] coprime to p.
  CycInt conjugate(int j) const;
  /// Product over all conjugates; always a rational integer.
  Int norm() const;

  bool divisible(const Int& d) const;
  CycInt divide(const Int& d) const;  // exact; throws if not divisible

  std::string str() const;

 private:
  void reduce();

  int p_;
  Int mod_;
  std::vector<Int> c_;  // length p-1
};

struct UniformizerReport {
  int p = 0;
  Int norm_pi;                           // must equal p
  std::vector<Int> unit_coeffs;          // u with p = u * pi^(p-1), power basis
  Int unit_norm;                         // must be +1 or -1
  bool p_is_unit_times_pi_power = false;  // p == u * pi^(p-1) exactly
  bool one_plus_pi_has_order_p = false;   // (1 + pi)^p == 1
  bool pass = false;
};

/// Verifies pZ[zeta_p] = pi^(p-1) Z[zeta_p] for pi = zeta_p - 1 by exact
/// division: u = p * (pi^(p-1))^(-1) is computed through the conjugate
/// product and must land in Z[zeta_p] with norm +-1. Odd p up to the given
/// bound (default 13).
UniformizerReport verify_uniformizer(int p, int bound = 13);

/// Character pushforward chi: (Z/p^k)[C_p] -> Z[zeta_p]/(p^k), x -> pi.
/// Requires an n = 1 full group ring (FpG or ZpkG).
CycInt chi_push(const RingElem& a);

/// chi applied to both slots of a symbol <a,b>.
std::pair<CycInt, CycInt> chi_push_symbol(const RingElem& a, const RingElem& b);

}  // namespace k2gr
