#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k2gr/lattice.hpp"

namespace k2gr {

enum class RingFamily { FpG, ZpkG, FpGModGtilde, ZGModPkGamma };

std::string family_name(RingFamily f);
/// Parses the CLI family labels fpg | zpk | fpg-gtilde | zg-pkgamma.
RingFamily parse_family(const std::string& s);

/// Parameters of R(p,n,k) = (Z/p^k)[x_1..x_n] with (1+x_i)^p = 1, or one of
/// its quotients. k is forced to 1 for FpG / FpGModGtilde and must satisfy
/// k >= n for ZGModPkGamma.
struct RingSpec {
  RingFamily family = RingFamily::FpG;
  int p = 2;
  int n = 1;
  int k = 1;

  static RingSpec make(RingFamily family, int p, int n, int k);
  bool operator==(const RingSpec&) const = default;
};

class RingElem;

/// Immutable shared arithmetic context for one RingSpec. Create through
/// Ring::create; all elements hold a shared pointer to their context.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static std::shared_ptr<const Ring> create(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int n() const { return spec_.n; }
  int k() const { return spec_.k; }
  const Int& pk() const { return pk_; }
  std::size_t monomials() const { return m_; }

  std::vector<int> exponents_of(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& exponents) const;
  int degree_of(std::size_t index) const;

  RingElem zero() const;
  RingElem one() const;
  RingElem scalar(const Int& c) const;
  RingElem monomial(const std::vector<int>& exponents, const Int& coeff = 1) const;
  /// x_i (1-based index).
  RingElem generator(int i) const;
  /// Sum of all group elements, in the x basis (families FpG / ZpkG only).
  RingElem gtilde() const;

  /// Element from a raw coefficient vector over the x-monomials (canonically
  /// reduced on construction).
  RingElem from_coeffs(std::vector<Int> raw) const;

  RingElem from_sigma_basis(const std::map<std::vector<int>, Int>& v) const;
  std::map<std::vector<int>, Int> to_sigma_basis(const RingElem& a) const;

  RingElem parse(const std::string& text) const;

  /// For ZGModPkGamma: canonical reduction diagonal (HNF of p^k Gamma in the
  /// x basis); other families: p^k everywhere.
  const std::vector<Int>& coefficient_moduli() const { return moduli_; }
  /// Number of elements of the ring.
  Int order() const;

 private:
  friend class RingElem;
  explicit Ring(const RingSpec& spec);

  std::vector<Int> reduce(std::vector<Int> raw) const;  // canonical coset rep
  // Product of two monomials as a raw (unreduced-mod-ideal) coefficient
  // vector with the x_i^p rewrite already applied.
  std::vector<Int> monomial_product(std::size_t a, std::size_t b) const;

  RingSpec spec_;
  std::size_t m_;  // p^n
  Int pk_;
  std::vector<int> radix_;                 // exponent strides
  std::vector<std::vector<Int>> xpow_;     // x^e for e in [0, 2p-2] as coeff rows
  ZMat lattice_hnf_;                       // ZGModPkGamma: p^k Gamma in x coords
  std::vector<Int> moduli_;                // per-monomial canonical modulus
};

/// Exact element of the ring: dense coefficient vector over x monomials,
/// always stored as the canonical coset representative. Immutable value type;
/// all operations are pure.
class RingElem {
 public:
  RingElem() = default;

  const std::shared_ptr<const Ring>& ring() const { return ring_; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(std::size_t index) const { return c_[index]; }

  bool is_zero() const;
  bool operator==(const RingElem& o) const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator*(const Int& s) const;

  Int augmentation() const;  // constant coefficient
  bool is_unit() const;      // augmentation nonzero mod p
  RingElem inverse() const;  // throws std::invalid_argument on non-units

  /// True when the element is p * (something); lift() returns such a
  /// something (all canonical coefficients divided by p).
  bool divisible_by_p() const;
  RingElem divide_by_p() const;

  /// Nonzero terms as (monomial index, coefficient), index ascending.
  std::vector<std::pair<std::size_t, Int>> terms() const;
  /// Number of nonzero terms.
  std::size_t term_count() const;
  /// Weight of a term: degree + (p-1) * v_p(coefficient).
  int term_weight(std::size_t index) const;

  std::string str() const;  // canonical text form

 private:
  friend class Ring;
  RingElem(std::shared_ptr<const Ring> ring, std::vector<Int> c)
      : ring_(std::move(ring)), c_(std::move(c)) {}

  std::shared_ptr<const Ring> ring_;
  std::vector<Int> c_;
};

/// Primality check for the small parameters used here.
bool is_prime(int p);

/// p-adic valuation of c (c != 0) capped at `cap`.
int p_valuation(const Int& c, int p, int cap);

/// Modular inverse of a mod m (gcd(a, m) = 1), in [0, m).
Int mod_inverse(const Int& a, const Int& m);

}  // namespace k2gr
