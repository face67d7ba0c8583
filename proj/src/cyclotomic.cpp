#include "k2gr/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace k2gr {

namespace {

// Folds a raw coefficient vector (any length) into the power basis
// 1..zeta^(p-2) using zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<Int> fold(int p, std::vector<Int> raw) {
  for (std::size_t d = raw.size(); d-- > static_cast<std::size_t>(p - 1);) {
    Int c = raw[d];
    if (c == 0) continue;
    raw[d] = 0;
    for (int t = 0; t <= p - 2; ++t) raw[d - (p - 1) + t] -= c;
  }
  raw.resize(p - 1);
  return raw;
}

}  // namespace

CycInt::CycInt(int p, std::vector<Int> coeffs, Int modulus) : p_(p), mod_(std::move(modulus)) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (mod_ < 0) throw std::invalid_argument("modulus must be nonnegative");
  c_ = fold(p, std::move(coeffs));
  reduce();
}

void CycInt::reduce() {
  if (mod_ == 0) return;
  for (Int& v : c_) {
    v %= mod_;
    if (v < 0) v += mod_;
  }
}

CycInt CycInt::zero(int p, Int modulus) { return CycInt(p, std::vector<Int>(p - 1, 0), std::move(modulus)); }

CycInt CycInt::one(int p, Int modulus) { return integer(p, 1, std::move(modulus)); }

CycInt CycInt::zeta(int p, Int modulus) {
  std::vector<Int> c(p - 1, 0);
  if (p == 2)
    c[0] = -1;  // zeta_2 = -1
  else
    c[1] = 1;
  return CycInt(p, std::move(c), std::move(modulus));
}

CycInt CycInt::integer(int p, const Int& v, Int modulus) {
  std::vector<Int> c(p - 1, 0);
  c[0] = v;
  return CycInt(p, std::move(c), std::move(modulus));
}

bool CycInt::is_zero() const {
  for (const Int& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Int CycInt::integer_value() const {
  if (!is_integer()) throw std::invalid_argument("element is not a rational integer");
  return c_[0];
}

bool CycInt::operator==(const CycInt& o) const {
  return p_ == o.p_ && mod_ == o.mod_ && c_ == o.c_;
}

namespace {
void check_compatible(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p() || a.modulus() != b.modulus())
    throw std::invalid_argument("cyclotomic elements are over different rings");
}
}  // namespace

CycInt CycInt::operator+(const CycInt& o) const {
  check_compatible(*this, o);
  std::vector<Int> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return CycInt(p_, std::move(c), mod_);
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_compatible(*this, o);
  std::vector<Int> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return CycInt(p_, std::move(c), mod_);
}

CycInt CycInt::operator-() const {
  std::vector<Int> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return CycInt(p_, std::move(c), mod_);
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_compatible(*this, o);
  std::vector<Int> raw(2 * (p_ - 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) raw[i + j] += c_[i] * o.c_[j];
  }
  return CycInt(p_, std::move(raw), mod_);
}

CycInt CycInt::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  CycInt r = one(p_, mod_);
  CycInt b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

CycInt CycInt::conjugate(int j) const {
  if (j < 1 || j >= p_ || (p_ > 2 && j % p_ == 0))
    throw std::invalid_argument("conjugate index must lie in [1, p-1]");
  std::vector<Int> raw((p_ - 2) * j + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) raw[i * j] += c_[i];
  return CycInt(p_, std::move(raw), mod_);
}

Int CycInt::norm() const {
  CycInt prod = one(p_, mod_);
  for (int j = 1; j <= p_ - 1; ++j) prod = prod * conjugate(j);
  return prod.integer_value();
}

bool CycInt::divisible(const Int& d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  for (const Int& v : c_)
    if (v % d != 0) return false;
  return true;
}

CycInt CycInt::divide(const Int& d) const {
  if (!divisible(d)) throw std::invalid_argument("coefficients are not divisible");
  std::vector<Int> c = c_;
  for (Int& v : c) v /= d;
  return CycInt(p_, std::move(c), mod_);
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) {
      os << c_[i];
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "z";
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

UniformizerReport verify_uniformizer(int p, int bound) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("verify_uniformizer needs an odd prime");
  if (p > bound) throw std::invalid_argument("p exceeds the configured bound");

  UniformizerReport rep;
  rep.p = p;
  const CycInt pi = CycInt::zeta(p) - CycInt::one(p);
  rep.norm_pi = pi.norm();

  // u = p * (pi^(p-1))^{-1}: multiply by the product of the other conjugates
  // (B) so that pi^(p-1) * B = Norm(pi^(p-1)) = p^(p-1), then divide exactly.
  const CycInt pipow = pi.pow(p - 1);
  CycInt b = CycInt::one(p);
  for (int j = 2; j <= p - 1; ++j) b = b * pipow.conjugate(j);
  Int ppow = 1;
  for (int i = 0; i < p - 2; ++i) ppow *= p;  // p^(p-2) = p^(p-1) / p
  if (!b.divisible(ppow))
    throw std::logic_error("uniformizer division is not exact");
  const CycInt u = b.divide(ppow);
  rep.unit_coeffs = u.coeffs();
  rep.p_is_unit_times_pi_power = (u * pipow == CycInt::integer(p, p));
  rep.unit_norm = u.norm();

  rep.one_plus_pi_has_order_p =
      (CycInt::one(p) + pi).pow(p) == CycInt::one(p) && !((CycInt::one(p) + pi) == CycInt::one(p));

  rep.pass = rep.norm_pi == p && rep.p_is_unit_times_pi_power &&
             (rep.unit_norm == 1 || rep.unit_norm == -1) && rep.one_plus_pi_has_order_p;
  return rep;
}

CycInt chi_push(const RingElem& a) {
  const auto& ring = a.ring();
  if (ring->n() != 1 ||
      (ring->spec().family != RingFamily::FpG && ring->spec().family != RingFamily::ZpkG))
    throw std::invalid_argument("chi_push needs a full group ring with n = 1");
  const int p = ring->p();
  const Int mod = ring->pk();
  const CycInt pi = CycInt::zeta(p, mod) - CycInt::one(p, mod);
  CycInt out = CycInt::zero(p, mod);
  for (const auto& [idx, c] : a.terms())
    out = out + pi.pow(static_cast<int>(idx)) * CycInt::integer(p, c, mod);
  return out;
}

std::pair<CycInt, CycInt> chi_push_symbol(const RingElem& a, const RingElem& b) {
  return {chi_push(a), chi_push(b)};
}

}  // namespace k2gr
