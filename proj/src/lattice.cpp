#include "k2gr/lattice.hpp"

#include <numeric>

namespace k2gr {

namespace mp = boost::multiprecision;

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

IntegerLattice::IntegerLattice(const ZMat& rows, Int denominator)
    : basis_(hnf(rows)), denom_(denominator) {
  if (denom_ <= 0) throw std::invalid_argument("lattice: denominator must be positive");
  // Normalize: divide out gcd(content of basis, denominator).
  Int g = denom_;
  for (const auto& r : basis_)
    for (const auto& e : r) g = gcd_int(g, e);
  if (g > 1) {
    for (auto& r : basis_)
      for (auto& e : r) e /= g;
    denom_ /= g;
  }
}

bool IntegerLattice::contains(const std::vector<Rat>& v) const {
  if (v.size() != ambient_rank())
    throw std::invalid_argument("lattice contains: rank mismatch");
  // v in basis/denom  <=>  denom * v is an integral combination of basis rows.
  std::vector<Int> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(denom_);
    if (mp::denominator(s) != 1) return false;
    scaled[i] = mp::numerator(s);
  }
  return solve_upper_triangular(basis_, scaled);
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
  std::vector<Rat> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return contains(q);
}

Rat IntegerLattice::covolume() const {
  Rat d(diagonal_product(basis_));
  Int scale = 1;
  for (std::size_t i = 0; i < ambient_rank(); ++i) scale *= denom_;
  return d / scale;
}

IntegerLattice IntegerLattice::sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("lattice sum: rank mismatch");
  // Common denominator d = lcm(da, db); rows scale accordingly.
  Int g = gcd_int(a.denom_, b.denom_), d = a.denom_ / g * b.denom_;
  ZMat rows;
  Int fa = d / a.denom_, fb = d / b.denom_;
  for (const auto& r : a.basis_) {
    rows.push_back(r);
    for (auto& e : rows.back()) e *= fa;
  }
  for (const auto& r : b.basis_) {
    rows.push_back(r);
    for (auto& e : rows.back()) e *= fb;
  }
  return IntegerLattice(rows, d);
}

IntegerLattice IntegerLattice::scale(const IntegerLattice& a, const Rat& factor) {
  if (factor <= 0) throw std::invalid_argument("lattice scale: factor must be positive");
  ZMat rows = a.basis_;
  for (auto& r : rows)
    for (auto& e : r) e *= mp::numerator(factor);
  return IntegerLattice(rows, a.denom_ * mp::denominator(factor));
}

bool lattice_leq(const IntegerLattice& l1, const IntegerLattice& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw std::invalid_argument("lattice_leq: rank mismatch");
  for (const auto& row : l1.basis()) {
    std::vector<Rat> v(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) v[i] = Rat(row[i], l1.denominator());
    if (!l2.contains(v)) return false;
  }
  return true;
}

Int lattice_index(const IntegerLattice& l1, const IntegerLattice& l2) {
  if (!lattice_leq(l1, l2))
    throw std::invalid_argument("lattice_index: first lattice not contained in second");
  Rat ratio = l1.covolume() / l2.covolume();
  if (mp::denominator(ratio) != 1)
    throw std::logic_error("lattice_index: non-integral covolume ratio");
  return mp::numerator(ratio);
}

FiniteQuotientRing::FiniteQuotientRing(int p, int n, IntegerLattice ideal)
    : p_(p), n_(n), ideal_(std::move(ideal)) {
  m_ = 1;
  for (int i = 0; i < n_; ++i) m_ *= static_cast<std::size_t>(p_);
  if (ideal_.ambient_rank() != m_)
    throw std::invalid_argument("quotient ring: ideal rank mismatch");
  if (ideal_.denominator() != 1)
    throw std::invalid_argument("quotient ring: ideal must be integral");

  // Index-addition table for the sigma basis (mixed-radix digits mod p).
  mul_table_.assign(m_, std::vector<std::size_t>(m_));
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b) {
      std::size_t r = 0, stride = 1, aa = a, bb = b;
      for (int i = 0; i < n_; ++i) {
        std::size_t digit = (aa % p_ + bb % p_) % p_;
        r += digit * stride;
        stride *= p_;
        aa /= p_;
        bb /= p_;
      }
      mul_table_[a][b] = r;
    }

  // Ideal closure under multiplication by each sigma generator.
  for (std::size_t g = 0; g < m_; ++g) {
    bool is_generator = false;
    std::size_t gg = g, digits = 0, ones = 0;
    for (int i = 0; i < n_; ++i) {
      if (gg % p_ != 0) ++digits;
      if (gg % p_ == 1) ++ones;
      gg /= p_;
    }
    is_generator = (digits == 1 && ones == 1);
    if (!is_generator) continue;
    for (const auto& row : ideal_.basis()) {
      std::vector<Int> shifted(m_, 0);
      for (std::size_t a = 0; a < m_; ++a) shifted[mul_table_[a][g]] += row[a];
      if (!ideal_.contains(shifted))
        throw std::invalid_argument("quotient ring: lattice is not an ideal");
    }
  }
}

Int FiniteQuotientRing::order() const { return diagonal_product(ideal_.basis()); }

std::vector<Int> FiniteQuotientRing::reduce(std::vector<Int> v) const {
  if (v.size() != m_) throw std::invalid_argument("quotient reduce: size mismatch");
  const ZMat& h = ideal_.basis();
  for (std::size_t i = 0; i < m_; ++i) {
    Int q = v[i] / h[i][i];
    if (v[i] - q * h[i][i] < 0) q -= 1;  // floor: canonical range [0, diag)
    if (q != 0)
      for (std::size_t c = i; c < m_; ++c) v[c] -= q * h[i][c];
  }
  return v;
}

std::vector<Int> FiniteQuotientRing::add(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
  std::vector<Int> s(m_);
  for (std::size_t i = 0; i < m_; ++i) s[i] = a[i] + b[i];
  return reduce(std::move(s));
}

std::vector<Int> FiniteQuotientRing::group_algebra_mul(const std::vector<Int>& a,
                                                       const std::vector<Int>& b) const {
  std::vector<Int> prod(m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) {
      if (b[j] == 0) continue;
      prod[mul_table_[i][j]] += a[i] * b[j];
    }
  }
  return prod;
}

std::vector<Int> FiniteQuotientRing::mul(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
  return reduce(group_algebra_mul(a, b));
}

}  // namespace k2gr
