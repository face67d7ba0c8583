#include "k2gr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "k2gr/orders.hpp"

namespace k2gr {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int p_valuation(const Int& c, int p, int cap) {
  Int v = c;
  int out = 0;
  while (out < cap && v != 0 && v % p == 0) {
    v /= p;
    ++out;
  }
  return out;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r0 = m, r1 = ((a % m) + m) % m;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return ((t0 % m) + m) % m;
}

namespace {

Int binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  Int r = 1;
  for (int i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

Int ipow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::string family_name(RingFamily f) {
  switch (f) {
    case RingFamily::FpG: return "fpg";
    case RingFamily::ZpkG: return "zpk";
    case RingFamily::FpGModGtilde: return "fpg-gtilde";
    case RingFamily::ZGModPkGamma: return "zg-pkgamma";
  }
  throw std::logic_error("family_name: bad enum");
}

RingFamily parse_family(const std::string& s) {
  if (s == "fpg") return RingFamily::FpG;
  if (s == "zpk") return RingFamily::ZpkG;
  if (s == "fpg-gtilde") return RingFamily::FpGModGtilde;
  if (s == "zg-pkgamma") return RingFamily::ZGModPkGamma;
  throw std::invalid_argument("unknown ring family: " + s);
}

RingSpec RingSpec::make(RingFamily family, int p, int n, int k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  double size = 1;
  for (int i = 0; i < n; ++i) size *= p;
  if (size > 1e5) throw std::invalid_argument("p^n too large for dense arithmetic");
  RingSpec s;
  s.family = family;
  s.p = p;
  s.n = n;
  s.k = k;
  switch (family) {
    case RingFamily::FpG:
      s.k = 1;
      break;
    case RingFamily::FpGModGtilde:
      s.k = 1;
      if (n < 2)
        throw unsupported_error("unsupported: top-monomial quotient needs n >= 2");
      break;
    case RingFamily::ZpkG:
      if (k < 2)
        throw unsupported_error("unsupported: use family fpg for exponent k = 1");
      break;
    case RingFamily::ZGModPkGamma:
      if (k < n)
        throw std::invalid_argument("zg-pkgamma requires k >= n (p^k Gamma must sit inside Z[G])");
      break;
  }
  return s;
}

std::shared_ptr<const Ring> Ring::create(const RingSpec& spec) {
  RingSpec checked = RingSpec::make(spec.family, spec.p, spec.n, spec.k);
  return std::shared_ptr<const Ring>(new Ring(checked));
}

Ring::Ring(const RingSpec& spec) : spec_(spec) {
  const int p = spec_.p, n = spec_.n;
  m_ = 1;
  radix_.resize(n);
  for (int i = 0; i < n; ++i) {
    radix_[i] = static_cast<int>(m_);
    m_ *= p;
  }
  pk_ = ipow(p, spec_.k);

  // Single-variable power table: x^e as a row of coefficients over x^0..x^{p-1},
  // using x^p = -sum_{j=1}^{p-1} C(p,j) x^j (from (1+x)^p = 1).
  xpow_.assign(2 * p - 1, std::vector<Int>(p, 0));
  xpow_[0][0] = 1;
  for (int e = 1; e <= 2 * p - 2; ++e) {
    std::vector<Int> cur(p, 0);
    Int overflow = 0;
    for (int d = p - 1; d >= 0; --d) {
      if (d + 1 == p)
        overflow = xpow_[e - 1][d];
      else
        cur[d + 1] = xpow_[e - 1][d];
    }
    if (overflow != 0)
      for (int j = 1; j <= p - 1; ++j) cur[j] -= overflow * binom(p, j);
    xpow_[e] = std::move(cur);
  }

  if (spec_.family == RingFamily::ZGModPkGamma) {
    // Transport the p^k Gamma lattice from the group-element basis to the
    // x-monomial basis (unimodular binomial change of coordinates), then HNF.
    const IntegerLattice lat = quotient_mod_pk_gamma(p, n, spec_.k).ideal();
    const ZMat& rows_sigma = lat.basis();
    ZMat rows_x(m_, std::vector<Int>(m_, 0));
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t a = 0; a < m_; ++a) {
        if (rows_sigma[r][a] == 0) continue;
        std::vector<int> av = exponents_of(a);
        // sigma^a = prod_i (1+x_i)^{a_i} expands with binomial coefficients.
        for (std::size_t l = 0; l < m_; ++l) {
          std::vector<int> lv = exponents_of(l);
          Int c = 1;
          for (int i = 0; i < n && c != 0; ++i) c *= binom(av[i], lv[i]);
          if (c != 0) rows_x[r][l] += rows_sigma[r][a] * c;
        }
      }
    }
    lattice_hnf_ = hnf(rows_x);
    moduli_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) moduli_[i] = lattice_hnf_[i][i];
  } else {
    moduli_.assign(m_, pk_);
    if (spec_.family == RingFamily::FpGModGtilde) moduli_[m_ - 1] = 1;
  }
}

std::vector<int> Ring::exponents_of(std::size_t index) const {
  std::vector<int> e(spec_.n);
  for (int i = 0; i < spec_.n; ++i) {
    e[i] = static_cast<int>(index % spec_.p);
    index /= spec_.p;
  }
  return e;
}

std::size_t Ring::index_of(const std::vector<int>& exponents) const {
  if (exponents.size() != static_cast<std::size_t>(spec_.n))
    throw std::invalid_argument("exponent vector has wrong length");
  std::size_t idx = 0;
  for (int i = 0; i < spec_.n; ++i) {
    if (exponents[i] < 0 || exponents[i] >= spec_.p)
      throw std::invalid_argument("exponent out of range [0, p)");
    idx += static_cast<std::size_t>(exponents[i]) * radix_[i];
  }
  return idx;
}

int Ring::degree_of(std::size_t index) const {
  int d = 0;
  for (int i = 0; i < spec_.n; ++i) {
    d += static_cast<int>(index % spec_.p);
    index /= spec_.p;
  }
  return d;
}

std::vector<Int> Ring::reduce(std::vector<Int> raw) const {
  if (spec_.family == RingFamily::ZGModPkGamma) {
    for (std::size_t i = 0; i < m_; ++i) {
      Int& v = raw[i];
      v %= pk_;
      if (v < 0) v += pk_;
      const Int& d = lattice_hnf_[i][i];
      Int q = v / d;  // v >= 0, so this is a floor division
      if (q != 0)
        for (std::size_t c = i; c < m_; ++c) raw[c] -= q * lattice_hnf_[i][c];
      // Row subtraction can make later entries negative; they get normalised
      // by their own mod step when the loop reaches them.
    }
    for (std::size_t i = 0; i < m_; ++i) {
      raw[i] %= moduli_[i];
      if (raw[i] < 0) raw[i] += moduli_[i];
    }
    return raw;
  }
  for (std::size_t i = 0; i < m_; ++i) {
    raw[i] %= pk_;
    if (raw[i] < 0) raw[i] += pk_;
  }
  if (spec_.family == RingFamily::FpGModGtilde) raw[m_ - 1] = 0;
  return raw;
}

std::vector<Int> Ring::monomial_product(std::size_t a, std::size_t b) const {
  const int p = spec_.p, n = spec_.n;
  std::vector<int> av = exponents_of(a), bv = exponents_of(b);
  std::vector<Int> out(m_, 0);
  // Expand prod_i x_i^{a_i+b_i} variable by variable; each factor is a row of
  // the single-variable power table (a unit vector unless a_i+b_i >= p).
  std::vector<std::pair<std::size_t, Int>> acc = {{0, Int(1)}};
  for (int i = 0; i < n; ++i) {
    const std::vector<Int>& row = xpow_[av[i] + bv[i]];
    std::vector<std::pair<std::size_t, Int>> next;
    for (const auto& [idx, c] : acc)
      for (int e = 0; e < p; ++e)
        if (row[e] != 0) next.emplace_back(idx + static_cast<std::size_t>(e) * radix_[i], c * row[e]);
    acc = std::move(next);
  }
  for (const auto& [idx, c] : acc) out[idx] += c;
  return out;
}

RingElem Ring::zero() const { return RingElem(shared_from_this(), std::vector<Int>(m_, 0)); }

RingElem Ring::one() const { return scalar(1); }

RingElem Ring::scalar(const Int& c) const {
  std::vector<Int> v(m_, 0);
  v[0] = c;
  return RingElem(shared_from_this(), reduce(std::move(v)));
}

RingElem Ring::monomial(const std::vector<int>& exponents, const Int& coeff) const {
  std::vector<Int> v(m_, 0);
  v[index_of(exponents)] = coeff;
  return RingElem(shared_from_this(), reduce(std::move(v)));
}

RingElem Ring::generator(int i) const {
  if (i < 1 || i > spec_.n) throw std::invalid_argument("generator index out of range");
  std::vector<int> e(spec_.n, 0);
  e[i - 1] = 1;
  return monomial(e);
}

RingElem Ring::gtilde() const {
  if (spec_.family != RingFamily::FpG && spec_.family != RingFamily::ZpkG)
    throw std::invalid_argument("gtilde is only exposed for the full group rings");
  // Sum over the group of sigma^a = prod_i (sum_{a=0}^{p-1} (1+x_i)^a), and
  // each single-variable factor collapses to sum_l C(p, l+1) x_i^l.
  RingElem acc = one();
  for (int i = 1; i <= spec_.n; ++i) {
    RingElem factor = zero();
    for (int l = 0; l <= spec_.p - 1; ++l) {
      std::vector<int> e(spec_.n, 0);
      e[i - 1] = l;
      factor = factor + monomial(e, binom(spec_.p, l + 1));
    }
    acc = acc * factor;
  }
  return acc;
}

RingElem Ring::from_coeffs(std::vector<Int> raw) const {
  if (raw.size() != m_) throw std::invalid_argument("coefficient vector has wrong length");
  return RingElem(shared_from_this(), reduce(std::move(raw)));
}

RingElem Ring::from_sigma_basis(const std::map<std::vector<int>, Int>& v) const {
  std::vector<Int> out(m_, 0);
  for (const auto& [a, c] : v) {
    if (a.size() != static_cast<std::size_t>(spec_.n))
      throw std::invalid_argument("sigma exponent vector has wrong length");
    for (std::size_t l = 0; l < m_; ++l) {
      std::vector<int> lv = exponents_of(l);
      Int t = c;
      for (int i = 0; i < spec_.n && t != 0; ++i) t *= binom(a[i], lv[i]);
      if (t != 0) out[l] += t;
    }
  }
  return RingElem(shared_from_this(), reduce(std::move(out)));
}

std::map<std::vector<int>, Int> Ring::to_sigma_basis(const RingElem& a) const {
  // Inverse binomial transform: x^l = (sigma - 1)^l expands with signs.
  std::map<std::vector<int>, Int> out;
  for (std::size_t l = 0; l < m_; ++l) {
    if (a.coeff(l) == 0) continue;
    std::vector<int> lv = exponents_of(l);
    for (std::size_t g = 0; g < m_; ++g) {
      std::vector<int> gv = exponents_of(g);
      Int t = a.coeff(l);
      for (int i = 0; i < spec_.n && t != 0; ++i) {
        int li = lv[i], gi = gv[i];
        if (gi > li) { t = 0; break; }
        Int c = binom(li, gi);
        if ((li - gi) % 2 != 0) c = -c;
        t *= c;
      }
      if (t != 0) out[gv] += t;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    Int v = it->second % pk_;
    if (v < 0) v += pk_;
    if (v == 0) it = out.erase(it);
    else { it->second = v; ++it; }
  }
  return out;
}

Int Ring::order() const {
  Int o = 1;
  for (const Int& d : moduli_) o *= d;
  return o;
}

bool RingElem::is_zero() const {
  for (const Int& v : c_)
    if (v != 0) return false;
  return true;
}

bool RingElem::operator==(const RingElem& o) const {
  return ring_->spec() == o.ring_->spec() && c_ == o.c_;
}

RingElem RingElem::operator+(const RingElem& o) const {
  std::vector<Int> v = c_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return RingElem(ring_, ring_->reduce(std::move(v)));
}

RingElem RingElem::operator-(const RingElem& o) const {
  std::vector<Int> v = c_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
  return RingElem(ring_, ring_->reduce(std::move(v)));
}

RingElem RingElem::operator-() const {
  std::vector<Int> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
  return RingElem(ring_, ring_->reduce(std::move(v)));
}

RingElem RingElem::operator*(const RingElem& o) const {
  std::vector<Int> acc(c_.size(), 0);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) {
      if (o.c_[b] == 0) continue;
      Int coeff = c_[a] * o.c_[b];
      std::vector<Int> prod = ring_->monomial_product(a, b);
      for (std::size_t t = 0; t < acc.size(); ++t)
        if (prod[t] != 0) acc[t] += coeff * prod[t];
    }
  }
  return RingElem(ring_, ring_->reduce(std::move(acc)));
}

RingElem RingElem::operator*(const Int& s) const {
  std::vector<Int> v = c_;
  for (Int& x : v) x *= s;
  return RingElem(ring_, ring_->reduce(std::move(v)));
}

Int RingElem::augmentation() const { return c_[0]; }

bool RingElem::is_unit() const { return c_[0] % ring_->p() != 0; }

RingElem RingElem::inverse() const {
  if (!is_unit()) throw std::invalid_argument("inverse of a non-unit");
  // Newton iteration y <- y(2 - a y) on the finite local ring; the error
  // 1 - a*y starts in the maximal ideal and squares each round, so it
  // vanishes after finitely many steps.
  RingElem y = ring_->scalar(mod_inverse(c_[0], ring_->pk()));
  const RingElem one = ring_->one();
  for (int it = 0; it < 64; ++it) {
    RingElem prod = (*this) * y;
    if (prod == one) return y;
    y = y * (ring_->scalar(2) - prod);
  }
  throw std::logic_error("inverse: Newton iteration failed to converge");
}

bool RingElem::divisible_by_p() const {
  for (const Int& v : c_)
    if (v % ring_->p() != 0) return false;
  return true;
}

RingElem RingElem::divide_by_p() const {
  if (!divisible_by_p()) throw std::invalid_argument("divide_by_p: element is not p-divisible");
  std::vector<Int> v = c_;
  for (Int& x : v) x /= ring_->p();
  return RingElem(ring_, ring_->reduce(std::move(v)));
}

std::vector<std::pair<std::size_t, Int>> RingElem::terms() const {
  std::vector<std::pair<std::size_t, Int>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(i, c_[i]);
  return out;
}

std::size_t RingElem::term_count() const {
  std::size_t t = 0;
  for (const Int& v : c_)
    if (v != 0) ++t;
  return t;
}

int RingElem::term_weight(std::size_t index) const {
  if (c_[index] == 0) throw std::invalid_argument("term_weight of a zero term");
  return ring_->degree_of(index) +
         (ring_->p() - 1) * p_valuation(c_[index], ring_->p(), ring_->k());
}

std::string RingElem::str() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) idx.push_back(i);
  if (idx.empty()) return "0";
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int da = ring_->degree_of(a), db = ring_->degree_of(b);
    if (da != db) return da < db;
    return a < b;
  });
  std::ostringstream os;
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) os << "+";
    first = false;
    std::vector<int> e = ring_->exponents_of(i);
    bool has_mono = i != 0;
    if (!has_mono || c_[i] != 1) {
      os << c_[i];
      if (has_mono) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < ring_->n(); ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (v + 1);
      if (e[v] >= 2) os << "^" << e[v];
    }
  }
  return os.str();
}

namespace {

struct ElemParser {
  const std::string& s;
  std::size_t pos = 0;
  const Ring& ring;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }

  // term := number ('*' vars)? | vars ; vars := var ('*' var)*
  // var  := 'x' index ('^' exponent)?
  void term(std::vector<Int>& acc, int sign) {
    skip_ws();
    if (pos >= s.size()) fail("expected a term");
    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number();
      saw_coeff = true;
      std::size_t save = pos;
      if (!eat('*')) { pos = save; }
      else {
        skip_ws();
        if (pos >= s.size() || s[pos] != 'x') fail("expected a variable after '*'");
      }
    }
    std::vector<int> exps(ring.n(), 0);
    bool saw_var = false;
    skip_ws();
    while (pos < s.size() && s[pos] == 'x') {
      ++pos;
      Int iv = number();
      if (iv < 1 || iv > ring.n()) fail("variable index out of range");
      int vi = static_cast<int>(iv) - 1;
      Int ev = 1;
      std::size_t save = pos;
      if (eat('^')) ev = number();
      else pos = save;
      if (ev < 0 || ev > ring.p() - 1) fail("exponent out of range [0, p-1]");
      exps[vi] += static_cast<int>(ev);
      if (exps[vi] > ring.p() - 1) fail("total exponent of a variable exceeds p-1");
      saw_var = true;
      std::size_t save2 = pos;
      if (!eat('*')) { pos = save2; break; }
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') fail("expected a variable after '*'");
    }
    if (!saw_coeff && !saw_var) fail("expected a coefficient or a variable");
    acc[ring.index_of(exps)] += sign * coeff;
  }

  std::vector<Int> parse_all() {
    std::vector<Int> acc(ring.monomials(), 0);
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    else if (eat('+')) sign = 1;
    term(acc, sign);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else fail("expected '+' or '-' between terms");
      term(acc, sign);
    }
    return acc;
  }
};

}  // namespace

RingElem Ring::parse(const std::string& text) const {
  ElemParser p{text, 0, *this};
  return RingElem(shared_from_this(), reduce(p.parse_all()));
}

}  // namespace k2gr
