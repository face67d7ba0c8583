#include "k2gr/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k2gr/zmat.hpp"

namespace k2gr {

bool validate(const DSSymbol& s) {
  return (s.a.ring()->one() - s.a * s.b).is_unit();
}

DSSymbol make_symbol(RingElem a, RingElem b) {
  if (!(a.ring()->spec() == b.ring()->spec()))
    throw std::invalid_argument("symbol slots live in different rings");
  DSSymbol s{std::move(a), std::move(b)};
  if (!validate(s)) throw std::invalid_argument("invalid symbol: 1 - ab must be a unit");
  return s;
}

std::pair<RingElem, RingElem> to_steinberg(const DSSymbol& s) {
  if (!s.a.is_unit()) throw std::invalid_argument("to_steinberg needs a unit first slot");
  return {s.a, s.a.ring()->one() - s.a * s.b};
}

SymbolWord ds3_expand(const RingElem& a, const RingElem& b, const RingElem& c) {
  make_symbol(a, b * c);  // validity of the left-hand side
  SymbolWord w;
  w.terms.emplace_back(make_symbol(a * b, c), 1);
  w.terms.emplace_back(make_symbol(a * c, b), 1);
  return w;
}

SymbolWord scholium_word(const std::shared_ptr<const Ring>& ring, const std::vector<int>& factors) {
  if (factors.empty()) throw std::invalid_argument("scholium_word needs at least one factor");
  std::vector<int> mu(ring->n(), 0);
  for (int f : factors) {
    if (f < 1 || f > ring->n()) throw std::invalid_argument("factor index out of range");
    if (++mu[f - 1] > ring->p() - 1)
      throw std::invalid_argument("factor multiplicity exceeds p-1");
  }
  SymbolWord w;
  for (int i = 1; i <= ring->n(); ++i) {
    if (mu[i - 1] == 0) continue;
    std::vector<int> rest = mu;
    rest[i - 1] -= 1;
    w.terms.emplace_back(make_symbol(ring->generator(i), ring->monomial(rest)), mu[i - 1]);
  }
  return w;
}

int SymbolVector::coord(const std::string& id) const {
  auto it = coords_.find(id);
  return it == coords_.end() ? 0 : it->second;
}

void SymbolVector::add(const std::string& id, int mult) {
  int v = ((coords_[id] + mult) % spec_.p + spec_.p) % spec_.p;
  if (v == 0)
    coords_.erase(id);
  else
    coords_[id] = v;
}

SymbolVector SymbolVector::operator+(const SymbolVector& o) const {
  SymbolVector out = *this;
  for (const auto& [id, v] : o.coords_) out.add(id, v);
  return out;
}

SymbolVector SymbolVector::operator-(const SymbolVector& o) const {
  SymbolVector out = *this;
  for (const auto& [id, v] : o.coords_) out.add(id, -v);
  return out;
}

SymbolVector SymbolVector::operator*(int s) const {
  SymbolVector out(spec_);
  for (const auto& [id, v] : coords_) out.add(id, v * s);
  return out;
}

std::string SymbolVector::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, v] : coords_) {
    if (!first) os << "+";
    first = false;
    if (v != 1) os << v << "*";
    os << id;
  }
  return os.str();
}

namespace {

// Teichmueller component of a unit constant: c^(p^(k-1)) mod p^k.
Int teichmuller(const Int& c, int p, int k, const Int& mod) {
  Int e = 1;
  for (int i = 0; i < k - 1; ++i) e *= p;
  Int r = 1, base = c % mod;
  for (Int i = 0; i < e; ++i) r = r * base % mod;
  return r;
}

// Nonzero component of K2(Z/4): <c,d> is the nontrivial class exactly when
// both residues mod 4 lie in {2,3}.
int psi_scalar(const Int& c, const Int& d) {
  Int c4 = ((c % 4) + 4) % 4, d4 = ((d % 4) + 4) % 4;
  return static_cast<int>((c4 / 2) * (d4 / 2) % 2);
}

}  // namespace

SymbolEngine::SymbolEngine(const RingSpec& spec)
    : spec_(RingSpec::make(spec.family, spec.p, spec.n, spec.k)) {
  RingSpec work = spec_;
  if (work.family == RingFamily::ZpkG && work.k > 2) work.k = 2;
  // For k >= n+1 the quotient by p^k Gamma is a quotient of the plain mod-p^k
  // group ring with the same K2 coordinates (equal rank, equal basis ids, and
  // the quotient map matches them up), so reduction can run upstairs.
  if (work.family == RingFamily::ZGModPkGamma && work.k >= work.n + 1) {
    work.family = RingFamily::ZpkG;
    work.k = 2;
  }
  ring_ = Ring::create(work);
  basis_ = basis(spec_);
  basis_set_ = std::set<GeneratorId>(basis_.begin(), basis_.end());
  std::vector<Int> p2(ring_->monomials(), Int(spec_.p) * spec_.p);
  p2r_zero_ = ring_->from_coeffs(std::move(p2)).is_zero();
}

RingElem SymbolEngine::import(const RingElem& e) const {
  if (!(e.ring()->spec() == spec_))
    throw std::invalid_argument("element is over a different ring spec");
  return ring_->from_coeffs(e.coeffs());
}

bool SymbolEngine::is_scalar_pp_pair(const DSSymbol& s) const {
  if (!(s.a == s.b)) return false;
  const auto& r = s.a.ring();
  return s.a == r->scalar(spec_.p) || s.a == r->scalar(-spec_.p);
}

SymbolVector SymbolEngine::reduce(const DSSymbol& s) const {
  SymbolWord w;
  w.terms.emplace_back(s, 1);
  return reduce(w);
}

SymbolVector SymbolEngine::reduce(const SymbolWord& w) const {
  std::map<GeneratorId, int> acc;
  std::vector<Task> work;
  for (const auto& [s, mult] : w.terms) {
    if (!(s.a.ring()->spec() == spec_) || !(s.b.ring()->spec() == spec_))
      throw std::invalid_argument("symbol is over a different ring spec");
    if (is_scalar_pp_pair(s)) {
      // <-p,-p>: zero for odd p; the extra coordinate for p = 2 where the
      // basis carries it (over F_2 the element -p is 0 and the class dies).
      GeneratorId pp = GeneratorId::scalar_pp();
      if (spec_.p == 2 && basis_set_.count(pp)) acc[pp] += mult;
      continue;
    }
    RingElem a = import(s.a), b = import(s.b);
    auto at = a.terms();
    if (at.size() != 1 || at[0].second % spec_.p == 0)
      throw std::invalid_argument("first argument outside the supported shape");
    if (!(ring_->one() - a * b).is_unit())
      throw std::invalid_argument("invalid symbol: 1 - ab must be a unit");
    work.push_back(Task{std::move(a), std::move(b), mult});
  }
  run(std::move(work), acc);
  return finish(acc);
}

SymbolVector SymbolEngine::reduce_steinberg(const RingElem& u, const RingElem& v) const {
  RingElem a = import(u), w = import(v);
  if (!a.is_unit() || !w.is_unit())
    throw std::invalid_argument("Steinberg symbol needs two units");
  RingElem b = (ring_->one() - w) * a.inverse();
  std::map<GeneratorId, int> acc;
  run({Task{std::move(a), std::move(b), 1}}, acc);
  return finish(acc);
}

void SymbolEngine::run(std::vector<Task> work, std::map<GeneratorId, int>& acc) const {
  long fuel = 200000;
  while (!work.empty()) {
    if (--fuel < 0)
      throw std::logic_error("symbol reduction exceeded its step budget");
    Task t = std::move(work.back());
    work.pop_back();
    step(std::move(t), work, acc);
  }
}

void SymbolEngine::step(Task t, std::vector<Task>& work, std::map<GeneratorId, int>& acc) const {
  const int p = spec_.p;
  t.mult = ((t.mult % p) + p) % p;
  if (t.mult == 0) return;
  const RingElem& A = t.a;
  const RingElem& B = t.b;
  if (A.is_zero() || B.is_zero()) return;
  const RingElem one = ring_->one();

  const auto at = A.terms();
  const auto bt = B.terms();
  const bool a_const = at.size() == 1 && at[0].first == 0;
  const bool b_const = bt.size() == 1 && bt[0].first == 0;

  if (a_const && b_const) {
    // Scalar pair: only the 2-primary scalar class survives in these rings.
    if (p == 2) {
      int v = psi_scalar(at[0].second, bt[0].second) * t.mult;
      if (v != 0) acc[GeneratorId::scalar_pp()] += v;
    }
    return;
  }

  if (A == one) return;  // {1, 1-B} = 0

  if (at.size() > 1) {
    // Normalize the first slot: split off a unit constant term when present,
    // otherwise peel the lowest-weight term,
    //   <a0 + r, B> = <a0, B> + <r (1 - a0 B)^{-1}, B>.
    // With a radical a0 the correction only raises term weights in the
    // remainder, so the peeling terminates.
    std::size_t pick = 0;
    if (!(at[0].first == 0 && at[0].second % p != 0)) {
      for (std::size_t ti = 1; ti < at.size(); ++ti)
        if (A.term_weight(at[ti].first) < A.term_weight(at[pick].first)) pick = ti;
    }
    RingElem a0 = ring_->monomial(ring_->exponents_of(at[pick].first), at[pick].second);
    work.push_back(Task{a0, B, t.mult});
    work.push_back(Task{(A - a0) * (one - a0 * B).inverse(), B, t.mult});
    return;
  }

  if (at[0].second % p == 0) {
    // p-divisible first slot p*w (single term).
    if (bt.size() == 1 && bt[0].first != 0 && bt[0].second % p != 0) {
      work.push_back(Task{B, A, -t.mult});  // flip onto the core shape
      return;
    }
    if (b_const && bt[0].second % p == 0) {
      // <p w, p d> with w radical collapses onto <p w d, p> (DS3), and that
      // class vanishes: it has no image under any evaluation into Z/p^2 or
      // under the mod-p coordinate projection. Both steps use p^2 = 0.
      if (!p2r_zero_)
        throw unsupported_error(
            "unsupported: this symbol shape needs p^2 = 0 in the quotient");
      return;
    }
    // DS3: <p w, B> = <w, p B> - <w B, p>.
    RingElem w = A.divide_by_p();
    work.push_back(Task{w, B * ring_->scalar(p), t.mult});
    work.push_back(Task{w * B, ring_->scalar(p), -t.mult});
    return;
  }

  if (a_const && bt.size() == 1) {
    // Constant unit first slot against a single radical term.
    if (bt[0].second % p != 0) {
      work.push_back(Task{B, A, -t.mult});  // flip onto the core shape
      return;
    }
    // DS3: <c, p w> = <c p, w> + <c w, p>.
    RingElem w = B.divide_by_p();
    work.push_back(Task{A * ring_->scalar(p), w, t.mult});
    work.push_back(Task{A * w, ring_->scalar(p), t.mult});
    return;
  }

  if (b_const && bt[0].second % p != 0) {
    const Int c = bt[0].second;
    if (c == 1) return;  // <a,1> = 0 (DS3 with b = c = 1)
    const Int om = teichmuller(c, p, ring_->k(), ring_->pk());
    if (om != 1) {
      // c = om * eta; <A, om*eta> = <A om, eta> + <A eta, om> and the second
      // term dies: {u, om} is torsion of order prime to p.
      Int eta = c * mod_inverse(om, ring_->pk()) % ring_->pk();
      if (eta == 1) return;
      work.push_back(Task{A * ring_->scalar(om), ring_->scalar(eta), t.mult});
      return;
    }
    // c = 1 + pz: <A, 1+pz> = <A, pz> + <A, (1 - A pz)^{-1}>.
    RingElem pz = ring_->scalar(c - 1);
    work.push_back(Task{A, pz, t.mult});
    work.push_back(Task{A, (one - A * pz).inverse(), t.mult});
    return;
  }

  if (bt.size() > 1) {
    // Peel one term off the second slot: <A, t+r> = <A,t> + <A, r(1-At)^{-1}>.
    // Order: weight, then degree, then exponent vector; a constant term is
    // skipped while 1 - A*t would fail to be a unit (a radical term always
    // qualifies, so a choice exists).
    std::size_t best = bt.size();
    auto key = [&](std::size_t ti) {
      return std::make_tuple(B.term_weight(bt[ti].first),
                             ring_->degree_of(bt[ti].first),
                             ring_->exponents_of(bt[ti].first));
    };
    for (std::size_t ti = 0; ti < bt.size(); ++ti) {
      if (bt[ti].first == 0 && (1 - A.augmentation() * bt[ti].second) % p == 0) continue;
      if (best == bt.size() || key(ti) < key(best)) best = ti;
    }
    if (best == bt.size()) throw std::logic_error("peel: no admissible term");
    RingElem tm = ring_->monomial(ring_->exponents_of(bt[best].first), bt[best].second);
    work.push_back(Task{A, tm, t.mult});
    work.push_back(Task{A, (B - tm) * (one - A * tm).inverse(), t.mult});
    return;
  }

  // B is a single term c * x^lambda.
  const std::size_t bidx = bt[0].first;
  const Int bc = bt[0].second;

  if (bc % p == 0) {
    // Exponent-p identity: p<A, b> = <A, f_p(A, b)> = 0 with
    // f_1 = b, f_{j+1} = b + f_j - A b f_j; peel pb out of f_p.
    RingElem b = B.divide_by_p();
    RingElem f = ring_->zero();
    for (int j = 0; j < p; ++j) f = b + f - A * b * f;
    RingElem r = f - B;
    if (!r.is_zero())
      work.push_back(Task{A, r * (one - A * B).inverse(), -t.mult});
    return;
  }

  // Both slots are single radical terms with unit coefficients from here on:
  // A = c_a x^a, B = c_b x^lambda.
  const std::size_t aidx = at[0].first;
  const Int ac = at[0].second;
  if (bc != 1) {
    // Coefficient decrement on the second slot (DS2 split at one copy of the
    // monomial); repeats until the coefficient reaches 1.
    RingElem m = ring_->monomial(ring_->exponents_of(bidx));
    work.push_back(Task{A, m, t.mult});
    work.push_back(Task{A, (B - m) * (one - A * m).inverse(), t.mult});
    return;
  }
  if (ac != 1) {
    work.push_back(Task{B, A, -t.mult});  // flip; the decrement strips c_a
    return;
  }

  // Pure pair <x^alpha, x^lambda>.
  const int da = ring_->degree_of(aidx), db = ring_->degree_of(bidx);
  if (da == 1) {
    std::vector<int> alpha = ring_->exponents_of(aidx);
    int i = 1;
    while (alpha[i - 1] == 0) ++i;
    t_route(i, ring_->exponents_of(bidx), t.mult, acc);
    return;
  }
  if (db == 1) {
    work.push_back(Task{B, A, -t.mult});
    return;
  }
  // Split the second slot at its least variable:
  // <x^a, x_j m> = <x^a x_j, m> + <x^a m, x_j>.
  std::vector<int> lam = ring_->exponents_of(bidx);
  int j = 1;
  while (lam[j - 1] == 0) ++j;
  std::vector<int> rest = lam;
  rest[j - 1] -= 1;
  RingElem mrest = ring_->monomial(rest);
  work.push_back(Task{A * ring_->generator(j), mrest, t.mult});
  work.push_back(Task{A * mrest, ring_->generator(j), t.mult});
}

void SymbolEngine::t_route(int i, const std::vector<int>& lambda, int mult,
                           std::map<GeneratorId, int>& acc) const {
  const int p = spec_.p, n = spec_.n;
  bool pure_i = true;
  for (int j = 1; j <= n; ++j)
    if (j != i && lambda[j - 1] > 0) pure_i = false;
  if (pure_i) {
    // <x_i, x_i^m>: trivial for m <= p-2 (its product relation has the unit
    // coefficient m+1); m = p-1 is the T2 generator, which the mod-p rings
    // quotient away.
    if (lambda[i - 1] <= p - 2) return;
    if (spec_.family == RingFamily::FpG || spec_.family == RingFamily::FpGModGtilde) return;
    acc[GeneratorId::symbol(i, lambda)] += mult;
    return;
  }
  GeneratorId g = GeneratorId::symbol(i, lambda);
  if (in_T1(g, p, n)) {
    // Solve out of the product relation for mu = lambda + e_i: mu_i is
    // invertible mod p and every replacement <x_j, mu-e_j> (j > i in the
    // support) lies outside T1 u T2 u T3, hence in every basis.
    std::vector<int> mu = lambda;
    mu[i - 1] += 1;
    const int inv = static_cast<int>(mod_inverse(mu[i - 1], p));
    for (int j = 1; j <= n; ++j) {
      if (j == i || mu[j - 1] == 0) continue;
      std::vector<int> rep = mu;
      rep[j - 1] -= 1;
      acc[GeneratorId::symbol(j, std::move(rep))] += -inv * mu[j - 1] * mult;
    }
    return;
  }
  acc[g] += mult;
}

SymbolVector SymbolEngine::finish(const std::map<GeneratorId, int>& acc) const {
  SymbolVector out(spec_);
  for (const auto& [g, v] : acc) {
    int r = ((v % spec_.p) + spec_.p) % spec_.p;
    if (r == 0) continue;
    if (!basis_set_.count(g))
      throw std::logic_error("internal error: coordinate outside the basis: " + g.str());
    out.add(g.str(), r);
  }
  return out;
}

SymbolVector reduce_symbol(const RingSpec& spec, const DSSymbol& s) {
  return SymbolEngine(spec).reduce(s);
}

DSSymbol parse_symbol(const std::shared_ptr<const Ring>& ring, const std::string& text) {
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  if (s.size() < 3 || s.front() != '<' || s.back() != '>')
    throw std::invalid_argument("symbol must be of the form <a,b>");
  std::string inner = s.substr(1, s.size() - 2);
  std::size_t comma = inner.find(',');
  if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("symbol must contain exactly one comma");
  auto slot = [&](std::string raw) {
    raw = trim(std::move(raw));
    if (raw == "-p") return ring->scalar(-ring->p());
    return ring->parse(raw);
  };
  return make_symbol(slot(inner.substr(0, comma)), slot(inner.substr(comma + 1)));
}

std::string symbol_str(const DSSymbol& s) {
  return "<" + s.a.str() + "," + s.b.str() + ">";
}

}  // namespace k2gr
