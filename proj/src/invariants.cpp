#include "k2gr/invariants.hpp"

#include <stdexcept>

#include "k2gr/presentation.hpp"

namespace k2gr {

Int binomial_int(int a, int b) {
  if (b < 0 || b > a) return 0;
  Int r = 1;
  for (int j = 0; j < b; ++j) {
    r *= a - j;
    r /= j + 1;
  }
  return r;
}

namespace {

Int ipow_int(int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

RankReport k2_rank(const RingSpec& raw) {
  const RingSpec spec = RingSpec::make(raw.family, raw.p, raw.n, raw.k);
  const std::string citation = basis_citation(spec);  // validates coverage
  const Int p = spec.p;
  const Int pn = ipow_int(spec.p, spec.n);
  const int tau = spec.p == 2 ? 1 : 0;
  Int value = 0;
  switch (spec.family) {
    case RingFamily::FpG:
      value = (spec.n - 1) * (pn - 1);
      break;
    case RingFamily::ZpkG:
      value = spec.n == 1 ? Int(1 + tau) : (spec.n - 1) * pn + 1 + tau;
      break;
    case RingFamily::FpGModGtilde:
      value = (spec.n - 1) * (pn - 2) - 1;
      break;
    case RingFamily::ZGModPkGamma:
      if (spec.n == 1) {
        value = 1 + tau;
      } else if (spec.k == spec.n) {
        value = (spec.n - 1) * (pn - 1) + tau;
      } else {
        value = (spec.n - 1) * pn + 1 + tau;
      }
      break;
  }
  (void)p;
  return RankReport{"k2_rank", spec.p, spec.n, spec.k, value, citation};
}

K2cReport k2c_exponent(int p, int n) {
  const RingSpec spec = RingSpec::make(RingFamily::FpG, p, n, 1);  // validates p, n
  K2cReport rep;
  rep.p = spec.p;
  rep.n = spec.n;

  // Walk every g in (Z/p)^n and find |<g>| by literally cycling g until the
  // identity comes back, then add log_p of the index [G : <g>].
  const std::size_t total = static_cast<std::size_t>(ipow_int(p, n));
  std::vector<int> g(static_cast<std::size_t>(n)), h(static_cast<std::size_t>(n));
  Int exponent = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = 0; i < n; ++i) {
      g[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
    h = g;
    Int order = 1;
    while (std::any_of(h.begin(), h.end(), [](int x) { return x != 0; })) {
      for (int i = 0; i < n; ++i)
        h[static_cast<std::size_t>(i)] = (h[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(i)]) % p;
      ++order;
    }
    Int index = Int(total) / order;
    while (index > 1) {
      exponent += 1;
      index /= p;
    }
  }

  rep.exponent_enumerated = exponent;
  rep.exponent_closed_form = (n - 1) * ipow_int(p, n) + 1;
  rep.tau = p == 2 ? 1 : 0;
  rep.total_rank = rep.exponent_enumerated + rep.tau;
  rep.citation = "K2c order identity";
  return rep;
}

Cluster character_cluster(int p, int n) {
  RingSpec::make(RingFamily::FpG, p, n, 1);
  const std::size_t total = static_cast<std::size_t>(ipow_int(p, n));
  std::vector<char> seen(total, 0);
  Cluster cluster;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) continue;
    std::vector<int> c(static_cast<std::size_t>(n));
    std::size_t rest = idx;
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
    cluster.representatives.push_back(Character{p, n, c});
    // Mark the whole scalar orbit of this character.
    for (int t = 1; t < p; ++t) {
      std::size_t mult = 0, stride = 1;
      for (int i = 0; i < n; ++i) {
        mult += static_cast<std::size_t>((c[static_cast<std::size_t>(i)] * t) % p) * stride;
        stride *= static_cast<std::size_t>(p);
      }
      seen[mult] = 1;
    }
  }
  return cluster;
}

Int s0_count(int p, int n) {
  RingSpec::make(RingFamily::FpG, p, n, 1);
  if (p == 2) return 0;
  return (ipow_int(p, n) - 1) / (p - 1);
}

Sk1Limit sk1_inverse_limit(int p, int n) {
  RingSpec::make(RingFamily::FpG, p, n, 1);
  Sk1Limit lim;
  lim.p = p;
  lim.n = n;
  lim.copies = s0_count(p, n);
  if (lim.copies == 0) {
    lim.shape = "trivial";
  } else {
    lim.shape = "C_" + std::to_string(p) + "^" + lim.copies.str();
  }
  return lim;
}

RankReport sk1_rank(int p, int n, int k) {
  RingSpec::make(RingFamily::FpG, p, n, 1);
  if (p == 2) throw unsupported_error("unsupported: theorem requires odd p");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Int value = (ipow_int(p, n) - 1) / (p - 1);
  if (k == 1) value -= n;
  return RankReport{"sk1_rank", p, n, k, value, "Theorem sk1"};
}

BoundsReport lower_bounds(int p, int n) {
  RingSpec::make(RingFamily::FpG, p, n, 1);
  if (p == 2) throw unsupported_error("unsupported: theorem requires odd p");
  BoundsReport rep;
  rep.p = p;
  rep.n = n;
  const Int pn = ipow_int(p, n);
  const Int choose = binomial_int(p + n - 1, p);
  rep.k2_zg = 1 + (n - 1) * pn - choose;
  rep.wh2 = rep.k2_zg - Int(n) * (n - 1) / 2;
  rep.sk1_zg_rank = (pn - 1) / (p - 1) - choose;
  for (Int* v : {&rep.k2_zg, &rep.wh2, &rep.sk1_zg_rank}) {
    if (*v < 0) {
      *v = 0;
      rep.clamped = true;
    }
  }
  rep.citation = "Corollary lowerbounds";
  rep.sk1_citation = "Remark after Theorem sk1";
  return rep;
}

}  // namespace k2gr
