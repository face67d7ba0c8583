#include "k2gr/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace k2gr {

namespace {

int ipow_int(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> exps_of(std::size_t index, int p, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = static_cast<int>(index % p);
    index /= p;
  }
  return v;
}

std::size_t index_of_exps(const std::vector<int>& v, int p) {
  std::size_t idx = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) idx = idx * p + v[i];
  return idx;
}

int support_min(const std::vector<int>& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] > 0) return static_cast<int>(j) + 1;
  return 0;
}

int support_size(const std::vector<int>& v) {
  int s = 0;
  for (int x : v)
    if (x > 0) ++s;
  return s;
}

std::string monomial_str(const std::vector<int>& lambda) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < lambda.size(); ++v) {
    if (lambda[v] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << (v + 1);
    if (lambda[v] >= 2) os << "^" << lambda[v];
  }
  return os.str();
}

}  // namespace

GeneratorId GeneratorId::scalar_pp() { return GeneratorId{}; }

GeneratorId GeneratorId::symbol(int i, std::vector<int> lambda) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  bool nonzero = false;
  for (int x : lambda) nonzero |= x != 0;
  if (!nonzero) throw std::invalid_argument("generator monomial must be nonzero");
  GeneratorId g;
  g.i = i;
  g.lambda = std::move(lambda);
  return g;
}

std::string GeneratorId::str() const {
  if (is_scalar_pp()) return "<-p,-p>";
  return "<x" + std::to_string(i) + "," + monomial_str(lambda) + ">";
}

std::vector<GeneratorId> enumerate_T(int p, int n) {
  std::vector<GeneratorId> out;
  const std::size_t m = ipow_int(p, n);
  for (int i = 1; i <= n; ++i)
    for (std::size_t l = 1; l < m; ++l) out.push_back(GeneratorId::symbol(i, exps_of(l, p, n)));
  return out;
}

bool in_T1(const GeneratorId& g, int p, int /*n*/) {
  if (g.is_scalar_pp()) return false;
  for (int j = 0; j < g.i - 1; ++j)
    if (g.lambda[j] > 0) return false;  // support must start at index i
  return g.lambda[g.i - 1] <= p - 2;
}

bool in_T2(const GeneratorId& g, int p, int /*n*/) {
  if (g.is_scalar_pp()) return false;
  for (std::size_t j = 0; j < g.lambda.size(); ++j) {
    int want = (static_cast<int>(j) == g.i - 1) ? p - 1 : 0;
    if (g.lambda[j] != want) return false;
  }
  return true;
}

bool in_T3(const GeneratorId& g, int p, int /*n*/) {
  if (g.is_scalar_pp()) return false;
  for (int x : g.lambda)
    if (x != p - 1) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_S(int p, int n) {
  std::vector<std::vector<int>> out;
  const std::size_t m = ipow_int(p, n);
  for (std::size_t l = 1; l < m; ++l) out.push_back(exps_of(l, p, n));
  return out;
}

std::vector<std::vector<int>> enumerate_Si(int p, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  std::vector<std::vector<int>> out;
  for (int t = 1; t <= p - 1; ++t) {
    std::vector<int> v(n, 0);
    v[i - 1] = t;
    out.push_back(v);
  }
  return out;
}

std::vector<GeneratorId> basis(const RingSpec& raw) {
  const RingSpec spec = RingSpec::make(raw.family, raw.p, raw.n, raw.k);
  const int p = spec.p, n = spec.n, k = spec.k;
  if (spec.family == RingFamily::ZGModPkGamma && n == 1 && k == 1)
    throw unsupported_error("unsupported: zg-pkgamma with n = 1 needs k >= 2");

  bool drop_T2 = false, drop_T3 = false;
  switch (spec.family) {
    case RingFamily::FpG: drop_T2 = true; break;
    case RingFamily::ZpkG: break;
    case RingFamily::FpGModGtilde: drop_T2 = drop_T3 = true; break;
    case RingFamily::ZGModPkGamma: drop_T3 = (k == n); break;
  }
  std::vector<GeneratorId> out;
  for (GeneratorId& g : enumerate_T(p, n)) {
    if (in_T1(g, p, n)) continue;
    if (drop_T2 && in_T2(g, p, n)) continue;
    if (drop_T3 && in_T3(g, p, n)) continue;
    out.push_back(std::move(g));
  }
  const bool has_scalar = p == 2 && (spec.family == RingFamily::ZpkG ||
                                     spec.family == RingFamily::ZGModPkGamma);
  if (has_scalar) out.push_back(GeneratorId::scalar_pp());
  return out;
}

std::string basis_citation(const RingSpec& raw) {
  const RingSpec spec = RingSpec::make(raw.family, raw.p, raw.n, raw.k);
  switch (spec.family) {
    case RingFamily::FpG:
      return "Lemma generators";
    case RingFamily::FpGModGtilde:
      return "Lemma result1";
    case RingFamily::ZpkG:
      if (spec.n == 1) return spec.p == 2 ? "Lemma C_p sec" : "Lemma C_p fir";
      return "Theorem nontrivial2";
    case RingFamily::ZGModPkGamma:
      if (spec.n == 1) {
        if (spec.k == 1)
          throw unsupported_error("unsupported: zg-pkgamma with n = 1 needs k >= 2");
        return spec.p == 2 ? "Lemma C_p sec" : "Lemma C_p fir";
      }
      return spec.k == spec.n ? "Theorem main-thm" : "Lemma result2";
  }
  throw std::logic_error("basis_citation: bad family");
}

RelationMatrix relation_matrix(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const std::size_t m = ipow_int(p, n);
  RelationMatrix out;
  out.p = p;
  out.n = n;
  // Columns: <x_i, s> with s ranging over nonzero monomials that are not a
  // pure power of x_i (those generators are trivial and excluded up front).
  std::map<std::pair<int, std::size_t>, std::size_t> col_index;
  for (int i = 1; i <= n; ++i) {
    for (std::size_t l = 1; l < m; ++l) {
      std::vector<int> lv = exps_of(l, p, n);
      if (support_size(lv) == 1 && lv[i - 1] > 0) continue;
      col_index[{i, l}] = out.columns.size();
      out.columns.push_back(GeneratorId::symbol(i, std::move(lv)));
    }
  }
  for (std::size_t mu = 1; mu < m; ++mu) {
    std::vector<int> mv = exps_of(mu, p, n);
    if (support_size(mv) < 2) continue;
    std::vector<int> row(out.columns.size(), 0);
    for (int j = 1; j <= n; ++j) {
      if (mv[j - 1] == 0) continue;
      std::vector<int> s = mv;
      s[j - 1] -= 1;
      row[col_index.at({j, index_of_exps(s, p)})] = mv[j - 1] % p;
    }
    out.row_monomials.push_back(mu);
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

int rank_gf2_packed(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed;
  packed.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> w(words, 0);
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] & 1) w[c / 64] |= std::uint64_t(1) << (c % 64);
    packed.push_back(std::move(w));
  }
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> pivots;  // (col, row)
  int rank = 0;
  for (auto& row : packed) {
    for (const auto& [pc, pr] : pivots)
      if (row[pc / 64] >> (pc % 64) & 1)
        for (std::size_t w = 0; w < words; ++w) row[w] ^= pr[w];
    std::size_t lead = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c / 64] >> (c % 64) & 1) { lead = c; break; }
    if (lead == cols) continue;
    pivots.emplace_back(lead, row);
    ++rank;
  }
  return rank;
}

}  // namespace

int fp_rank_rows(std::vector<std::vector<int>> rows, int p) {
  if (rows.empty()) return 0;
  for (auto& r : rows)
    for (int& v : r) v = ((v % p) + p) % p;
  if (p == 2) return rank_gf2_packed(rows);
  const std::size_t cols = rows[0].size();
  std::vector<std::pair<std::size_t, std::vector<int>>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    for (const auto& [pc, pr] : pivots) {
      int f = row[pc];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) row[c] = ((row[c] - f * pr[c]) % p + p) % p;
    }
    std::size_t lead = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c] != 0) { lead = c; break; }
    if (lead == cols) continue;
    int inv = static_cast<int>(mod_inverse(row[lead], p));
    for (std::size_t c = 0; c < cols; ++c) row[c] = row[c] * inv % p;
    pivots.emplace_back(lead, row);
    ++rank;
  }
  return rank;
}

int fp_rank(const RelationMatrix& m) { return fp_rank_rows(m.rows, m.p); }

RankCheck verify_rank(int p, int n) {
  RelationMatrix m = relation_matrix(p, n);
  RankCheck rc;
  rc.p = p;
  rc.n = n;
  rc.columns = static_cast<int>(m.columns.size());
  rc.rows = static_cast<int>(m.rows.size());
  rc.rank = fp_rank(m);
  rc.quotient_rank = rc.columns - rc.rank;
  rc.expected = (n - 1) * (ipow_int(p, n) - 1);
  rc.pass = rc.rank == rc.rows && rc.quotient_rank == rc.expected;
  return rc;
}

}  // namespace k2gr
