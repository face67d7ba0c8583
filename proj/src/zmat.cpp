#include "k2gr/zmat.hpp"

#include <algorithm>
#include <utility>

namespace k2gr {

namespace {

// Euclidean row reduction in column `col` below and including row `top`:
// leaves a single nonzero entry at (top, col).
void clear_column(ZMat& m, std::size_t top, std::size_t col) {
  const std::size_t rows = m.size();
  for (std::size_t r = top + 1; r < rows; ++r) {
    while (m[r][col] != 0) {
      if (m[top][col] == 0) {
        std::swap(m[top], m[r]);
        break;
      }
      Int q = m[r][col] / m[top][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[top][c];
      if (m[r][col] != 0) std::swap(m[top], m[r]);
    }
  }
}

}  // namespace

ZMat hnf(const ZMat& rows) {
  if (rows.empty()) throw std::invalid_argument("hnf: empty input");
  const std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("hnf: ragged rows");

  ZMat m = rows;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < m.size(); ++col) {
    clear_column(m, top, col);
    if (m[top][col] != 0) ++top;
  }
  // Rank check: need n pivot rows for a full-rank lattice.
  if (top < n) throw std::invalid_argument("hnf: rank-deficient input");
  m.resize(n);

  // Canonicalize: positive diagonal, entries above the diagonal in [0, diag).
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] < 0)
      for (auto& e : m[i]) e = -e;
    for (std::size_t r = 0; r < i; ++r) {
      Int q = m[r][i] / m[i][i];
      if (m[r][i] - q * m[i][i] < 0) q -= 1;  // floor division
      if (q != 0)
        for (std::size_t c = 0; c < n; ++c) m[r][c] -= q * m[i][c];
    }
  }
  return m;
}

std::vector<Int> snf_invariants(const ZMat& input) {
  if (input.empty()) return {};
  ZMat m = input;
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::size_t steps = std::min(rows, cols);
  std::vector<Int> out;

  for (std::size_t t = 0; t < steps; ++t) {
    // Find a nonzero pivot in the remaining block.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t r = t; r < rows && !found; ++r)
      for (std::size_t c = t; c < cols && !found; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    // Alternate row/column elimination until the pivot divides its row+column.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        while (m[r][t] != 0) {
          Int q = m[r][t] / m[t][t];
          for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
          if (m[r][t] != 0) std::swap(m[t], m[r]);
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        while (m[t][c] != 0) {
          Int q = m[t][c] / m[t][t];
          for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
          if (m[t][c] != 0) {
            for (std::size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
            dirty = true;  // column swap may have dirtied the cleared rows
          }
        }
      }
    }
    // Ensure divisibility of the rest of the block by the pivot.
    bool fixed = true;
    do {
      fixed = true;
      for (std::size_t r = t + 1; r < rows && fixed; ++r)
        for (std::size_t c = t + 1; c < cols && fixed; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            fixed = false;
          }
      if (!fixed) {
        // Re-clear after the row addition.
        for (std::size_t c = t + 1; c < cols; ++c) {
          while (m[t][c] != 0) {
            Int q = m[t][c] / m[t][t];
            for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
            if (m[t][c] != 0)
              for (std::size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          }
        }
        for (std::size_t r = t + 1; r < rows; ++r) {
          while (m[r][t] != 0) {
            Int q = m[r][t] / m[t][t];
            for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
            if (m[r][t] != 0) std::swap(m[t], m[r]);
          }
        }
      }
    } while (!fixed);
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (m[t][t] == 0) break;
    out.push_back(m[t][t] < 0 ? Int(-m[t][t]) : m[t][t]);
  }
  return out;
}

Int det(const ZMat& input) {
  if (input.empty()) return 1;
  const std::size_t n = input.size();
  for (const auto& r : input)
    if (r.size() != n) throw std::invalid_argument("det: non-square matrix");
  ZMat m = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

bool solve_upper_triangular(const ZMat& h, const std::vector<Int>& v,
                            std::vector<Int>* coeffs) {
  const std::size_t n = h.size();
  if (v.size() != n) throw std::invalid_argument("solve: size mismatch");
  std::vector<Int> rem = v, x(n, 0);
  // h is upper-triangular, so only row i (among rows >= i) touches
  // coordinate i; peel coordinates from the front.
  for (std::size_t ii = 0; ii < n; ++ii) {
    if (rem[ii] == 0) continue;
    if (rem[ii] % h[ii][ii] != 0) return false;
    Int q = rem[ii] / h[ii][ii];
    x[ii] = q;
    for (std::size_t c = ii; c < n; ++c) rem[c] -= q * h[ii][c];
  }
  for (const auto& e : rem)
    if (e != 0) return false;
  if (coeffs) *coeffs = std::move(x);
  return true;
}

Int diagonal_product(const ZMat& h) {
  Int d = 1;
  for (std::size_t i = 0; i < h.size(); ++i) d *= h[i][i];
  return d;
}

}  // namespace k2gr
