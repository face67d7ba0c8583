#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace k2gr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of arbitrary-precision integers.
using ZMat = std::vector<std::vector<Int>>;

/// Thrown when a request is well-formed but outside the supported theory
/// (as opposed to std::invalid_argument for malformed requests).
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Row Hermite normal form of the span of `rows` (full column rank required).
///
/// Canonical form: square, upper-triangular, positive diagonal, and every
/// entry above a diagonal element reduced to [0, diagonal). Lattice equality
/// is then matrix equality. Throws std::invalid_argument on rank-deficient
/// input.
ZMat hnf(const ZMat& rows);

/// Smith normal form invariant factors d1 | d2 | ... of an integer matrix
/// (zero factors trimmed). For square full-rank input the product of the
/// factors equals |det|.
std::vector<Int> snf_invariants(const ZMat& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input.
Int det(const ZMat& m);

/// Solves x * H = v over the integers for an HNF matrix H (back-substitution
/// against the triangular rows). Returns false if no integral solution.
bool solve_upper_triangular(const ZMat& h, const std::vector<Int>& v,
                            std::vector<Int>* coeffs = nullptr);

/// Product of the diagonal (the lattice covolume for an HNF basis).
Int diagonal_product(const ZMat& h);

}  // namespace k2gr
