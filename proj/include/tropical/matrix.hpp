#pragma once

// Matrix semiring operations: entrywise ⊕, product ⊗, scalar action, the
// special matrices and integer powers. All take the semiring as a template
// parameter defaulting to max-plus.

#include <cstddef>
#include <cstdint>

#include "tropical/dense_matrix.hpp"
#include "tropical/errors.hpp"
#include "tropical/kernels.hpp"
#include "tropical/semiring.hpp"

namespace tropical {

/// All-zero (all-ε) m x n matrix, the ⊕ identity.
template <Semiring S = MaxPlus>
Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, S::zero());
}

/// n x n matrix with the semiring one on the diagonal and zero elsewhere.
template <Semiring S = MaxPlus>
Matrix identity(std::size_t n) {
  Matrix out(n, n, S::zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = S::one();
  return out;
}

template <Semiring S = MaxPlus>
Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.shape() != b.shape()) throw DimensionMismatch("add", a.shape(), a.shape(), b.shape());
  Matrix out(a.rows(), a.cols());
  kernels::zip(a, b, out, [](TropicalValue x, TropicalValue y) { return S::plus(x, y); });
  return out;
}

/// (A ⊗ B)(i,k) = ⊕_j A(i,j) ⊗ B(j,k). Requires A.cols == B.rows.
template <Semiring S = MaxPlus>
Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mul", a.shape(), Shape{a.cols(), b.cols()}, b.shape());
  Matrix out(a.rows(), b.cols());
  kernels::gemm<S>(a, b, out);
  return out;
}

template <Semiring S = MaxPlus>
Matrix scalar_mul(TropicalValue alpha, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  kernels::map(a, out, [alpha](TropicalValue x) { return S::times(alpha, x); });
  return out;
}

/// k-fold product of a square matrix by repeated squaring; k = 0 gives the
/// identity.
template <Semiring S = MaxPlus>
Matrix mat_pow(const Matrix& a, std::uint64_t k) {
  if (!a.is_square()) throw NotSquare("pow", a.shape());
  Matrix result = identity<S>(a.rows());
  if (k == 0) return result;
  Matrix base = a;
  bool seeded = false;
  while (true) {
    if (k & 1U) {
      result = seeded ? mat_mul<S>(result, base) : base;
      seeded = true;
    }
    k >>= 1U;
    if (k == 0) break;
    base = mat_mul<S>(base, base);
  }
  return result;
}

}  // namespace tropical
