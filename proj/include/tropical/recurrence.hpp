#pragma once

#include <cstdint>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// X(k+1) = A ⊗ X(k) with A square and X(0) an n x 1 column.
struct RecurrenceProblem {
  Matrix a;
  Matrix x0;
  std::uint64_t horizon = 0;

  /// Throws NotSquare or DimensionMismatch.
  void validate() const {
    if (!a.is_square()) throw NotSquare("evolve", a.shape());
    if (x0.rows() != a.rows() || x0.cols() != 1)
      throw DimensionMismatch("evolve", a.shape(), Shape{a.rows(), 1}, x0.shape());
  }
};

/// X(horizon) computed as A^(horizon) ⊗ X(0).
template <Semiring S = MaxPlus>
Matrix evolve(const RecurrenceProblem& p) {
  p.validate();
  if (p.horizon == 0) return p.x0;
  return mat_mul<S>(mat_pow<S>(p.a, p.horizon), p.x0);
}

/// [X(0), X(1), ..., X(horizon)] by repeated application of A.
template <Semiring S = MaxPlus>
std::vector<Matrix> trajectory(const RecurrenceProblem& p) {
  p.validate();
  std::vector<Matrix> states;
  states.reserve(p.horizon + 1);
  states.push_back(p.x0);
  for (std::uint64_t k = 0; k < p.horizon; ++k) states.push_back(mat_mul<S>(p.a, states.back()));
  return states;
}

}  // namespace tropical
