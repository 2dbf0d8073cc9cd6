#pragma once

// Dense kernels behind the matrix operations. Each kernel has a serial
// reference version, kept for testing and benchmarking, and an OpenMP
// version that splits the output by rows. Callers validate shapes; kernels
// only index.
//
// With integer max/min and exact + the per-entry reduction is
// order-independent, so both versions produce identical matrices.

#include <cstddef>
#include <exception>
#include <mutex>

#include "tropical/dense_matrix.hpp"
#include "tropical/semiring.hpp"

namespace tropical::kernels {

/// Below this many scalar ⊗ evaluations the parallel kernels run serially.
inline constexpr std::size_t kDefaultMinParallelWork = std::size_t{1} << 15;

namespace detail {

// Exceptions must not leave an OpenMP region; the first one is parked here
// and rethrown after the join.
class ExceptionSink {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!first_) first_ = std::current_exception();
    }
  }

  void rethrow_if_any() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

}  // namespace detail

/// out = a ⊗ b, reducing each entry left to right over the inner index.
template <Semiring S>
void gemm_reference(const Matrix& a, const Matrix& b, Matrix& out) {
  const std::size_t inner = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      TropicalValue acc = S::zero();
      for (std::size_t j = 0; j < inner; ++j) acc = S::plus(acc, S::times(a(i, j), b(j, k)));
      out(i, k) = acc;
    }
  }
}

/// Row-parallel out = a ⊗ b. Rows of `a` are streamed against rows of `b`
/// (i-j-k order) and ε entries of `a` are skipped since they contribute the
/// ⊕ identity.
template <Semiring S>
void gemm(const Matrix& a, const Matrix& b, Matrix& out,
          std::size_t min_parallel_work = kDefaultMinParallelWork) {
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  const bool parallel = a.rows() * inner * cols >= min_parallel_work;
  detail::ExceptionSink sink;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    sink.run([&] {
      auto out_row = out.row(static_cast<std::size_t>(i));
      for (auto& v : out_row) v = S::zero();
      const auto a_row = a.row(static_cast<std::size_t>(i));
      for (std::size_t j = 0; j < inner; ++j) {
        const TropicalValue aij = a_row[j];
        if (aij.is_epsilon()) continue;
        const auto b_row = b.row(j);
        for (std::size_t k = 0; k < cols; ++k) out_row[k] = S::plus(out_row[k], S::times(aij, b_row[k]));
      }
    });
  }
  sink.rethrow_if_any();
}

/// out(i,j) = op(a(i,j), b(i,j)).
template <class Op>
void zip_reference(const Matrix& a, const Matrix& b, Matrix& out, Op op) {
  const auto x = a.entries();
  const auto y = b.entries();
  auto z = out.entries();
  for (std::size_t n = 0; n < z.size(); ++n) z[n] = op(x[n], y[n]);
}

template <class Op>
void zip(const Matrix& a, const Matrix& b, Matrix& out, Op op,
         std::size_t min_parallel_work = kDefaultMinParallelWork) {
  const auto x = a.entries();
  const auto y = b.entries();
  auto z = out.entries();
  const auto size = static_cast<std::ptrdiff_t>(z.size());
  const bool parallel = z.size() >= min_parallel_work;
  detail::ExceptionSink sink;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t n = 0; n < size; ++n) {
    sink.run([&] { z[n] = op(x[n], y[n]); });
  }
  sink.rethrow_if_any();
}

/// out(i,j) = op(a(i,j)).
template <class Op>
void map_reference(const Matrix& a, Matrix& out, Op op) {
  const auto x = a.entries();
  auto z = out.entries();
  for (std::size_t n = 0; n < z.size(); ++n) z[n] = op(x[n]);
}

template <class Op>
void map(const Matrix& a, Matrix& out, Op op, std::size_t min_parallel_work = kDefaultMinParallelWork) {
  const auto x = a.entries();
  auto z = out.entries();
  const auto size = static_cast<std::ptrdiff_t>(z.size());
  const bool parallel = z.size() >= min_parallel_work;
  detail::ExceptionSink sink;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t n = 0; n < size; ++n) {
    sink.run([&] { z[n] = op(x[n]); });
  }
  sink.rethrow_if_any();
}

}  // namespace tropical::kernels
