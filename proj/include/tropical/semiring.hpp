#pragma once

/**
 * Idempotent semirings over extended integers.
 *
 * A TropicalValue is either the semiring zero ε or an exact int64. The
 * max-plus instance reads ε as -inf (plus = max, times = +), the min-plus
 * instance reads it as +inf (plus = min, times = +). In both, ε is the
 * identity of plus and absorbing for times, and the integer 0 is the
 * identity of times.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>

#include "tropical/errors.hpp"

namespace tropical {

class TropicalValue {
 public:
  /// Default-constructed values are ε.
  constexpr TropicalValue() noexcept = default;

  // Implicit so matrix literals read like the printed tables: {3, E, 8, -2}.
  constexpr TropicalValue(std::int64_t v) noexcept : value_(v) {}  // NOLINT

  static constexpr TropicalValue epsilon() noexcept { return {}; }
  static constexpr TropicalValue finite(std::int64_t v) noexcept { return TropicalValue(v); }

  constexpr bool is_epsilon() const noexcept { return !value_.has_value(); }
  constexpr bool is_finite() const noexcept { return value_.has_value(); }

  /// Finite part. Precondition: is_finite().
  constexpr std::int64_t value() const noexcept { return *value_; }

  constexpr bool operator==(const TropicalValue&) const noexcept = default;

  // ε orders below every finite value.
  constexpr std::strong_ordering operator<=>(const TropicalValue& o) const noexcept {
    if (is_epsilon() || o.is_epsilon()) return o.is_epsilon() <=> is_epsilon();
    return *value_ <=> *o.value_;
  }

 private:
  std::optional<std::int64_t> value_;
};

inline constexpr TropicalValue E = TropicalValue::epsilon();

namespace detail {

// Exact sum of finite parts, ε absorbing.
constexpr TropicalValue add_finite(TropicalValue a, TropicalValue b) {
  if (a.is_epsilon() || b.is_epsilon()) return E;
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) throw IntegerOverflow(a.value(), b.value());
  return sum;
}

}  // namespace detail

/// max-plus: ⊕ = max, ⊗ = +, zero = ε (-inf), one = 0.
struct MaxPlus {
  static constexpr TropicalValue zero() noexcept { return E; }
  static constexpr TropicalValue one() noexcept { return 0; }

  static constexpr TropicalValue plus(TropicalValue a, TropicalValue b) noexcept {
    return a < b ? b : a;
  }
  static constexpr TropicalValue times(TropicalValue a, TropicalValue b) {
    return detail::add_finite(a, b);
  }
};

/// min-plus: ⊕ = min, ⊗ = +, zero = ε (+inf), one = 0.
struct MinPlus {
  static constexpr TropicalValue zero() noexcept { return E; }
  static constexpr TropicalValue one() noexcept { return 0; }

  static constexpr TropicalValue plus(TropicalValue a, TropicalValue b) noexcept {
    if (a.is_epsilon()) return b;
    if (b.is_epsilon()) return a;
    return a.value() <= b.value() ? a : b;
  }
  static constexpr TropicalValue times(TropicalValue a, TropicalValue b) {
    return detail::add_finite(a, b);
  }
};

template <class S>
concept Semiring = requires(TropicalValue a, TropicalValue b) {
  { S::zero() } -> std::same_as<TropicalValue>;
  { S::one() } -> std::same_as<TropicalValue>;
  { S::plus(a, b) } -> std::same_as<TropicalValue>;
  { S::times(a, b) } -> std::same_as<TropicalValue>;
};

static_assert(Semiring<MaxPlus>);
static_assert(Semiring<MinPlus>);

constexpr TropicalValue oplus(TropicalValue a, TropicalValue b) noexcept { return MaxPlus::plus(a, b); }

/// Throws IntegerOverflow when the finite sum leaves int64.
constexpr TropicalValue otimes(TropicalValue a, TropicalValue b) { return MaxPlus::times(a, b); }

constexpr TropicalValue min_plus_oplus(TropicalValue a, TropicalValue b) noexcept {
  return MinPlus::plus(a, b);
}
constexpr TropicalValue min_plus_otimes(TropicalValue a, TropicalValue b) {
  return MinPlus::times(a, b);
}

}  // namespace tropical
