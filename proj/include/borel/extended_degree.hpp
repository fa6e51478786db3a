#pragma once

#include <string>

#include "borel/errors.hpp"

namespace borel {

// Integer degree extended with -infinity as bottom element: the max over an
// empty set is -inf, and -inf + k = -inf for every integer k. -inf is never
// conflated with 0.
class ExtendedDegree {
 public:
  constexpr ExtendedDegree() noexcept : finite_(false), value_(0) {}
  constexpr ExtendedDegree(long long v) noexcept : finite_(true), value_(v) {}

  static constexpr ExtendedDegree minus_infinity() noexcept { return {}; }

  constexpr bool is_finite() const noexcept { return finite_; }

  long long value() const {
    if (!finite_) fail("internal", "value() called on -inf");
    return value_;
  }

  ExtendedDegree operator+(long long k) const noexcept {
    return finite_ ? ExtendedDegree(value_ + k) : minus_infinity();
  }
  ExtendedDegree operator-(long long k) const noexcept { return *this + (-k); }

  friend constexpr bool operator==(ExtendedDegree a, ExtendedDegree b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtendedDegree a, ExtendedDegree b) noexcept {
    return !(a == b);
  }
  friend constexpr bool operator<(ExtendedDegree a, ExtendedDegree b) noexcept {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtendedDegree a, ExtendedDegree b) noexcept { return b < a; }
  friend constexpr bool operator<=(ExtendedDegree a, ExtendedDegree b) noexcept { return !(b < a); }
  friend constexpr bool operator>=(ExtendedDegree a, ExtendedDegree b) noexcept { return !(a < b); }

  static constexpr ExtendedDegree max(ExtendedDegree a, ExtendedDegree b) noexcept {
    return a < b ? b : a;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_;
  long long value_;
};

}  // namespace borel
