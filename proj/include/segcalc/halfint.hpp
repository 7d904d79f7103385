#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace segcalc {

// Exact element of (1/2)Z, stored as its doubled value.  All exponent
// arithmetic in the calculator happens here; nothing is ever rounded.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long n) : twice_(2 * n) {}  // NOLINT: integers embed

  static constexpr HalfInt from_twice(long long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }

  // Numerator/denominator of the reduced fraction: 3/2 -> (3,2), 2 -> (2,1).
  constexpr long long num() const { return is_integral() ? twice_ / 2 : twice_; }
  constexpr long long den() const { return is_integral() ? 1 : 2; }

  // Exact division by two; only defined when the result stays in (1/2)Z.
  constexpr HalfInt halved() const {
    if (twice_ % 2 != 0) throw std::domain_error("half of " + std::to_string(twice_) + "/2 leaves (1/2)Z");
    return from_twice(twice_ / 2);
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integral()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  long long twice_ = 0;
};

// k/2 as a HalfInt.
constexpr HalfInt half(long long k) { return HalfInt::from_twice(k); }

}  // namespace segcalc
