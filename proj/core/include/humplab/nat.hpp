#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "humplab/errors.hpp"

namespace humplab {

/// Arbitrary-precision nonnegative integer. Every count in the library is a
/// Nat; subtraction that would go negative and inexact division throw instead
/// of wrapping or truncating.
class Nat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Nat() = default;

  template <std::integral I>
  Nat(I value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (value < 0) throw DomainError("Nat: negative value " + std::to_string(value));
    }
  }

  explicit Nat(Rep value);

  /// Parses a decimal string of digits only.
  static Nat from_string(std::string_view digits);

  const Rep& rep() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_even() const noexcept;

  /// Value as uint64 if it fits.
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;

  std::string to_string() const;

  Nat& operator+=(const Nat& other);
  Nat& operator*=(const Nat& other);
  /// Throws DomainError if other > *this.
  Nat& operator-=(const Nat& other);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n);

 private:
  Rep value_{};
};

/// numerator / denominator, throwing ConsistencyError unless the division is
/// exact. `what` names the quantity in the error message.
Nat exact_div(const Nat& numerator, const Nat& denominator, std::string_view what = "exact_div");

/// Halves an even value; ConsistencyError if odd.
Nat exact_half(const Nat& value, std::string_view what = "exact_half");

Nat pow2(unsigned exponent);

}  // namespace humplab
