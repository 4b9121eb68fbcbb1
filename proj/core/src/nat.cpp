#include "humplab/nat.hpp"

#include <limits>
#include <ostream>

namespace humplab {

Nat::Nat(Rep value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw DomainError("Nat: negative value " + value_.str());
}

Nat Nat::from_string(std::string_view digits) {
  if (digits.empty()) throw DomainError("Nat::from_string: empty input");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("Nat::from_string: not a decimal digit string: " + std::string(digits));
    }
  }
  return Nat(Rep(std::string(digits)));
}

bool Nat::is_even() const noexcept { return !boost::multiprecision::bit_test(value_, 0); }

bool Nat::fits_u64() const noexcept {
  return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw DomainError("Nat::to_u64: value exceeds 64 bits");
  return value_.convert_to<std::uint64_t>();
}

std::string Nat::to_string() const { return value_.str(); }

Nat& Nat::operator+=(const Nat& other) {
  value_ += other.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& other) {
  value_ *= other.value_;
  return *this;
}

Nat& Nat::operator-=(const Nat& other) {
  if (other.value_ > value_) {
    throw DomainError("Nat: subtraction underflow (" + value_.str() + " - " + other.value_.str() + ")");
  }
  value_ -= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.value_; }

Nat exact_div(const Nat& numerator, const Nat& denominator, std::string_view what) {
  if (denominator.is_zero()) throw ConsistencyError(std::string(what) + ": division by zero");
  Nat::Rep q;
  Nat::Rep r;
  boost::multiprecision::divide_qr(numerator.rep(), denominator.rep(), q, r);
  if (!r.is_zero()) {
    throw ConsistencyError(std::string(what) + ": " + numerator.to_string() + " is not divisible by " +
                           denominator.to_string());
  }
  return Nat(std::move(q));
}

Nat exact_half(const Nat& value, std::string_view what) {
  if (!value.is_even()) {
    throw ConsistencyError(std::string(what) + ": expected an even value, got " + value.to_string());
  }
  return Nat(Nat::Rep(value.rep() >> 1));
}

Nat pow2(unsigned exponent) {
  Nat::Rep v = 1;
  v <<= exponent;
  return Nat(std::move(v));
}

}  // namespace humplab
