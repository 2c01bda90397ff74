#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace gtpmm {

// Amount of money in integer minor units (cents).
class Money {
 public:
  constexpr Money() = default;
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}

  static constexpr Money cents(std::int64_t c) { return Money(c); }
  static constexpr Money infinity() {
    return Money(std::numeric_limits<std::int64_t>::max());
  }

  constexpr std::int64_t value() const { return cents_; }
  constexpr bool is_infinite() const { return *this == infinity(); }

  constexpr Money& operator+=(Money o) {
    cents_ += o.cents_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return a += b; }
  friend constexpr Money operator*(std::int64_t k, Money m) {
    return Money(k * m.cents_);
  }
  friend constexpr auto operator<=>(Money, Money) = default;

  // Formats as major units with two decimals, e.g. "13.05".
  std::string to_major_string() const;

 private:
  std::int64_t cents_ = 0;
};

// Saturating addition for DP relaxations; infinity absorbs.
constexpr Money saturating_add(Money a, Money b) {
  if (a.is_infinite() || b.is_infinite()) return Money::infinity();
  return a + b;
}

std::ostream& operator<<(std::ostream& os, Money m);

// Fixed-point fare rate with four decimal places of the major unit, so one
// raw unit is 1/100 of a cent.
class Rate {
 public:
  static constexpr std::int64_t kUnitsPerMajor = 10000;
  static constexpr std::int64_t kUnitsPerCent = 100;

  constexpr Rate() = default;
  static constexpr Rate from_raw(std::int64_t raw) { return Rate(raw); }
  static constexpr Rate from_cents(std::int64_t c) {
    return Rate(c * kUnitsPerCent);
  }

  constexpr std::int64_t raw() const { return raw_; }
  friend constexpr auto operator<=>(Rate, Rate) = default;

 private:
  constexpr explicit Rate(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

// Parses a decimal amount in major units ("2.50", "0.0125") into fixed point
// with `decimals` places, rounding half-up on extra digits. Throws
// ConfigError on malformed or negative input.
std::int64_t parse_fixed_point(const std::string& text, int decimals);

}  // namespace gtpmm
