#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace measalg {

using Rational = mpq_class;

/// Canonical decimal form of a rational: "p" when the denominator is 1,
/// "p/q" otherwise. Always lowest terms.
std::string rational_to_string(const Rational& value);

/// Parses "p" or "p/q" (optionally signed), normalizing to lowest terms.
Rational parse_rational(std::string_view text);

/// Non-negative rational extended by +infinity, with the measure-theory
/// conventions 0 * inf = 0 and x + inf = inf.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(long value);  // NOLINT(google-explicit-constructor)
  explicit ExtRational(Rational value);

  static ExtRational infinity();
  static ExtRational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }
  bool is_positive() const noexcept { return infinite_ || sgn(value_) > 0; }

  /// Finite value; std::logic_error on infinity.
  const Rational& value() const;

  std::string to_string() const;

  ExtRational& operator+=(const ExtRational& rhs);
  ExtRational& operator*=(const ExtRational& rhs);

  friend ExtRational operator+(ExtRational lhs, const ExtRational& rhs) {
    return lhs += rhs;
  }
  friend ExtRational operator*(ExtRational lhs, const ExtRational& rhs) {
    return lhs *= rhs;
  }

  friend bool operator==(const ExtRational& lhs, const ExtRational& rhs);
  friend std::strong_ordering operator<=>(const ExtRational& lhs,
                                          const ExtRational& rhs);

 private:
  bool infinite_ = false;
  Rational value_{0};
};

/// Exact ratio. Zero denominators raise DivisionByZero and inf/inf raises
/// IndeterminateRatio; x/inf = 0 for finite x and inf/positive = inf.
ExtRational divide(const ExtRational& numerator, const ExtRational& denominator);

std::ostream& operator<<(std::ostream& os, const ExtRational& value);

}  // namespace measalg
