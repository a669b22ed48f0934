#include "measalg/ext_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "measalg/errors.hpp"

namespace measalg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

ExtRational::ExtRational(long value) : ExtRational(Rational(value)) {}

ExtRational::ExtRational(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) {
    throw Error(ErrorKind::NegativeWeight, rational_to_string(value_));
  }
}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.infinite_ = true;
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtRational(parse_rational(text));
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("ExtRational::value() on infinity");
  return value_;
}

std::string ExtRational::to_string() const {
  return infinite_ ? std::string("inf") : rational_to_string(value_);
}

ExtRational& ExtRational::operator+=(const ExtRational& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

ExtRational& ExtRational::operator*=(const ExtRational& rhs) {
  if (is_zero() || rhs.is_zero()) {
    infinite_ = false;
    value_ = 0;
  } else if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ *= rhs.value_;
  }
  return *this;
}

bool operator==(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    return static_cast<int>(lhs.infinite_) <=> static_cast<int>(rhs.infinite_);
  }
  return cmp(lhs.value_, rhs.value_) <=> 0;
}

ExtRational divide(const ExtRational& numerator, const ExtRational& denominator) {
  if (denominator.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, numerator.to_string() + " / 0");
  }
  if (denominator.is_infinite()) {
    if (numerator.is_infinite()) throw Error(ErrorKind::IndeterminateRatio, "inf / inf");
    return ExtRational(0);
  }
  if (numerator.is_infinite()) return ExtRational::infinity();
  return ExtRational(Rational(numerator.value() / denominator.value()));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value) {
  return os << value.to_string();
}

}  // namespace measalg
