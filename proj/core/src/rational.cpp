#include "cimprove/rational.hpp"

#include <cctype>
#include <ostream>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(static_cast<long>(numerator)),
               BigInt(static_cast<long>(denominator))) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const BigInt d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(BigInt(std::string(num), 10), d);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) throw ArgumentError("division by zero rational");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace cimprove
