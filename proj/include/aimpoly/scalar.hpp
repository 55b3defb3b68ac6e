#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "aimpoly/error.hpp"

namespace aimpoly {

/// Exact rational number in lowest terms with a positive denominator.
/// Thin value wrapper over mpq_class that turns division by zero into an
/// exception instead of a GMP abort.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in Scalar");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit Scalar(const mpz_class& integer) : value_(integer) {}

  /// Accepts "p", "-p/q" and finite decimals such as "1.25".
  static Scalar parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      mpz_class num;
      if (num.set_str(digits, 10) != 0)
        throw Error(ErrorKind::InvalidInput, "malformed decimal '" + s + "'");
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return Scalar(mpq_class(num, den));
    }
    auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0)
      throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
      throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    return Scalar(mpq_class(num, den));
  }

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  std::string to_string() const { return value_.get_str(10); }

  Scalar abs() const { return Scalar(mpq_class(::abs(value_))); }
  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Scalar(mpq_class(1 / value_));
  }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + to_string() + " by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Integer power with a non-negative exponent.
inline Scalar pow(const Scalar& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Scalar(mpq_class(num, den));
}

}  // namespace aimpoly
