#pragma once

#include <utility>

#include "aimpoly/gcd.hpp"
#include "aimpoly/polynomial.hpp"

namespace aimpoly {

/// Element of the fraction field of Polynomial<C>, kept in canonical form:
/// numerator and denominator coprime, denominator monic, zero stored as 0/1.
/// With that form, equality is structural.
template <class C>
class RationalFunction {
 public:
  using coefficient_type = C;
  using poly_type = Polynomial<C>;

  RationalFunction() : den_(poly_type::one()) {}
  explicit RationalFunction(C constant) : num_(std::move(constant)), den_(poly_type::one()) {}
  explicit RationalFunction(poly_type numerator) : num_(std::move(numerator)), den_(poly_type::one()) {}
  RationalFunction(poly_type numerator, poly_type denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable() { return RationalFunction(poly_type::variable()); }

  const poly_type& numerator() const noexcept { return num_; }
  const poly_type& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant element; meaningless unless is_constant().
  C constant_value() const { return num_.coeff(0); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = add(*this, o); }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = add(*this, -o); }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = mul(*this, o); }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = mul(*this, o.inverse()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, -b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) { return mul(a, b); }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return mul(a, b.inverse());
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  /// d/dz of num/den by the quotient rule, with the common factor
  /// gcd(den, den') removed before the final reduction.
  RationalFunction derivative() const {
    if (is_zero()) return {};
    if (is_polynomial()) return RationalFunction(num_.derivative());
    poly_type dprime = den_.derivative();
    poly_type g = gcd(den_, dprime);
    poly_type den_over_g = exact_quotient(den_, g);
    poly_type top = num_.derivative() * den_over_g - num_ * exact_quotient(dprime, g);
    return RationalFunction(std::move(top), den_ * den_over_g);
  }

  /// Value at a point of the coefficient field; a vanishing denominator is a pole.
  C evaluate(const C& at) const {
    C d = den_.evaluate(at);
    if (d.is_zero()) throw Error(ErrorKind::PoleAtParameterValue, "denominator vanishes at evaluation point");
    return num_.evaluate(at) / d;
  }

 private:
  struct Reduced {};
  RationalFunction(poly_type n, poly_type d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = poly_type::one();
      return;
    }
    if (den_.degree() > 0) {
      poly_type g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    if (!den_.is_monic()) {
      C inv = from_int<C>(1) / den_.leading();
      num_ *= inv;
      den_ *= inv;
    }
  }

  // Henrici-style sum: only the gcd of the denominators is ever re-examined.
  static RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    poly_type g = gcd(a.den_, b.den_);
    if (g.degree() == 0) {
      return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Reduced{});
    }
    poly_type a_rest = exact_quotient(a.den_, g);
    poly_type b_rest = exact_quotient(b.den_, g);
    poly_type top = a.num_ * b_rest + b.num_ * a_rest;
    if (top.is_zero()) return {};
    poly_type g2 = gcd(top, g);
    if (g2.degree() > 0) {
      top = exact_quotient(top, g2);
      return RationalFunction(std::move(top), a_rest * exact_quotient(b.den_, g2), Reduced{});
    }
    return RationalFunction(std::move(top), a_rest * b.den_, Reduced{});
  }

  static RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    poly_type g1 = gcd(a.num_, b.den_);
    poly_type g2 = gcd(b.num_, a.den_);
    poly_type n1 = g1.degree() > 0 ? exact_quotient(a.num_, g1) : a.num_;
    poly_type d2 = g1.degree() > 0 ? exact_quotient(b.den_, g1) : b.den_;
    poly_type n2 = g2.degree() > 0 ? exact_quotient(b.num_, g2) : b.num_;
    poly_type d1 = g2.degree() > 0 ? exact_quotient(a.den_, g2) : a.den_;
    return RationalFunction(n1 * n2, d1 * d2, Reduced{});
  }

  poly_type num_;
  poly_type den_;
};

}  // namespace aimpoly
