#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "aimpoly/error.hpp"
#include "aimpoly/scalar.hpp"

namespace aimpoly {

template <class C>
class Polynomial;
template <class C>
class RationalFunction;

/// Builds the constant `value` in any level of the coefficient tower.
template <class C>
C from_int(long value) {
  if constexpr (std::is_same_v<C, Scalar>) {
    return Scalar(value);
  } else {
    return C(from_int<typename C::coefficient_type>(value));
  }
}

/// Dense univariate polynomial with coefficients in C, stored lowest power
/// first. The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  explicit Polynomial(C constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(C coefficient, std::size_t power) {
    if (coefficient.is_zero()) return {};
    std::vector<C> c(power + 1);
    c[power] = std::move(coefficient);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(from_int<C>(1), 1); }
  static Polynomial one() { return Polynomial(from_int<C>(1)); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const C& coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : zero_coefficient();
  }
  const C& operator[](std::size_t power) const { return coeff(power); }
  const C& leading() const { return coeffs_.empty() ? zero_coefficient() : coeffs_.back(); }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == from_int<C>(1); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const C& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<C> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * from_int<C>(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  C evaluate(const C& at) const {
    C acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Multiplies by x^k.
  Polynomial shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<D>(std::move(out));
  }

  /// Leading coefficient scaled to one. Requires a field.
  Polynomial monic() const {
    if (is_zero()) return {};
    C inv = from_int<C>(1) / leading();
    return *this * inv;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  static const C& zero_coefficient() {
    static const C zero{};
    return zero;
  }

  std::vector<C> coeffs_;
};

template <class C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned long exponent) {
  Polynomial<C> result = Polynomial<C>::one();
  Polynomial<C> b = base;
  while (exponent) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

/// Quotient and remainder over a field: a = q*b + r with deg r < deg b.
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<C>{}, a};
  std::vector<C> rem = a.coefficients();
  std::vector<C> quot(rem.size() - b.size() + 1);
  const C inv_lead = from_int<C>(1) / b.leading();
  const std::size_t db = b.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    C factor = rem[i] * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coeff(j);
    quot[i - db] = std::move(factor);
  }
  rem.resize(db);
  return {Polynomial<C>(std::move(quot)), Polynomial<C>(std::move(rem))};
}

/// Division that must leave no remainder.
template <class C>
Polynomial<C> exact_quotient(const Polynomial<C>& a, const Polynomial<C>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidInput, "inexact polynomial division");
  return q;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed with ring
/// operations only.
template <class C>
Polynomial<C> pseudo_remainder(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  Polynomial<C> r = a;
  const C& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    r = r * lb - b.shift(shift) * r.leading();
    --steps;
  }
  for (; steps > 0; --steps) r *= lb;
  return r;
}

}  // namespace aimpoly
