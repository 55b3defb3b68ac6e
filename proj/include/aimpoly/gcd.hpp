#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "aimpoly/polynomial.hpp"

namespace aimpoly {

template <class C>
struct is_rational_function : std::false_type {};
template <class C>
struct is_rational_function<RationalFunction<C>> : std::true_type {};
template <class C>
inline constexpr bool is_rational_function_v = is_rational_function<C>::value;

template <class C>
Polynomial<C> gcd(const Polynomial<C>& a, const Polynomial<C>& b);

namespace detail {

/// Positive rational c such that p / c has coprime integer coefficients.
inline Scalar rational_content(const Polynomial<Scalar>& p) {
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.value().get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  }
  if (num == 0) return Scalar(1);
  return Scalar(mpq_class(num, den));
}

inline Polynomial<Scalar> integer_primitive(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * rational_content(p).inverse();
}

template <class C>
Polynomial<C> monic_euclid(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Euclid over Q[t] on integer primitive parts; every pseudo-remainder is
/// reduced to its primitive part so coefficients stay small.
inline Polynomial<Scalar> primitive_euclid(const Polynomial<Scalar>& a0, const Polynomial<Scalar>& b0) {
  Polynomial<Scalar> a = integer_primitive(a0);
  Polynomial<Scalar> b = integer_primitive(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Polynomial<Scalar>::one();
    auto r = pseudo_remainder(a, b);
    a = std::move(b);
    b = integer_primitive(r);
  }
  return a.monic();
}

/// Polynomial over K[t], used as the ring image of Q(t)[x] in the PRS.
template <class K>
using RingPoly = Polynomial<Polynomial<K>>;

template <class K>
Polynomial<K> content(const RingPoly<K>& p) {
  Polynomial<K> g;
  for (const auto& c : p.coefficients()) {
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class K>
RingPoly<K> primitive_part(const RingPoly<K>& p) {
  if (p.is_zero()) return p;
  Polynomial<K> cont = content(p);
  RingPoly<K> out =
      cont.degree() > 0 ? p.map([&](const Polynomial<K>& c) { return exact_quotient(c, cont); }) : p;
  if constexpr (std::is_same_v<K, Scalar>) {
    // Strip the rational content shared by all t-coefficients.
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& c : out.coefficients()) {
      for (const auto& s : c.coefficients()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.value().get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.value().get_den_mpz_t());
      }
    }
    if (num != 0) {
      Scalar scale(mpq_class(den, num));
      out = out.map([&](const Polynomial<K>& c) { return c * scale; });
    }
  }
  return out;
}

/// Clears the t-denominators of a polynomial over K(t): returns its image in
/// K[t][x] after multiplication by the lcm of all coefficient denominators.
template <class K>
RingPoly<K> clear_denominators(const Polynomial<RationalFunction<K>>& p) {
  Polynomial<K> l = Polynomial<K>::one();
  for (const auto& c : p.coefficients()) {
    const auto& d = c.denominator();
    if (d.degree() > 0) l = exact_quotient(l * d, gcd(l, d));
  }
  return p.map([&](const RationalFunction<K>& c) {
    return c.numerator() * exact_quotient(l, c.denominator());
  });
}

template <class K>
Polynomial<RationalFunction<K>> ring_to_field(const RingPoly<K>& p) {
  return p.map([](const Polynomial<K>& c) { return RationalFunction<K>(c); });
}

template <class K>
Polynomial<RationalFunction<K>> prs_gcd(const Polynomial<RationalFunction<K>>& a,
                                       const Polynomial<RationalFunction<K>>& b) {
  using F = RationalFunction<K>;
  auto all_constant = [](const Polynomial<F>& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const F& c) { return c.is_constant(); });
  };
  if (all_constant(a) && all_constant(b)) {
    auto down = [](const Polynomial<F>& p) { return p.map([](const F& c) { return c.constant_value(); }); };
    auto g = gcd(down(a), down(b));
    return g.map([](const K& c) { return F(c); });
  }
  RingPoly<K> ra = primitive_part(clear_denominators(a));
  RingPoly<K> rb = primitive_part(clear_denominators(b));
  if (ra.degree() < rb.degree()) std::swap(ra, rb);
  while (!rb.is_zero()) {
    if (rb.degree() == 0) return Polynomial<F>::one();
    auto r = pseudo_remainder(ra, rb);
    ra = std::move(rb);
    rb = primitive_part(r);
  }
  return ring_to_field(ra).monic();
}

}  // namespace detail

/// Monic greatest common divisor. gcd(p, 0) = monic(p); both zero is an error.
template <class C>
Polynomial<C> gcd(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidInput, "gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial<C>::one();
  if constexpr (std::is_same_v<C, Scalar>) {
    return detail::primitive_euclid(a, b);
  } else if constexpr (is_rational_function_v<C>) {
    return detail::prs_gcd(a, b);
  } else {
    return detail::monic_euclid(a, b);
  }
}

template <class C>
Polynomial<C> lcm(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_quotient(a * b, gcd(a, b)).monic();
}

}  // namespace aimpoly
