#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "aimpoly/gcd.hpp"
#include "aimpoly/polynomial.hpp"
#include "aimpoly/rational_function.hpp"
#include "aimpoly/scalar.hpp"

namespace aimpoly {

// The two-level tower: Q[t] ⊂ Q(t), then Q(t)[x] ⊂ Q(t)(x).
using ParamPoly = Polynomial<Scalar>;
using ParamRat = RationalFunction<Scalar>;
using XPoly = Polynomial<ParamRat>;
using XRat = RationalFunction<ParamRat>;

inline ParamRat param_constant(const Scalar& v) { return ParamRat(v); }
inline ParamRat param_symbol() { return ParamRat::variable(); }

inline XPoly x_variable() { return XPoly::variable(); }
inline XRat x_rational_variable() { return XRat::variable(); }
inline XRat x_constant(const Scalar& v) { return XRat(ParamRat(v)); }
inline XRat x_constant(const ParamRat& v) { return XRat(v); }

inline bool is_param_free(const XPoly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const ParamRat& c) { return c.is_constant(); });
}
inline bool is_param_free(const XRat& f) { return is_param_free(f.numerator()) && is_param_free(f.denominator()); }

/// Largest t-degree among numerators and denominators of the coefficients.
inline int param_degree(const XPoly& p) {
  int d = 0;
  for (const auto& c : p.coefficients())
    d = std::max({d, c.numerator().degree(), c.denominator().degree()});
  return d;
}
inline int param_degree(const XRat& f) { return std::max(param_degree(f.numerator()), param_degree(f.denominator())); }
inline int x_degree(const XRat& f) { return std::max(f.numerator().degree(), f.denominator().degree()); }

/// Instantiates the spectral parameter t at `value`.
inline XPoly substitute_param(const XPoly& p, const Scalar& value) {
  return p.map([&](const ParamRat& c) { return ParamRat(c.evaluate(value)); });
}

/// Instantiates t and re-reduces: cancellations can appear at special values.
inline XRat substitute_param(const XRat& f, const Scalar& value) {
  if (is_param_free(f)) return f;
  return XRat(substitute_param(f.numerator(), value), substitute_param(f.denominator(), value));
}

/// Parameter-free XPoly as a polynomial over Q.
inline Polynomial<Scalar> to_rational_poly(const XPoly& p) {
  if (!is_param_free(p)) throw Error(ErrorKind::InvalidInput, "polynomial still depends on the parameter");
  return p.map([](const ParamRat& c) { return c.constant_value(); });
}
inline XPoly from_rational_poly(const Polynomial<Scalar>& p) {
  return p.map([](const Scalar& c) { return ParamRat(c); });
}

/// Coefficients N_j(t) of p after multiplying through by the lcm of the
/// t-denominators. N_j(v) = 0 for all j exactly when p vanishes at t = v
/// (away from poles of the original coefficients).
inline std::vector<ParamPoly> cleared_param_coefficients(const XPoly& p) {
  auto ring = detail::clear_denominators(p);
  return ring.coefficients();
}

}  // namespace aimpoly
