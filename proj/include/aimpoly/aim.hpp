#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aimpoly/error.hpp"
#include "aimpoly/roots.hpp"
#include "aimpoly/tower.hpp"

namespace aimpoly {

/// y'' = lambda0(x) y' + s0(x) y, with rational coefficients in x over Q(t).
/// When `parameter` is empty both coefficients must be free of t.
struct EquationSpec {
  XRat lambda0;
  XRat s0;
  std::optional<std::string> parameter;
  std::string variable = "x";

  bool is_parametric() const noexcept { return parameter.has_value(); }
};

inline void validate(const EquationSpec& eq) {
  if (!eq.parameter && !(is_param_free(eq.lambda0) && is_param_free(eq.s0)))
    throw Error(ErrorKind::InvalidInput, "coefficients depend on a parameter but none is declared");
}

/// Instantiates the spectral parameter, producing a parameter-free equation.
inline EquationSpec instantiate(const EquationSpec& eq, const Scalar& value) {
  return {substitute_param(eq.lambda0, value), substitute_param(eq.s0, value), std::nullopt, eq.variable};
}

struct AimConfig {
  std::size_t n_max = 24;
  std::size_t degree_cap = 512;
};

struct AimStep {
  XRat lambda;
  XRat s;
  XRat delta;
  bool side_condition_ok = false;  // lambda_k * lambda_{k-1} not identically zero
};

/// Iterates (lambda_k, s_k, delta_k) for k = 0..n. Index -1 is the identity
/// y' = 1*y' + 0*y, so delta_0 = -s0.
struct AimTrace {
  std::vector<AimStep> steps;
  std::optional<std::size_t> terminated_at;

  std::size_t size() const noexcept { return steps.size(); }
  const XRat& lambda(std::size_t k) const { return steps.at(k).lambda; }
  const XRat& s(std::size_t k) const { return steps.at(k).s; }
  /// lambda_{k-1}, with lambda_{-1} = 1.
  XRat lambda_before(std::size_t k) const { return k == 0 ? x_constant(Scalar(1)) : steps.at(k - 1).lambda; }
  /// s_{k-1}, with s_{-1} = 0.
  XRat s_before(std::size_t k) const { return k == 0 ? XRat{} : steps.at(k - 1).s; }
};

/// One application of the recursion
///   lambda_n = lambda_{n-1}' + s_{n-1} + lambda0 lambda_{n-1}
///   s_n      = s_{n-1}' + s0 lambda_{n-1}.
inline std::pair<XRat, XRat> aim_step(const XRat& prev_lambda, const XRat& prev_s, const EquationSpec& eq) {
  XRat lambda = prev_lambda.derivative() + prev_s + eq.lambda0 * prev_lambda;
  XRat s = prev_s.derivative() + eq.s0 * prev_lambda;
  return {std::move(lambda), std::move(s)};
}

inline XRat compute_delta(const XRat& lambda_n, const XRat& s_n, const XRat& lambda_prev, const XRat& s_prev) {
  return lambda_n * s_prev - lambda_prev * s_n;
}

inline XRat delta(const AimTrace& trace, std::size_t n) {
  if (n >= trace.size()) throw Error(ErrorKind::InvalidInput, "trace does not reach index " + std::to_string(n));
  return trace.steps[n].delta;
}

namespace detail {

inline void check_degree_cap(const XRat& f, std::size_t cap, std::size_t step) {
  auto limit = static_cast<int>(cap);
  if (x_degree(f) > limit || param_degree(f) > limit)
    throw Error(ErrorKind::IterateBlowup, "iterate " + std::to_string(step) + " exceeds degree cap " +
                                              std::to_string(cap));
}

inline AimStep make_step(XRat lambda, XRat s, const XRat& lambda_prev, const XRat& s_prev) {
  AimStep step;
  step.delta = compute_delta(lambda, s, lambda_prev, s_prev);
  step.side_condition_ok = !lambda.is_zero() && !lambda_prev.is_zero();
  step.lambda = std::move(lambda);
  step.s = std::move(s);
  return step;
}

inline AimTrace run(const EquationSpec& eq, std::size_t last, const AimConfig& config, bool stop_at_zero) {
  validate(eq);
  AimTrace trace;
  XRat lambda_prev = x_constant(Scalar(1));
  XRat s_prev;
  XRat lambda = eq.lambda0;
  XRat s = eq.s0;
  for (std::size_t k = 0;; ++k) {
    check_degree_cap(lambda, config.degree_cap, k);
    check_degree_cap(s, config.degree_cap, k);
    trace.steps.push_back(make_step(lambda, s, lambda_prev, s_prev));
    if (trace.steps.back().delta.is_zero() && !trace.terminated_at) {
      trace.terminated_at = k;
      if (stop_at_zero) break;
    }
    if (k == last) break;
    auto [next_lambda, next_s] = aim_step(lambda, s, eq);
    lambda_prev = std::move(lambda);
    s_prev = std::move(s);
    lambda = std::move(next_lambda);
    s = std::move(next_s);
  }
  return trace;
}

}  // namespace detail

/// Full trace through index n, regardless of where delta first vanishes.
inline AimTrace iterate(const EquationSpec& eq, std::size_t n, const AimConfig& config = {}) {
  return detail::run(eq, n, config, false);
}

/// Trace up to the smallest n <= n_max with delta_n identically zero.
inline AimTrace scan_termination(const EquationSpec& eq, const AimConfig& config = {}) {
  if (eq.is_parametric()) throw Error(ErrorKind::InvalidInput, "scan_termination needs a parameter-free equation");
  if (config.n_max < 1) throw Error(ErrorKind::InvalidInput, "n_max must be at least 1");
  return detail::run(eq, config.n_max, config, true);
}

/// The quotient form of the termination test: s_n/lambda_n = s_{n-1}/lambda_{n-1},
/// or lambda_n/s_n = lambda_{n-1}/s_{n-1} when the s-iterates are used as
/// denominators (the lambda0 = 0 variant). Empty when a denominator vanishes.
enum class QuotientForm { SOverLambda, LambdaOverS };

inline std::optional<bool> quotient_test(const AimTrace& trace, std::size_t n, QuotientForm form) {
  const XRat& lam = trace.lambda(n);
  const XRat& s = trace.s(n);
  XRat lam_prev = trace.lambda_before(n);
  XRat s_prev = trace.s_before(n);
  if (form == QuotientForm::SOverLambda) {
    if (lam.is_zero() || lam_prev.is_zero()) return std::nullopt;
    return s / lam == s_prev / lam_prev;
  }
  if (s.is_zero() || s_prev.is_zero()) return std::nullopt;
  return lam / s == lam_prev / s_prev;
}

/// Condition on the spectral parameter for delta_n to vanish identically in x.
struct EigenCondition {
  std::size_t n = 0;
  ParamPoly condition_poly;  // monic gcd of the x-coefficients of the cleared numerator; zero if identically satisfied
  RationalRoots roots;       // empty when identically satisfied
  bool identically_satisfied = false;
  XRat delta;                // delta_n with the parameter symbolic

  std::vector<Scalar> rational_roots() const { return roots.values(); }
};

inline EigenCondition eigen_condition_from_delta(const XRat& delta_n, std::size_t n) {
  EigenCondition out;
  out.n = n;
  out.delta = delta_n;
  if (delta_n.is_zero()) {
    out.identically_satisfied = true;
    return out;
  }
  ParamPoly g;
  for (const auto& c : cleared_param_coefficients(delta_n.numerator())) {
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.degree() == 0) break;
  }
  out.condition_poly = g;
  out.roots = param_rational_roots(g);
  return out;
}

inline EigenCondition eigen_condition(const EquationSpec& eq, std::size_t n, const AimConfig& config = {}) {
  if (!eq.is_parametric())
    throw Error(ErrorKind::InvalidInput, "eigen_condition needs an equation with a spectral parameter");
  auto trace = iterate(eq, n, config);
  return eigen_condition_from_delta(trace.steps[n].delta, n);
}

}  // namespace aimpoly
