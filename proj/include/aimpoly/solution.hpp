#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aimpoly/aim.hpp"
#include "aimpoly/linalg.hpp"
#include "aimpoly/tower.hpp"

namespace aimpoly {

enum class Normalization {
  Primitive,  // integer coefficients with gcd 1 and positive leading coefficient
  Monic,
};

enum class SolutionMethod { AimAlpha, OracleNullspace };

inline std::string_view to_string(Normalization n) { return n == Normalization::Monic ? "monic" : "primitive"; }
inline std::string_view to_string(SolutionMethod m) {
  return m == SolutionMethod::AimAlpha ? "aim_alpha" : "oracle_nullspace";
}

struct PolySolution {
  XPoly y;
  std::size_t degree = 0;
  Normalization normalization = Normalization::Primitive;
  SolutionMethod method = SolutionMethod::AimAlpha;
  bool residual_zero = false;
};

struct SolutionBasis {
  std::vector<PolySolution> solutions;
  std::size_t dimension() const noexcept { return solutions.size(); }
};

struct VerifyReport {
  XRat residual;  // y'' - lambda0 y' - s0 y
  XPoly cleared;  // numerator of the reduced residual
  bool residual_zero = false;
};

inline Polynomial<Scalar> normalize(const Polynomial<Scalar>& p, Normalization how) {
  if (p.is_zero()) return p;
  if (how == Normalization::Monic) return p.monic();
  auto prim = detail::integer_primitive(p);
  return prim.leading().sign() < 0 ? -prim : prim;
}

inline XPoly normalize(const XPoly& p, Normalization how) {
  return from_rational_poly(normalize(to_rational_poly(p), how));
}

/// True when a and b are nonzero scalar multiples of each other.
inline bool proportional(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return a * b.leading() == b * a.leading();
}

inline VerifyReport verify(const EquationSpec& eq, const XPoly& y) {
  XRat fy(y);
  XRat d1 = fy.derivative();
  XRat residual = d1.derivative() - eq.lambda0 * d1 - eq.s0 * fy;
  VerifyReport report;
  report.cleared = residual.numerator();
  report.residual_zero = residual.is_zero();
  report.residual = std::move(residual);
  return report;
}

/// alpha = s_{n-1}/lambda_{n-1}, the logarithmic derivative -y'/y of the
/// solution once delta_n vanishes.
inline XRat alpha(const AimTrace& trace, std::size_t n) {
  if (n >= trace.size()) throw Error(ErrorKind::InvalidInput, "trace does not reach index " + std::to_string(n));
  if (!trace.steps[n].delta.is_zero())
    throw Error(ErrorKind::InvalidInput, "delta_" + std::to_string(n) + " does not vanish");
  XRat lam_prev = trace.lambda_before(n);
  if (lam_prev.is_zero()) throw Error(ErrorKind::SideConditionViolated, "lambda_{n-1} vanishes identically");
  XRat a = trace.s_before(n) / lam_prev;
  const XRat& lam = trace.lambda(n);
  if (!lam.is_zero() && trace.s(n) / lam != a)
    throw Error(ErrorKind::InconsistentMethods, "s_n/lambda_n disagrees with s_{n-1}/lambda_{n-1}");
  return a;
}

namespace detail {

inline std::pair<Polynomial<Scalar>, Polynomial<Scalar>> rational_parts(const XRat& f) {
  return {to_rational_poly(f.numerator()), to_rational_poly(f.denominator())};
}

/// Column k of the coefficient matrix holds the image of x^k.
template <class Image>
RationalMatrix ansatz_matrix(std::size_t degree_bound, Image&& image) {
  std::vector<Polynomial<Scalar>> columns;
  std::size_t rows = 1;
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    columns.push_back(image(k));
    rows = std::max(rows, columns.back().size());
  }
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) m(r, c) = columns[c][r];
  return m;
}

inline PolySolution make_solution(const Polynomial<Scalar>& y, Normalization how, SolutionMethod method) {
  PolySolution s;
  auto normalized = normalize(y, how);
  s.y = from_rational_poly(normalized);
  s.degree = static_cast<std::size_t>(std::max(0, normalized.degree()));
  s.normalization = how;
  s.method = method;
  return s;
}

}  // namespace detail

/// Polynomial y of degree <= degree_bound with y' = -alpha y, i.e. Q y' + P y = 0
/// for alpha = P/Q, found from the linear system on its coefficients.
inline PolySolution solve_alpha_ode(const XRat& alpha_value, std::size_t degree_bound,
                                    Normalization how = Normalization::Primitive) {
  auto [p, q] = detail::rational_parts(alpha_value);
  auto m = detail::ansatz_matrix(degree_bound, [&](std::size_t k) {
    auto xk = Polynomial<Scalar>::monomial(Scalar(1), k);
    return q * xk.derivative() + p * xk;
  });
  auto basis = nullspace(std::move(m));
  if (basis.empty())
    throw Error(ErrorKind::NoPolynomialSolution,
                "no polynomial of degree <= " + std::to_string(degree_bound) + " satisfies y' = -alpha y");
  auto sol = detail::make_solution(Polynomial<Scalar>(basis.front()), how, SolutionMethod::AimAlpha);
  sol.residual_zero = true;  // first-order identity holds by construction; callers verify the ODE
  return sol;
}

/// Brute-force basis of all polynomial solutions of degree <= degree_bound,
/// from the cleared equation D y'' - (D lambda0) y' - (D s0) y = 0.
inline SolutionBasis oracle_nullspace(const EquationSpec& eq, std::size_t degree_bound,
                                      Normalization how = Normalization::Primitive) {
  validate(eq);
  if (eq.is_parametric()) throw Error(ErrorKind::InvalidInput, "oracle needs a parameter-free equation");
  auto [ln, ld] = detail::rational_parts(eq.lambda0);
  auto [sn, sd] = detail::rational_parts(eq.s0);
  Polynomial<Scalar> d = lcm(ld, sd);
  Polynomial<Scalar> a = ln * exact_quotient(d, ld);
  Polynomial<Scalar> b = sn * exact_quotient(d, sd);
  auto m = detail::ansatz_matrix(degree_bound, [&](std::size_t k) {
    auto xk = Polynomial<Scalar>::monomial(Scalar(1), k);
    auto dx = xk.derivative();
    return d * dx.derivative() - a * dx - b * xk;
  });
  SolutionBasis basis;
  for (auto& v : nullspace(std::move(m))) {
    auto sol = detail::make_solution(Polynomial<Scalar>(std::move(v)), how, SolutionMethod::OracleNullspace);
    sol.residual_zero = verify(eq, sol.y).residual_zero;
    basis.solutions.push_back(std::move(sol));
  }
  std::sort(basis.solutions.begin(), basis.solutions.end(),
            [](const PolySolution& x, const PolySolution& y) { return x.degree < y.degree; });
  return basis;
}

inline std::size_t basis_rank(const std::vector<XPoly>& polys) {
  std::size_t rows = 1;
  for (const auto& p : polys) rows = std::max(rows, p.size());
  RationalMatrix m(rows, polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    auto q = to_rational_poly(polys[c]);
    for (std::size_t r = 0; r < q.size(); ++r) m(r, c) = q[r];
  }
  return rank(std::move(m));
}

inline bool in_span(const SolutionBasis& basis, const XPoly& y) {
  std::vector<XPoly> polys;
  for (const auto& s : basis.solutions) polys.push_back(s.y);
  std::size_t before = basis_rank(polys);
  polys.push_back(y);
  return basis_rank(polys) == before;
}

struct CrossCheckReport {
  std::size_t n = 0;
  PolySolution aim;
  SolutionBasis oracle;
  bool consistent = false;
};

/// Runs both construction routes at the terminating index n and insists the
/// alpha-route polynomial lies in the oracle's span.
inline CrossCheckReport cross_check(const EquationSpec& eq, const AimTrace& trace, std::size_t n,
                                    Normalization how = Normalization::Primitive) {
  CrossCheckReport report;
  report.n = n;
  report.aim = solve_alpha_ode(alpha(trace, n), n, how);
  report.aim.residual_zero = verify(eq, report.aim.y).residual_zero;
  report.oracle = oracle_nullspace(eq, n, how);
  report.consistent = report.aim.residual_zero && in_span(report.oracle, report.aim.y);
  if (!report.consistent)
    throw Error(ErrorKind::InconsistentMethods,
                "alpha-route solution is not in the oracle nullspace at n = " + std::to_string(n));
  return report;
}

inline CrossCheckReport cross_check(const EquationSpec& eq, std::size_t n, const AimConfig& config = {},
                                    Normalization how = Normalization::Primitive) {
  auto trace = iterate(eq, n, config);
  return cross_check(eq, trace, n, how);
}

enum class Verdict {
  AimVerified,   // alpha route produced a solution with zero residual, confirmed by the oracle
  OracleOnly,    // delta vanished but the side condition failed (or the alpha route did); oracle answer
  NoTermination,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AimVerified: return "aim-verified";
    case Verdict::OracleOnly: return "oracle-only";
    case Verdict::NoTermination: return "no-termination";
  }
  return "unknown";
}

struct SolveOutcome {
  AimTrace trace;
  Verdict verdict = Verdict::NoTermination;
  std::optional<std::size_t> terminated_at;
  bool side_condition_ok = false;
  SolutionBasis solutions;  // alpha-route solution first when available, then oracle basis
  std::optional<CrossCheckReport> cross;
};

/// End-to-end pipeline for a parameter-free equation: scan, build, verify.
inline SolveOutcome solve(const EquationSpec& eq, const AimConfig& config = {},
                          Normalization how = Normalization::Primitive) {
  SolveOutcome out;
  out.trace = scan_termination(eq, config);
  out.terminated_at = out.trace.terminated_at;
  if (!out.terminated_at) return out;
  const std::size_t n = *out.terminated_at;
  out.side_condition_ok = out.trace.steps[n].side_condition_ok;
  if (out.side_condition_ok) {
    try {
      out.cross = cross_check(eq, out.trace, n, how);
      out.verdict = Verdict::AimVerified;
      out.solutions = out.cross->oracle;
      if (out.solutions.dimension() <= 1) {
        out.solutions.solutions.assign(1, out.cross->aim);
      }
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoPolynomialSolution && e.kind() != ErrorKind::SideConditionViolated) throw;
    }
  }
  out.verdict = Verdict::OracleOnly;
  out.solutions = oracle_nullspace(eq, n, how);
  return out;
}

}  // namespace aimpoly
