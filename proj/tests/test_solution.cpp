#include <catch_amalgamated.hpp>

#include "support/check.hpp"

using namespace aimpoly;
using support::equation;
using support::error_kind;
using support::xp;
using support::xr;

TEST_CASE("alpha is s_{n-1}/lambda_{n-1}") {
  CHECK(alpha(iterate(equation("1 - 1/x", "-1/x"), 1), 1) == xr("-1/(x - 1)"));
  CHECK(alpha(iterate(equation("2x", "-2"), 1), 1) == xr("-1/x"));
  CHECK(alpha(iterate(equation("0", "2/x^2"), 2), 2) == xr("-2/x"));
  CHECK(error_kind([] { return alpha(iterate(equation("0", "0"), 1), 1); }) == ErrorKind::SideConditionViolated);
  CHECK(error_kind([] { return alpha(iterate(equation("0", "2/x^2"), 1), 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("solve_alpha_ode integrates y' = -alpha y") {
  CHECK(solve_alpha_ode(xr("-2/x"), 2).y == xp("x^2"));
  CHECK(solve_alpha_ode(xr("-(2x - 4)/(x^2 - 4x + 2)"), 2).y == xp("x^2 - 4x + 2"));
  CHECK(solve_alpha_ode(xr("0"), 0).y == xp("1"));
  auto laguerre = iterate(equation("1 - 1/x", "-2/x"), 2);
  auto sol = solve_alpha_ode(alpha(laguerre, 2), 2);
  CHECK(sol.y == xp("x^2 - 4x + 2"));
  CHECK(sol.degree == 2);
  CHECK(sol.method == SolutionMethod::AimAlpha);
}

TEST_CASE("solve_alpha_ode rejects non-polynomial integrals") {
  CHECK(error_kind([] { return solve_alpha_ode(xr("-1/(2x)"), 3); }) == ErrorKind::NoPolynomialSolution);
  CHECK(error_kind([] { return solve_alpha_ode(xr("-3/x"), 2); }) == ErrorKind::NoPolynomialSolution);
}

TEST_CASE("normalization conventions") {
  auto prim = solve_alpha_ode(alpha(iterate(equation("2x", "-4"), 2), 2), 2);
  CHECK(prim.y == xp("2x^2 - 1"));
  auto monic = solve_alpha_ode(alpha(iterate(equation("2x", "-4"), 2), 2), 2, Normalization::Monic);
  CHECK(monic.y == xp("x^2 - 1/2"));
  CHECK(normalize(xp("-6x^2 + 3/2"), Normalization::Primitive) == xp("4x^2 - 1"));
  CHECK(proportional(prim.y, monic.y));
  CHECK(!proportional(xp("x + 1"), xp("x - 1")));
}

TEST_CASE("oracle nullspace finds every bounded-degree solution") {
  auto hermite = oracle_nullspace(equation("2x", "-4"), 2);
  REQUIRE(hermite.dimension() == 1);
  CHECK(hermite.solutions[0].y == xp("2x^2 - 1"));
  CHECK(hermite.solutions[0].residual_zero);

  auto cheb2 = oracle_nullspace(equation("3x/(1 - x^2)", "-8/(1 - x^2)"), 2);
  REQUIRE(cheb2.dimension() == 1);
  CHECK(cheb2.solutions[0].y == xp("4x^2 - 1"));

  CHECK(oracle_nullspace(equation("2x/(1 - x^2)", "12/(x^2 - 1)"), 2).dimension() == 0);
  CHECK(oracle_nullspace(equation("2x/(1 - x^2)", "12/(x^2 - 1)"), 3).dimension() == 1);

  auto free = oracle_nullspace(equation("0", "0"), 3);
  CHECK(free.dimension() == 2);
  CHECK(in_span(free, xp("3x - 7")));
  CHECK(!in_span(free, xp("x^2")));
  CHECK(error_kind([] { return oracle_nullspace(equation("2x", "-2k"), 2); }) == ErrorKind::InvalidInput);
}

TEST_CASE("verify substitutes into the equation") {
  CHECK(verify(equation("4x/(1 - x^2)", "-4/(1 - x^2)"), xp("4x")).residual_zero);
  auto bad = verify(equation("2x", "-4"), xp("x^2"));
  CHECK(!bad.residual_zero);
  CHECK(bad.residual == xr("2"));
  CHECK(verify(equation("-2*(x + 1)/x^2", "2/x^2"), xp("1 + x")).residual_zero);
}

TEST_CASE("cross_check agrees on the generalized families") {
  SECTION("generalized Laguerre") {
    auto eq = make_equation("gen_laguerre", {{"N", 1}, {"a", 1}, {"b", 1}}, Scalar(2));
    auto r = cross_check(eq, 2);
    CHECK(r.consistent);
    CHECK(proportional(r.aim.y, xp("2 - x^2")));
  }
  SECTION("generalized Hermite odd branch") {
    auto eq = make_equation("gen_hermite", {{"N", 2}, {"a", 1}}, Scalar(4));
    auto trace = scan_termination(eq);
    REQUIRE(trace.terminated_at);
    auto r = cross_check(eq, trace, *trace.terminated_at);
    CHECK(r.consistent);
    CHECK(r.aim.degree == 4);
    CHECK(proportional(r.aim.y, xp("x^4 - 4x")));
  }
  SECTION("Kratzer ground state") {
    auto eq = make_equation("kratzer", {{"A", 2}, {"gamma", 0}}, Scalar(1));
    auto r = cross_check(eq, 0);
    CHECK(r.consistent);
    CHECK(r.aim.y == xp("1"));
  }
}

TEST_CASE("solve reports a verdict") {
  auto ok = solve(equation("1 - 1/x", "-2/x"));
  CHECK(ok.verdict == Verdict::AimVerified);
  REQUIRE(ok.solutions.dimension() == 1);
  CHECK(ok.solutions.solutions[0].y == xp("x^2 - 4x + 2"));
  CHECK(ok.cross);

  auto degenerate = solve(equation("0", "0"));
  CHECK(degenerate.verdict == Verdict::OracleOnly);
  CHECK(!degenerate.side_condition_ok);
  CHECK(degenerate.terminated_at == 0u);
  REQUIRE(degenerate.solutions.dimension() == 1);
  CHECK(degenerate.solutions.solutions[0].y == xp("1"));

  auto none = solve(equation("2x", "-1"), AimConfig{10, 512});
  CHECK(none.verdict == Verdict::NoTermination);
  CHECK(oracle_nullspace(equation("2x", "-1"), 10).dimension() == 0);
}
