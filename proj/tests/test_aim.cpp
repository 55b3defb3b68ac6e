#include <catch_amalgamated.hpp>

#include "support/check.hpp"

using namespace aimpoly;
using support::equation;
using support::error_kind;
using support::xr;

namespace {
std::vector<Scalar> values(std::initializer_list<Scalar> v) { return v; }
}  // namespace

TEST_CASE("aim_step applies one recursion step") {
  SECTION("Hermite at k = 1") {
    auto eq = equation("2x", "-2");
    auto [lambda, s] = aim_step(eq.lambda0, eq.s0, eq);
    CHECK(lambda == xr("4x^2"));
    CHECK(s == xr("-4x"));
  }
  SECTION("vanishing lambda0") {
    auto eq = equation("0", "-2/x^2");
    auto [lambda, s] = aim_step(eq.lambda0, eq.s0, eq);
    CHECK(lambda == xr("-2/x^2"));
    CHECK(s == xr("4/x^3"));
  }
  SECTION("s0 = 0 is preserved") {
    auto trace = iterate(equation("(x^2 + 1)/(x - 3)", "0"), 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(trace.s(k).is_zero());
  }
}

TEST_CASE("index convention gives delta_0 = -s0") {
  auto eq = equation("1 - 1/x", "3/x");
  auto trace = iterate(eq, 0);
  CHECK(delta(trace, 0) == xr("-3/x"));
  CHECK(trace.lambda_before(0) == xr("1"));
  CHECK(trace.s_before(0).is_zero());
  CHECK(error_kind([&] { return delta(trace, 1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("delta vanishes at the classical eigenvalues") {
  CHECK(delta(iterate(equation("1 - 1/x", "-1/x"), 1), 1).is_zero());
  CHECK(delta(iterate(equation("2x", "-2"), 1), 1).is_zero());
  auto legendre3 = equation("2x/(1 - x^2)", "12/(x^2 - 1)");
  CHECK(!delta(iterate(legendre3, 2), 2).is_zero());
  CHECK(delta(iterate(legendre3, 3), 3).is_zero());
}

TEST_CASE("scan_termination finds the smallest index") {
  auto a = scan_termination(equation("0", "2/x^2"));
  REQUIRE(a.terminated_at);
  CHECK(*a.terminated_at == 2);
  CHECK(a.size() == 3);

  auto b = scan_termination(equation("1 - 1/x", "-2/x"));
  REQUIRE(b.terminated_at);
  CHECK(*b.terminated_at == 2);

  auto c = scan_termination(equation("2x", "-1"), AimConfig{10, 512});
  CHECK(!c.terminated_at);
  CHECK(c.size() == 11);
}

TEST_CASE("scan_termination preconditions and blowup") {
  CHECK(error_kind([] { return scan_termination(equation("2x", "-2k")); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { return scan_termination(equation("2x", "-2"), AimConfig{0, 512}); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind([] { return scan_termination(equation("2x", "-1"), AimConfig{24, 6}); }) ==
        ErrorKind::IterateBlowup);
}

TEST_CASE("side condition is recorded at each step") {
  auto trace = iterate(equation("0", "2/x^2"), 2);
  CHECK(!trace.steps[0].side_condition_ok);
  CHECK(!trace.steps[1].side_condition_ok);
  CHECK(trace.steps[2].side_condition_ok);
}

TEST_CASE("eigen_condition solves for the spectral parameter") {
  SECTION("Laguerre") {
    auto ec = eigen_condition(make_equation("laguerre"), 2);
    CHECK(ec.rational_roots() == values({-2, -1, 0}));
    CHECK(ec.roots.residual_factor == ParamPoly::one());
  }
  SECTION("Chebyshev I") {
    CHECK(eigen_condition(make_equation("chebyshev1"), 3).rational_roots() == values({0, 1, 4, 9}));
  }
  SECTION("Bochner with a = 1, d = 3") {
    ParamMap p{{"a", 1}, {"b", 0}, {"c", 0}, {"d", 3}, {"e", 0}};
    CHECK(eigen_condition(make_equation("bochner", p), 2).rational_roots() == values({0, 3, 8}));
  }
  SECTION("Legendre has the mirror roots") {
    CHECK(eigen_condition(make_equation("legendre"), 2).rational_roots() == values({-3, -2, -1, 0, 1, 2}));
  }
  SECTION("identically satisfied") {
    auto ec = eigen_condition(equation("2x + 0*t", "0"), 1);
    CHECK(ec.identically_satisfied);
    CHECK(ec.rational_roots().empty());
  }
  SECTION("parameter-free input is rejected") {
    CHECK(error_kind([] { return eigen_condition(equation("2x", "-2"), 1); }) == ErrorKind::InvalidInput);
  }
}

TEST_CASE("quotient form agrees with delta") {
  auto trace = iterate(equation("0", "2/x^2"), 4);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto q = quotient_test(trace, k, QuotientForm::LambdaOverS);
    REQUIRE(q);
    CHECK(*q == delta(trace, k).is_zero());
  }
  auto hermite = iterate(equation("2x", "-6"), 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    auto q = quotient_test(hermite, k, QuotientForm::SOverLambda);
    REQUIRE(q);
    CHECK(*q == delta(hermite, k).is_zero());
  }
  CHECK(!quotient_test(trace, 0, QuotientForm::SOverLambda));
}

TEST_CASE("delta closed forms") {
  SECTION("Laguerre agrees exactly") {
    auto c = delta_closed_form_check("laguerre", 1, {}, Scalar(5));
    CHECK(c.agreement == DeltaAgreement::Equal);
    CHECK(c.engine == xr("30/x^2"));
  }
  SECTION("Hermite printed product omits the i = 0 factor") {
    auto c = delta_closed_form_check("hermite", 1);
    CHECK(c.engine == xr("4k*(k - 1)"));
    CHECK(c.printed == xr("4*(k - 1)"));
    REQUIRE(c.ratio);
    CHECK(*c.ratio == xr("k"));
    CHECK(c.agreement == DeltaAgreement::Different);
    CHECK(c.note);
  }
  SECTION("Cauchy-Euler x^n family at beta = 0") {
    auto c = delta_closed_form_check("cauchy_euler_15", 1, {{"alpha", 2}}, Scalar(0));
    CHECK(c.printed == xr("2/x^4"));
    CHECK(c.engine.is_zero());
    CHECK(c.agreement == DeltaAgreement::Different);
  }
  SECTION("Cauchy-Euler symbolic ratio is beta") {
    auto c = delta_closed_form_check("cauchy_euler_15", 2, {{"alpha", 2}});
    REQUIRE(c.ratio);
    CHECK(*c.ratio == xr("beta"));
  }
  SECTION("sign conventions") {
    for (const char* id : {"gegenbauer", "hyperspherical", "bochner", "eq17"}) {
      INFO(id);
      auto c = delta_closed_form_check(id, 2);
      CHECK(c.agreement == DeltaAgreement::ConstantMultiple);
      REQUIRE(c.ratio);
      CHECK(*c.ratio == xr("-1"));
    }
  }
  SECTION("rows that agree exactly") {
    for (const char* id :
         {"hermite_2b", "laguerre", "confluent", "hypergeometric", "chebyshev1", "bessel", "gen_bessel"}) {
      for (std::size_t n = 0; n <= 3; ++n) {
        INFO(id << " n=" << n);
        CHECK(delta_closed_form_check(id, n).agreement == DeltaAgreement::Equal);
      }
    }
  }
  SECTION("Jacobi printed form lacks the denominator") {
    auto c = delta_closed_form_check("jacobi", 1);
    REQUIRE(c.ratio);
    CHECK(*c.ratio == xr("1/(x^2 - 1)^2"));
  }
}
