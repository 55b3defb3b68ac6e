#include <catch_amalgamated.hpp>

#include <algorithm>
#include <tuple>

#include "support/check.hpp"
#include "support/hypergeometric.hpp"

using namespace aimpoly;
using support::error_kind;
using support::lift;
using support::linear;
using support::monomial;
using support::QPoly;
using support::terminating;
using support::xp;
using support::xr;

namespace {

bool contains(const std::vector<Scalar>& v, const Scalar& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Scalar sc(long n) { return Scalar(n); }

/// Oracle basis for a family at its n-th eigenvalue.
SolutionBasis oracle_at(const std::string& id, const ParamMap& overrides, std::size_t n, std::size_t degree,
                        std::size_t branch = 0) {
  const auto& f = find_family(id);
  ParamMap p = resolve_params(f, overrides);
  auto eq = make_equation(f, p, f.expected(p, n).at(branch));
  return oracle_nullspace(eq, degree);
}

bool matches(const std::string& id, const ParamMap& overrides, std::size_t n, const QPoly& closed,
             std::size_t branch = 0) {
  auto degree = static_cast<std::size_t>(closed.degree());
  auto basis = oracle_at(id, overrides, n, degree, branch);
  return basis.dimension() >= 1 && in_span(basis, lift(closed));
}

// (1 - x)/2
QPoly half_gap() { return linear(Scalar(1, 2), Scalar(-1, 2)); }

}  // namespace

TEST_CASE("make_equation builds the registered coefficients") {
  auto legendre = make_equation("legendre");
  CHECK(legendre.lambda0 == xr("2x/(1 - x^2)"));
  CHECK(legendre.s0 == xr("m(m + 1)/(x^2 - 1)"));
  CHECK(legendre.parameter == "m");

  auto bessel = make_equation("gen_bessel", {{"a", 2}, {"b", 2}});
  CHECK(bessel.lambda0 == xr("-(2x + 2)/x^2"));
  CHECK(bessel.s0 == xr("g/x^2"));

  auto eq17 = make_equation("eq17", {{"a", 1}});
  auto cheb = make_equation("chebyshev1");
  CHECK(eq17.lambda0 == cheb.lambda0);
  CHECK(eq17.s0 == cheb.s0);

  auto fixed = make_equation("hermite", {}, Scalar(3));
  CHECK(!fixed.parameter);
  CHECK(fixed.s0 == xr("-6"));
}

TEST_CASE("expected_condition follows the closed forms") {
  CHECK(expected_condition("chebyshev1", 3) == std::vector<Scalar>{9});
  CHECK(expected_condition("hyperspherical", 2, {{"k", 1}}) == std::vector<Scalar>{10});
  CHECK(expected_condition("theorem6", 1, {{"N", 1}, {"s", 1}, {"a", 2}, {"b", 0}}) == std::vector<Scalar>{6});
  CHECK(contains(eigen_condition(make_equation("theorem6"), 2).rational_roots(), sc(6)));
  CHECK(expected_condition("gen_hermite", 2, {{"N", 2}}) == std::vector<Scalar>{6, 7});
  CHECK(expected_condition("gen_laguerre", 2, {{"N", 3}}) == std::vector<Scalar>{8});
}

TEST_CASE("parameter validation") {
  CHECK(error_kind([] { return find_family("airy"); }) == ErrorKind::UnknownFamily);
  CHECK(error_kind([] { return make_equation("laguerre", {{"z", 1}}); }) == ErrorKind::InadmissibleParams);
  CHECK(error_kind([] { return make_equation("gen_laguerre", {{"N", Scalar(1, 2)}}); }) ==
        ErrorKind::InadmissibleParams);
  CHECK(error_kind([] { return make_equation("gen_laguerre", {{"N", 0}}); }) == ErrorKind::InadmissibleParams);
  CHECK(error_kind([] { return make_equation("gen_laguerre", {{"a", 0}}); }) == ErrorKind::InadmissibleParams);
  CHECK(error_kind([] { return make_equation("theorem6", {{"s", 0}}); }) == ErrorKind::InadmissibleParams);
  const auto& jacobi = find_family("jacobi");
  CHECK(!family_warnings(jacobi, resolve_params(jacobi, {{"alpha", -1}, {"beta", -2}})).empty());
  CHECK(family_warnings(jacobi, resolve_params(jacobi)).empty());
}

TEST_CASE("Kratzer reduction") {
  auto r0 = kratzer_reduce({Scalar(2), Scalar(0), 0});
  CHECK(r0.predicted_energy == Scalar(-1));
  CHECK(r0.predicted_alpha == Scalar(1));
  CHECK(contains(eigen_condition(r0.equation, 0).rational_roots(), Scalar(1)));

  auto r1 = kratzer_reduce({Scalar(2), Scalar(0), 1});
  CHECK(r1.predicted_energy == Scalar(-1, 4));
  CHECK(contains(eigen_condition(r1.equation, 1).rational_roots(), Scalar(1, 2)));
  CHECK(kratzer_energy(Scalar(1, 2)) == Scalar(-1, 4));

  for (std::size_t n = 0; n <= 3; ++n) CHECK(kratzer_reduce({Scalar(0), Scalar(1, 2), n}).predicted_energy.is_zero());
  CHECK(error_kind([] { return kratzer_reduce({Scalar(2), Scalar(-1), 0}); }) == ErrorKind::InadmissibleParams);
}

TEST_CASE("eigen roots contain the expected condition for n <= 4") {
  for (const auto& f : registry()) {
    auto p = resolve_params(f);
    auto eq = make_equation(f, p);
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t branch = 0; branch < f.branches(); ++branch) {
        INFO(f.id << " n=" << n << " branch=" << branch);
        auto idx = f.index_for(p, n, branch);
        auto ec = eigen_condition(eq, idx);
        CHECK(contains(ec.rational_roots(), f.expected(p, n).at(branch)));
      }
    }
  }
}

TEST_CASE("every fixture lies in the oracle span") {
  for (const auto& f : registry()) {
    for (const auto& fx : f.fixtures) {
      INFO(f.id << " n=" << fx.n << " branch=" << fx.branch << " " << fx.polynomial);
      auto p = fixture_params(f, fx);
      auto y = fixture_polynomial(f, fx, p);
      auto eq = make_equation(f, p, fixture_spectral_value(f, fx, p));
      CHECK(verify(eq, y).residual_zero);
      auto basis = oracle_nullspace(eq, static_cast<std::size_t>(std::max(0, y.degree())));
      CHECK(in_span(basis, y));
    }
  }
}

TEST_CASE("printed forms of corrected fixtures fail verification") {
  for (const auto& f : registry()) {
    for (const auto& fx : f.fixtures) {
      if (!fx.printed) continue;
      INFO(f.id << " n=" << fx.n);
      CHECK(fx.provenance == "corrected");
      auto p = fixture_params(f, fx);
      Fixture printed = fx;
      printed.polynomial = *fx.printed;
      auto eq = make_equation(f, p, fixture_spectral_value(f, fx, p));
      CHECK(!verify(eq, fixture_polynomial(f, printed, p)).residual_zero);
    }
  }
}

TEST_CASE("printed Bochner cubic holds when abc = 0") {
  const auto& f = find_family("bochner");
  Fixture printed = f.fixtures.at(3);
  printed.polynomial = *printed.printed;
  for (auto params : {ParamMap{{"a", 1}, {"b", 0}, {"c", 0}, {"d", 3}, {"e", 0}},
                      ParamMap{{"a", 0}, {"b", 1}, {"c", 0}, {"d", 2}, {"e", 1}},
                      ParamMap{{"a", 2}, {"b", 3}, {"c", 0}, {"d", 5}, {"e", -1}}}) {
    auto p = fixture_params(f, printed, params);
    auto eq = make_equation(f, p, fixture_spectral_value(f, printed, p));
    CHECK(verify(eq, fixture_polynomial(f, printed, p)).residual_zero);
  }
}

TEST_CASE("x^n solves the scaled Cauchy-Euler equation") {
  for (Scalar alpha : {Scalar(1, 2), Scalar(2), Scalar(-3)}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      INFO("alpha=" << alpha.to_string() << " n=" << n);
      auto beta = expected_condition("cauchy_euler_15", n, {{"alpha", alpha}}).at(0);
      CHECK(beta == Scalar(static_cast<long>(n)) * (Scalar(static_cast<long>(n)) - Scalar(1) - alpha));
      auto eq = make_equation("cauchy_euler_15", {{"alpha", alpha}}, beta);
      CHECK(verify(eq, XPoly::monomial(ParamRat(Scalar(1)), n)).residual_zero);
    }
  }
}

TEST_CASE("hypergeometric closed forms reproduce the oracle") {
  const QPoly x = monomial(Scalar(1), 1);
  for (std::size_t n = 0; n <= 5; ++n) {
    INFO("n=" << n);
    const Scalar nn(static_cast<long>(n));
    CHECK(matches("laguerre", {}, n, terminating(n, {}, {Scalar(1)}, x)));
    CHECK(matches("confluent", {}, n, terminating(n, {}, {Scalar(3)}, x * Scalar(2))));
    CHECK(matches("hypergeometric", {}, n, terminating(n, {Scalar(1, 2)}, {Scalar(3, 2)}, x)));
    CHECK(matches("legendre", {}, n, terminating(n, {nn + 1}, {Scalar(1)}, half_gap())));
    CHECK(matches("jacobi", {}, n, terminating(n, {nn + 4}, {Scalar(2)}, half_gap())));
    CHECK(matches("chebyshev1", {}, n, terminating(n, {nn}, {Scalar(1, 2)}, half_gap())));
    CHECK(matches("chebyshev2", {}, n, terminating(n, {nn + 2}, {Scalar(3, 2)}, half_gap())));
    CHECK(matches("gegenbauer", {}, n, terminating(n, {nn + 2}, {Scalar(3, 2)}, half_gap())));
    CHECK(matches("hyperspherical", {}, n, terminating(n, {nn + 3}, {Scalar(2)}, half_gap())));
    CHECK(matches("eq17", {{"a", 3}}, n, terminating(n, {nn + 2}, {Scalar(3, 2)}, half_gap())));
    CHECK(matches("bessel", {}, n, terminating(n, {nn + 1}, {}, x * Scalar(-1, 2))));
    CHECK(matches("gen_bessel", {}, n, terminating(n, {nn + 2}, {}, x * Scalar(-1, 2))));
    CHECK(matches("kratzer", {}, n,
                  terminating(n, {}, {Scalar(2)}, x * (Scalar(2) * kratzer_reduce({Scalar(2), Scalar(0), n}).predicted_alpha))));
  }
}

TEST_CASE("Hermite closed forms in x^2") {
  const QPoly x = monomial(Scalar(1), 1);
  const QPoly x2 = monomial(Scalar(1), 2);
  for (std::size_t m = 0; m <= 3; ++m) {
    INFO("m=" << m);
    CHECK(matches("hermite", {}, 2 * m, terminating(m, {}, {Scalar(1, 2)}, x2)));
    CHECK(matches("hermite", {}, 2 * m + 1, x * terminating(m, {}, {Scalar(3, 2)}, x2)));
  }
}

TEST_CASE("shifted Hermite closed forms") {
  // u = a x + b; the even/odd solutions are 1F1(-m; 1/2; u^2/(2a)) and u 1F1(-m; 3/2; u^2/(2a)).
  for (auto [a, b] : {std::pair{Scalar(2), Scalar(1)}, std::pair{Scalar(1), Scalar(-3)}, std::pair{Scalar(3), Scalar(1, 2)}}) {
    const QPoly u = linear(b, a);
    const QPoly w = u * u * (Scalar(1) / (Scalar(2) * a));
    for (std::size_t m = 0; m <= 3; ++m) {
      INFO("a=" << a.to_string() << " m=" << m);
      ParamMap p{{"a", a}, {"b", b}};
      CHECK(matches("hermite_2b", p, 2 * m, terminating(m, {}, {Scalar(1, 2)}, w)));
      CHECK(matches("hermite_2b", p, 2 * m + 1, u * terminating(m, {}, {Scalar(3, 2)}, w)));
    }
  }
}

TEST_CASE("printed shifted Hermite form holds only at a = 1 beyond degree 3") {
  auto printed_even = [](const Scalar& a, const Scalar& b, std::size_t m) {
    const QPoly u = linear(b, a);
    return terminating(m, {}, {a / Scalar(2)}, u * u * Scalar(1, 2));
  };
  for (std::size_t m = 0; m <= 3; ++m) CHECK(matches("hermite_2b", {{"a", 1}, {"b", 2}}, 2 * m, printed_even(1, 2, m)));
  CHECK(matches("hermite_2b", {{"a", 2}, {"b", 1}}, 2, printed_even(2, 1, 1)));
  CHECK(!matches("hermite_2b", {{"a", 2}, {"b", 1}}, 4, printed_even(2, 1, 2)));
}

TEST_CASE("printed hypergeometric row disagrees with the equation") {
  // y_1 = x + c and (c)_n 2F1(-n, -n; c; x) as printed.
  CHECK(!matches("hypergeometric", {}, 1, linear(Scalar(3, 2), Scalar(1))));
  CHECK(!matches("hypergeometric", {}, 2, terminating(2, {Scalar(-2)}, {Scalar(3, 2)}, monomial(Scalar(1), 1))));
}

TEST_CASE("generalized Laguerre closed form") {
  for (long N = 1; N <= 3; ++N) {
    for (Scalar a : {Scalar(1), Scalar(-2)}) {
      for (Scalar b : {Scalar(1), Scalar(5, 2)}) {
        const Scalar np1(N + 1);
        const Scalar lower = (b + Scalar(N)) / np1;
        const QPoly z = monomial(a / np1, static_cast<std::size_t>(N + 1));
        for (std::size_t n = 0; n <= 3; ++n) {
          INFO("N=" << N << " a=" << a.to_string() << " b=" << b.to_string() << " n=" << n);
          CHECK(matches("gen_laguerre", {{"N", N}, {"a", a}, {"b", b}}, n, terminating(n, {}, {lower}, z)));
        }
      }
    }
  }
}

TEST_CASE("generalized Hermite closed forms") {
  const QPoly x = monomial(Scalar(1), 1);
  for (long N = 1; N <= 3; ++N) {
    for (Scalar a : {Scalar(1), Scalar(3)}) {
      const Scalar np1(N + 1);
      const QPoly z = monomial(a / np1, static_cast<std::size_t>(N + 1));
      for (std::size_t n = 0; n <= 3; ++n) {
        INFO("N=" << N << " a=" << a.to_string() << " n=" << n);
        ParamMap p{{"N", N}, {"a", a}};
        auto even = terminating(n, {}, {Scalar(N) / np1}, z);
        auto odd = x * terminating(n, {}, {Scalar(N + 2) / np1}, z);
        CHECK(matches("gen_hermite", p, n, even, 0));
        CHECK(matches("gen_hermite", p, n, odd, 1));
      }
    }
  }
}

TEST_CASE("mixed-power family closed form") {
  for (auto [N, s, a, b] : {std::tuple{1L, Scalar(1), Scalar(2), Scalar(0)}, std::tuple{1L, Scalar(1), Scalar(1), Scalar(0)},
                            std::tuple{2L, Scalar(1), Scalar(2), Scalar(0)}, std::tuple{2L, Scalar(2), Scalar(3), Scalar(1)},
                            std::tuple{3L, Scalar(-1), Scalar(1), Scalar(2)}}) {
    const Scalar np1(N + 1);
    const QPoly z = monomial(s, static_cast<std::size_t>(N + 1));
    for (std::size_t n = 0; n <= 3; ++n) {
      INFO("N=" << N << " s=" << s.to_string() << " a=" << a.to_string() << " b=" << b.to_string() << " n=" << n);
      const Scalar nn(static_cast<long>(n));
      Scalar upper = (b - Scalar(1)) / np1 + a / (np1 * s) + nn;
      Scalar lower = (b + Scalar(N)) / np1;
      CHECK(matches("theorem6", {{"N", N}, {"s", s}, {"a", a}, {"b", b}}, n, terminating(n, {upper}, {lower}, z)));
    }
  }
}
