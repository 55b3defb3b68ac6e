#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aimpoly/aim.hpp"
#include "aimpoly/error.hpp"
#include "aimpoly/expr.hpp"
#include "aimpoly/solution.hpp"
#include "aimpoly/tower.hpp"

namespace aimpoly {

using ParamMap = std::map<std::string, Scalar>;

struct FamilyParam {
  std::string name;
  Scalar default_value;
  bool positive_integer = false;
};

/// Expected polynomial for one family instance, up to a scalar factor. The
/// polynomial is an expression in x, the family parameters and the spectral
/// symbol, evaluated at the fixture's instance.
struct Fixture {
  ParamMap overrides;
  std::size_t n = 0;
  std::size_t branch = 0;
  std::string polynomial;
  std::string provenance;  // "printed", "closed-form", "oracle" or "corrected"
  std::optional<std::string> printed;  // verbatim printed form when it had to be corrected
};

struct FamilyEntry {
  std::string id;
  std::string title;
  std::vector<FamilyParam> params;
  std::string spectral;
  std::string spectral_note;
  std::string lambda0;
  std::string s0;
  std::string expected_text;
  std::function<std::vector<Scalar>(const ParamMap&, std::size_t)> expected;
  /// Iteration index at which delta vanishes for the n-th solution (its degree).
  std::function<std::size_t(const ParamMap&, std::size_t, std::size_t)> aim_index;
  std::function<XRat(const ParamMap&, std::size_t)> printed_delta;  // spectral symbol kept symbolic
  std::string printed_delta_text;
  std::optional<std::string> delta_note;  // known mismatch between printed delta_n and the recursion
  std::vector<Fixture> fixtures;
  std::vector<std::string> notes;

  std::size_t branches() const { return expected ? expected(defaults(), 0).size() : 1; }
  ParamMap defaults() const {
    ParamMap m;
    for (const auto& p : params) m[p.name] = p.default_value;
    return m;
  }
  std::size_t index_for(const ParamMap& p, std::size_t n, std::size_t branch = 0) const {
    return aim_index ? aim_index(p, n, branch) : n;
  }
};

namespace detail {

inline XRat X() { return x_rational_variable(); }
inline XRat T() { return XRat(param_symbol()); }
inline XRat K(const Scalar& v) { return x_constant(v); }
inline XRat K(long v) { return x_constant(Scalar(v)); }

inline long as_long(const Scalar& v) { return v.numerator().get_si(); }

template <class F>
XRat product(long from, long to, F&& factor) {
  XRat acc = K(1);
  for (long i = from; i <= to; ++i) acc *= factor(i);
  return acc;
}

inline XRat sign_power(std::size_t e) { return K(e % 2 == 0 ? 1 : -1); }

inline std::vector<FamilyEntry> build_registry() {
  std::vector<FamilyEntry> r;
  auto nn = [](std::size_t n) { return Scalar(static_cast<long>(n)); };
  const XRat x2m1 = X() * X() - K(1);

  {
    FamilyEntry e;
    e.id = "cauchy_euler";
    e.title = "Cauchy-Euler type (shifted)";
    e.params = {{"alpha", Scalar(1, 2)}, {"a", Scalar(1)}, {"b", Scalar(2)}};
    e.spectral = "beta";
    e.lambda0 = "alpha*(x - b)/(x - a)^2";
    e.s0 = "beta/(x - a)^2";
    e.expected_text = "beta = n(n - 1 - alpha)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) - Scalar(1) - p.at("alpha"))};
    };
    e.printed_delta_text = "(-1)^(n+1)/(a-x)^(2n+2) * prod_{i=1}^{n} (beta + i(1 - i + alpha))";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      XRat pre = sign_power(n + 1) / power(K(p.at("a")) - X(), 2 * m + 2, 0);
      return pre * product(1, m, [&](long i) { return T() + K(i) * K(Scalar(1 - i) + p.at("alpha")); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x - b", "printed"},
        {{}, 2, 0, "(alpha - 1)*(alpha - 2)*x^2 + 2*(alpha - 1)*(2*a - alpha*b)*x + alpha^2*b^2 - a*(2*b + a)*alpha + 2*a^2",
         "printed"},
        {e.defaults(), 3, 0, "105*x^3 - 270*x^2 + 234*x - 68", "oracle"},
    };
    e.delta_note = "printed product starts at i = 1 and omits the factor beta (i = 0); engine delta_n = beta * printed";
    e.notes = {"the polynomial solutions are not an orthogonal sequence"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "hermite";
    e.title = "Hermite";
    e.spectral = "k";
    e.lambda0 = "2*x";
    e.s0 = "-2*k";
    e.expected_text = "k = n";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{nn(n)}; };
    e.printed_delta_text = "2^(n+1) * prod_{i=1}^{n} (k - i)";
    e.printed_delta = [](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return power(K(2), m + 1, 0) * product(1, m, [](long i) { return T() - K(i); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "2*x^2 - 1", "printed"},
        {{}, 3, 0, "2*x^3 - 3*x", "oracle"},
    };
    e.delta_note = "printed product starts at i = 1 and omits the factor k (i = 0); engine delta_n = k * printed";
    e.notes = {"y_2n and y_(2n+1) are printed as 1F1 closed forms; fixtures beyond y_2 come from the oracle"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "hermite_2b";
    e.title = "Hermite, shifted and scaled";
    e.params = {{"a", Scalar(2)}, {"b", Scalar(1)}};
    e.spectral = "c";
    e.lambda0 = "a*x + b";
    e.s0 = "c";
    e.expected_text = "c = -n a";
    e.expected = [nn](const ParamMap& p, std::size_t n) { return std::vector<Scalar>{-nn(n) * p.at("a")}; };
    e.printed_delta_text = "(-1)^(n+1) * prod_{i=0}^{n} (c + i a)";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      return sign_power(n + 1) * product(0, static_cast<long>(n), [&](long i) { return T() + K(i) * K(p.at("a")); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "a*x + b", "printed"},
        {{}, 2, 0, "(a*x + b)^2 - a", "printed"},
        {e.defaults(), 3, 0, "8*x^3 + 12*x^2 - 6*x - 5", "oracle"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "laguerre";
    e.title = "Laguerre";
    e.spectral = "a";
    e.lambda0 = "1 - 1/x";
    e.s0 = "a/x";
    e.expected_text = "a = -n";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{-nn(n)}; };
    e.printed_delta_text = "(-1)^(n+1)/x^(n+1) * prod_{i=0}^{n} (i + a)";
    e.printed_delta = [](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(X(), m + 1, 0) * product(0, m, [](long i) { return K(i) + T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x - 1", "printed"},
        {{}, 2, 0, "x^2 - 4*x + 2", "printed"},
        {{}, 3, 0, "x^3 - 9*x^2 + 18*x - 6", "oracle"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "confluent";
    e.title = "Confluent hypergeometric (Kummer)";
    e.params = {{"b", Scalar(2)}, {"c", Scalar(3)}};
    e.spectral = "a";
    e.lambda0 = "b - c/x";
    e.s0 = "a/x";
    e.expected_text = "a = -n b";
    e.expected = [nn](const ParamMap& p, std::size_t n) { return std::vector<Scalar>{-nn(n) * p.at("b")}; };
    e.printed_delta_text = "(-1)^(n+1)/x^(n+1) * prod_{i=0}^{n} (i b + a)";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(X(), m + 1, 0) *
             product(0, m, [&](long i) { return K(i) * K(p.at("b")) + T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "b*x - c", "printed"},
        {{}, 2, 0, "(1 + c)*c - 2*b*(1 + c)*x + b^2*x^2", "printed"},
        {e.defaults(), 3, 0, "2*x^3 - 15*x^2 + 30*x - 15", "oracle"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "hypergeometric";
    e.title = "Gauss hypergeometric";
    e.params = {{"b", Scalar(1, 2)}, {"c", Scalar(3, 2)}};
    e.spectral = "a";
    e.lambda0 = "((a + b + 1)*x - c)/(x*(1 - x))";
    e.s0 = "a*b/(x*(1 - x))";
    e.expected_text = "a = -n";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{-nn(n)}; };
    e.printed_delta_text = "1/(x^(n+1) (x-1)^(n+1)) * prod_{i=0}^{n} (a + i)(b + i)";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      XRat pre = K(1) / (power(X(), m + 1, 0) * power(X() - K(1), m + 1, 0));
      return pre * product(0, m, [&](long i) { return (T() + K(i)) * K(p.at("b") + Scalar(i)); });
    };
    e.fixtures = {
        {e.defaults(), 0, 0, "1", "oracle"},
        {e.defaults(), 1, 0, "x - 3", "oracle"},
        {e.defaults(), 2, 0, "3*x^2 - 10*x + 15", "oracle"},
        {e.defaults(), 3, 0, "5*x^3 - 21*x^2 + 35*x - 35", "oracle"},
    };
    e.notes = {"printed solutions y_1 = x + c, y_2 = 2x^2 + 4(c + 1)x + c(c + 1), y_n = (c)_n 2F1(-n, -n; c, x) do not "
               "satisfy this equation for generic b, c; fixtures come from the oracle",
               "the printed condition also allows b = -n (symmetry in a and b)"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "legendre";
    e.title = "Legendre";
    e.spectral = "m";
    e.lambda0 = "2*x/(1 - x^2)";
    e.s0 = "m*(m + 1)/(x^2 - 1)";
    e.expected_text = "m = n";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{nn(n)}; };
    e.printed_delta_text = "(-1)^n/(x^2-1)^(n+1) * prod_{i=0}^{n} (m^2 - i^2)";
    e.printed_delta = [x2m1](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n) / power(x2m1, m + 1, 0) * product(0, m, [](long i) { return T() * T() - K(i * i); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "3*x^2 - 1", "corrected", "-1 + x^2"},
        {{}, 3, 0, "5*x^3 - 3*x", "oracle"},
    };
    e.delta_note =
        "printed factors m^2 - i^2 do not match the recursion; engine delta_n = "
        "(-1)^(n+1)/(x^2-1)^(n+1) * prod_{i=0}^{n} (m(m+1) - i(i+1)), which also vanishes at m = -n-1";
    e.notes = {"printed y_2 = -1 + x^2 leaves residual -4 at m = 2; the solution is 3x^2 - 1"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "jacobi";
    e.title = "Jacobi";
    e.params = {{"alpha", Scalar(1)}, {"beta", Scalar(2)}};
    e.spectral = "gamma";
    e.lambda0 = "((alpha + beta + 2)*x + alpha - beta)/(1 - x^2)";
    e.s0 = "-gamma/(1 - x^2)";
    e.expected_text = "gamma = n(n + alpha + beta + 1)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) + p.at("alpha") + p.at("beta") + Scalar(1))};
    };
    e.printed_delta_text = "prod_{i=0}^{n} (i(i + 1 + alpha + beta) - gamma)";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      Scalar ab = p.at("alpha") + p.at("beta");
      return product(0, static_cast<long>(n), [&](long i) { return K(Scalar(i) * (Scalar(i + 1) + ab)) - T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "(alpha - beta) + (2 + alpha + beta)*x", "printed"},
        {e.defaults(), 2, 0, "7*x^2 - 2*x - 1", "oracle"},
        {e.defaults(), 3, 0, "21*x^3 - 7*x^2 - 7*x + 1", "oracle"},
    };
    e.delta_note = "printed form omits the factor 1/(x^2-1)^(n+1); engine delta_n = printed/(x^2-1)^(n+1)";
    e.notes = {"printed lambda0 numerator reads (alpha+beta+2)x + beta + alpha; the printed y_1 requires alpha - beta, "
               "which is used here",
               "printed y_2 ends in -4 - c - d + (c - d)^2 with c, d undefined; y_2 and y_3 come from the oracle"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "chebyshev1";
    e.title = "Chebyshev, first kind";
    e.spectral = "m";
    e.lambda0 = "x/(1 - x^2)";
    e.s0 = "-m/(1 - x^2)";
    e.expected_text = "m = n^2";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{nn(n) * nn(n)}; };
    e.printed_delta_text = "(-1)^(n+1)/(x^2-1)^(n+1) * prod_{i=0}^{n} (m - i^2)";
    e.printed_delta = [x2m1](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(x2m1, m + 1, 0) * product(0, m, [](long i) { return T() - K(i * i); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "2*x^2 - 1", "printed"},
        {{}, 3, 0, "4*x^3 - 3*x", "oracle"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "chebyshev2";
    e.title = "Chebyshev, second kind";
    e.spectral = "m";
    e.lambda0 = "3*x/(1 - x^2)";
    e.s0 = "-m/(1 - x^2)";
    e.expected_text = "m = n(n + 2)";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{nn(n) * (nn(n) + Scalar(2))}; };
    e.printed_delta_text = "-1/(x^2-1)^(n+1) * prod_{i=0}^{n} (i((i + 2) - m))";
    e.printed_delta = [x2m1](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return K(-1) / power(x2m1, m + 1, 0) * product(0, m, [](long i) { return K(i) * (K(i + 2) - T()); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "4*x^2 - 1", "printed"},
        {{}, 3, 0, "2*x^3 - x", "oracle"},
    };
    e.delta_note =
        "printed factor i((i+2) - m) vanishes at i = 0 for every m; with i(i+2) - m in its place the engine "
        "delta_n is -1 times the printed form";
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "gegenbauer";
    e.title = "Gegenbauer";
    e.params = {{"k", Scalar(1)}};
    e.spectral = "lambda";
    e.lambda0 = "(1 + 2*k)*x/(1 - x^2)";
    e.s0 = "-lambda/(1 - x^2)";
    e.expected_text = "lambda = n(n + 2k)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) + Scalar(2) * p.at("k"))};
    };
    e.printed_delta_text = "-1/(x^2-1)^(n+1) * prod_{i=0}^{n} (i(i + 2k) - lambda)";
    e.printed_delta = [x2m1](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return K(-1) / power(x2m1, m + 1, 0) *
             product(0, m, [&](long i) { return K(Scalar(i) * (Scalar(i) + Scalar(2) * p.at("k"))) - T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "2*(k + 1)*x^2 - 1", "printed"},
        {e.defaults(), 3, 0, "2*x^3 - x", "oracle"},
    };
    e.delta_note = "engine delta_n is -1 times the printed form";
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "hyperspherical";
    e.title = "Hyperspherical";
    e.params = {{"k", Scalar(1)}};
    e.spectral = "lambda";
    e.lambda0 = "2*(1 + k)*x/(1 - x^2)";
    e.s0 = "-lambda/(1 - x^2)";
    e.expected_text = "lambda = n(n + 1 + 2k)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) + Scalar(1) + Scalar(2) * p.at("k"))};
    };
    e.printed_delta_text = "-1/(x^2-1)^(n+1) * prod_{i=0}^{n} (i(i + 1 + 2k) - lambda)";
    e.printed_delta = [x2m1](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return K(-1) / power(x2m1, m + 1, 0) * product(0, m, [&](long i) {
               return K(Scalar(i) * (Scalar(i + 1) + Scalar(2) * p.at("k"))) - T();
             });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "(2*k + 3)*x^2 - 1", "printed"},
        {e.defaults(), 3, 0, "7*x^3 - 3*x", "oracle"},
    };
    e.delta_note = "engine delta_n is -1 times the printed form";
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "bessel";
    e.title = "Bessel polynomials";
    e.spectral = "gamma";
    e.lambda0 = "-2*(x + 1)/x^2";
    e.s0 = "gamma/x^2";
    e.expected_text = "gamma = n(n + 1)";
    e.expected = [nn](const ParamMap&, std::size_t n) { return std::vector<Scalar>{nn(n) * (nn(n) + Scalar(1))}; };
    e.printed_delta_text = "(-1)^(n+1)/x^(2n+2) * prod_{i=0}^{n} (gamma - i(i + 1))";
    e.printed_delta = [](const ParamMap&, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(X(), 2 * m + 2, 0) * product(0, m, [](long i) { return T() - K(i * (i + 1)); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "1 + x", "printed"},
        {{}, 2, 0, "1 + 3*x + 3*x^2", "printed"},
        {{}, 3, 0, "1 + 6*x + 15*x^2 + 15*x^3", "printed"},
    };
    e.notes = {"orthogonal in the quasi-definite sense"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "gen_bessel";
    e.title = "Generalized Bessel polynomials";
    e.params = {{"a", Scalar(3)}, {"b", Scalar(2)}};
    e.spectral = "gamma";
    e.lambda0 = "-(a*x + b)/x^2";
    e.s0 = "gamma/x^2";
    e.expected_text = "gamma = n(n + a - 1)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) + p.at("a") - Scalar(1))};
    };
    e.printed_delta_text = "(-1)^(n+1)/x^(2n+2) * prod_{i=0}^{n} (gamma - i(i - 1 + a))";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(X(), 2 * m + 2, 0) *
             product(0, m, [&](long i) { return T() - K(Scalar(i) * (Scalar(i - 1) + p.at("a"))); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "a*x + b", "printed"},
        {{}, 2, 0, "(a + 1)*(a + 2)*x^2 + 2*b*(a + 1)*x + b^2", "printed"},
        {{}, 3, 0, "(a + 2)*(a + 3)*(a + 4)*x^3 + 3*b*(a + 2)*(a + 3)*x^2 + 3*b^2*(2 + a)*x + b^3", "printed"},
    };
    e.notes = {"orthogonal in the quasi-definite sense"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "bochner";
    e.title = "Bochner equation (a x^2 + b x + c) y'' + (d x + e) y' - mu y = 0";
    e.params = {{"a", Scalar(1)}, {"b", Scalar(2)}, {"c", Scalar(1)}, {"d", Scalar(3)}, {"e", Scalar(1)}};
    e.spectral = "mu";
    e.lambda0 = "-(d*x + e)/(a*x^2 + b*x + c)";
    e.s0 = "mu/(a*x^2 + b*x + c)";
    e.expected_text = "mu = n(d + (n - 1) a)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (p.at("d") + (nn(n) - Scalar(1)) * p.at("a"))};
    };
    e.printed_delta_text = "-1/(a x^2 + b x + c)^(n+1) * prod_{k=0}^{n} (k(d + (k - 1) a) - mu)";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      XRat q = K(p.at("a")) * X() * X() + K(p.at("b")) * X() + K(p.at("c"));
      return K(-1) / power(q, m + 1, 0) *
             product(0, m, [&](long k) { return K(Scalar(k) * (p.at("d") + Scalar(k - 1) * p.at("a"))) - T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "d*x + e", "printed"},
        {{}, 2, 0, "(d + a)*(d + 2*a)*x^2 + 2*(b + e)*(d + a)*x + e*(b + e) + c*(d + 2*a)", "printed"},
        {{},
         3,
         0,
         "(d + 2*a)*(d + 3*a)*(d + 4*a)*x^3 + 3*(d + 2*a)*(d + 3*a)*(e + 2*b)*x^2"
         " + 3*(d + 2*a)*(b*(3*e + 2*b) + c*(4*a + d) + e^2)*x"
         " + 12*a*b*c + 4*d*b*c + e^3 + 3*d*e*c + 10*a*e*c + 2*e*b^2 + 3*e^2*b",
         "corrected",
         "(d + 2*a)*(d + 3*a)*(d + 4*a)*x^3 + 3*(d + 2*a)*(d + 3*a)*(e + 2*b)*x^2"
         " + 3*(d + 2*a)*(b*(3*e + 2*b) + c*(4*a + d) + e^2)*x"
         " + 4*d*b*c + e^3 + 3*d*e*c + 10*a*e*c + 2*e*b^2 + 3*e^2*b"},
    };
    e.delta_note = "engine delta_n is -1 times the printed form";
    e.notes = {"printed y_3 constant term lacks 12abc; it is exact only when a b c = 0"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "cauchy_euler_15";
    e.title = "Cauchy-Euler x^2 y'' - alpha x y' - beta y = 0";
    e.params = {{"alpha", Scalar(1, 2)}};
    e.spectral = "beta";
    e.lambda0 = "alpha/x";
    e.s0 = "beta/x^2";
    e.expected_text = "beta = n(n - 1 - alpha)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) - Scalar(1) - p.at("alpha"))};
    };
    e.printed_delta_text = "(-1)^(n+1)/x^(2n+2) * prod_{i=1}^{n} (beta + i(1 - i + alpha))";
    e.printed_delta = [](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return sign_power(n + 1) / power(X(), 2 * m + 2, 0) *
             product(1, m, [&](long i) { return T() + K(i) * K(Scalar(1 - i) + p.at("alpha")); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"}, {{}, 1, 0, "x", "printed"},     {{}, 2, 0, "x^2", "printed"},
        {{}, 3, 0, "x^3", "printed"}, {{}, 4, 0, "x^4", "printed"},
    };
    e.delta_note = "printed product starts at i = 1 and omits the factor beta (i = 0); engine delta_n = beta * printed";
    e.notes = {"the polynomial solutions x^n are not an orthogonal sequence"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "eq17";
    e.title = "(1 - x^2) y'' - a x y' + mu y = 0";
    e.params = {{"a", Scalar(1)}};
    e.spectral = "mu";
    e.lambda0 = "a*x/(1 - x^2)";
    e.s0 = "-mu/(1 - x^2)";
    e.expected_text = "mu = n(n + a - 1)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (nn(n) + p.at("a") - Scalar(1))};
    };
    e.printed_delta_text = "-1/(x^2-1)^(n+1) * prod_{i=0}^{n} (i(i + a - 1) - mu)";
    e.printed_delta = [x2m1](const ParamMap& p, std::size_t n) {
      long m = static_cast<long>(n);
      return K(-1) / power(x2m1, m + 1, 0) *
             product(0, m, [&](long i) { return K(Scalar(i) * (Scalar(i - 1) + p.at("a"))) - T(); });
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "x", "printed"},
        {{}, 2, 0, "(a + 1)*x^2 - 1", "printed"},
        {{}, 3, 0, "(a + 3)*x^3 - 3*x", "corrected", "(a + 1)*x^3 - 3*x"},
    };
    e.delta_note = "printed product mixes indices k and i; read with i, the engine delta_n is -1 times the printed form";
    e.notes = {"a = 1 gives Chebyshev I, a = 3 gives Chebyshev II",
               "printed y_3 = (a + 1)x^3 - 3x is a solution only for a = 1; the solution is (a + 3)x^3 - 3x"};
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "gen_laguerre";
    e.title = "Generalized Laguerre u'' = (a x^N - b/x) u' - a c x^(N-1) u";
    e.params = {{"N", Scalar(1), true}, {"a", Scalar(1)}, {"b", Scalar(1)}};
    e.spectral = "c";
    e.lambda0 = "a*x^N - b/x";
    e.s0 = "-a*c*x^N/x";
    e.expected_text = "c = n(N + 1)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      return std::vector<Scalar>{nn(n) * (p.at("N") + Scalar(1))};
    };
    e.aim_index = [](const ParamMap& p, std::size_t n, std::size_t) {
      return n * static_cast<std::size_t>(as_long(p.at("N")) + 1);
    };
    auto N = [](long v) { return ParamMap{{"N", Scalar(v)}}; };
    e.fixtures = {
        {N(1), 0, 0, "1", "printed"},
        {N(1), 1, 0, "1 + b - a*x^2", "printed"},
        {N(1), 2, 0, "3 + 4*b + b^2 - 2*a*(3 + b)*x^2 + a^2*x^4", "printed"},
        {N(2), 0, 0, "1", "printed"},
        {N(2), 1, 0, "2 + b - a*x^3", "printed"},
        {N(2), 2, 0, "10 + 7*b + b^2 - 2*a*(5 + b)*x^3 + a^2*x^6", "printed"},
        {N(3), 0, 0, "1", "printed"},
        {N(3), 1, 0, "3 + b - a*x^4", "printed"},
        {N(3), 2, 0, "21 + 10*b + b^2 - 2*a*(7 + b)*x^4 + a^2*x^8", "printed"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "gen_hermite";
    e.title = "Generalized Hermite u'' = a x^N u' - a c x^(N-1) u";
    e.params = {{"N", Scalar(1), true}, {"a", Scalar(1)}};
    e.spectral = "c";
    e.lambda0 = "a*x^N";
    e.s0 = "-a*c*x^N/x";
    e.expected_text = "c = n(N + 1) (even branch) or c = n(N + 1) + 1 (odd branch)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      Scalar base = nn(n) * (p.at("N") + Scalar(1));
      return std::vector<Scalar>{base, base + Scalar(1)};
    };
    e.aim_index = [](const ParamMap& p, std::size_t n, std::size_t branch) {
      return n * static_cast<std::size_t>(as_long(p.at("N")) + 1) + branch;
    };
    auto N = [](long v) { return ParamMap{{"N", Scalar(v)}}; };
    e.fixtures = {
        {N(1), 0, 0, "1", "closed-form"},
        {N(1), 1, 0, "a*x^2 - 1", "closed-form"},
        {N(1), 2, 0, "a^2*x^4 - 6*a*x^2 + 3", "closed-form"},
        {N(1), 0, 1, "x", "closed-form"},
        {N(1), 1, 1, "a*x^3 - 3*x", "closed-form"},
        {N(1), 2, 1, "a^2*x^5 - 10*a*x^3 + 15*x", "closed-form"},
        {N(2), 0, 0, "1", "closed-form"},
        {N(2), 1, 0, "a*x^3 - 2", "closed-form"},
        {N(2), 2, 0, "a^2*x^6 - 10*a*x^3 + 10", "closed-form"},
        {N(2), 0, 1, "x", "closed-form"},
        {N(2), 1, 1, "a*x^4 - 4*x", "closed-form"},
        {N(2), 2, 1, "a^2*x^7 - 14*a*x^4 + 28*x", "closed-form"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "theorem6";
    e.title = "u'' = (a x^N/(1 - s x^(N+1)) - b/x) u' - w x^(N-1)/(1 - s x^(N+1)) u";
    e.params = {{"N", Scalar(1), true}, {"s", Scalar(1)}, {"a", Scalar(2)}, {"b", Scalar(0)}};
    e.spectral = "w";
    e.lambda0 = "a*x^N/(1 - s*x*x^N) - b/x";
    e.s0 = "-w*x^N/x/(1 - s*x*x^N)";
    e.expected_text = "w = n(N + 1)(s(b - 1 + n(N + 1)) + a)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      Scalar np = nn(n) * (p.at("N") + Scalar(1));
      return std::vector<Scalar>{np * (p.at("s") * (p.at("b") - Scalar(1) + np) + p.at("a"))};
    };
    e.aim_index = [](const ParamMap& p, std::size_t n, std::size_t) {
      return n * static_cast<std::size_t>(as_long(p.at("N")) + 1);
    };
    ParamMap n2{{"N", Scalar(2)}};
    e.fixtures = {
        {{}, 0, 0, "1", "closed-form"},
        {{}, 1, 0, "3*x^2 - 1", "closed-form"},
        {{}, 2, 0, "35*x^4 - 30*x^2 + 3", "closed-form"},
        {n2, 1, 0, "2*x^3 - 1", "closed-form"},
        {n2, 2, 0, "7*x^6 - 7*x^3 + 1", "closed-form"},
    };
    r.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.id = "kratzer";
    e.title = "Kratzer potential, radial factor y(r) of psi = r^(gamma+1) e^(-alpha r) y(r)";
    e.params = {{"A", Scalar(2)}, {"gamma", Scalar(0)}};
    e.spectral = "alpha";
    e.spectral_note = "E = -alpha^2";
    e.lambda0 = "2*(alpha - (gamma + 1)/x)";
    e.s0 = "(-A + 2*alpha*(gamma + 1))/x";
    e.expected_text = "alpha = A/(2(n + gamma + 1)), E = -A^2/(4(n + gamma + 1)^2)";
    e.expected = [nn](const ParamMap& p, std::size_t n) {
      Scalar d = nn(n) + p.at("gamma") + Scalar(1);
      if (d.is_zero()) throw Error(ErrorKind::InadmissibleParams, "n + gamma + 1 must be nonzero");
      return std::vector<Scalar>{p.at("A") / (Scalar(2) * d)};
    };
    e.fixtures = {
        {{}, 0, 0, "1", "printed"},
        {{}, 1, 0, "2*alpha*x - 2*(gamma + 1)", "closed-form"},
        {{}, 2, 0, "(1 + 2*(gamma + 1))*2*(gamma + 1) - 4*alpha*(1 + 2*(gamma + 1))*x + 4*alpha^2*x^2", "closed-form"},
        {e.defaults(), 3, 0, "x^3 - 24*x^2 + 144*x - 192", "oracle"},
    };
    e.notes = {"fixtures are the confluent-form polynomials at a = 2 alpha, c = 2(gamma + 1)"};
    r.push_back(std::move(e));
  }
  return r;
}

}  // namespace detail

inline const std::vector<FamilyEntry>& registry() {
  static const std::vector<FamilyEntry> entries = detail::build_registry();
  return entries;
}

inline const FamilyEntry& find_family(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownFamily, "no family named '" + id + "'");
}

/// Family defaults overlaid with `overrides`; rejects unknown names and
/// non-integral values for integer parameters.
inline ParamMap resolve_params(const FamilyEntry& family, const ParamMap& overrides = {}) {
  ParamMap p = family.defaults();
  for (const auto& [name, value] : overrides) {
    if (name == family.spectral) continue;
    if (!p.count(name))
      throw Error(ErrorKind::InadmissibleParams, "family '" + family.id + "' has no parameter '" + name + "'");
    p[name] = value;
  }
  for (const auto& fp : family.params)
    if (fp.positive_integer && (!p[fp.name].is_integer() || p[fp.name].sign() <= 0))
      throw Error(ErrorKind::InadmissibleParams, fp.name + " must be a positive integer");
  if (family.id == "gen_laguerre" && p["a"].is_zero())
    throw Error(ErrorKind::InadmissibleParams, "gen_laguerre needs a != 0");
  if (family.id == "theorem6" && p["s"].is_zero())
    throw Error(ErrorKind::InadmissibleParams, "theorem6 needs s != 0");
  return p;
}

/// Non-fatal remarks about a parameter instance (degenerate but admitted).
inline std::vector<std::string> family_warnings(const FamilyEntry& family, const ParamMap& p) {
  std::vector<std::string> w;
  if (family.id == "jacobi" && (p.at("alpha") + p.at("beta") + Scalar(3)).is_zero())
    w.push_back("alpha + beta = -3: the degree-1 and degree-2 eigenvalues coincide");
  if (family.id == "gen_laguerre" && p.at("b").is_zero())
    w.push_back("b = 0 reduces to gen_hermite, which has a second (odd) branch");
  return w;
}

inline ParseOptions family_parse_options(const FamilyEntry& family, const ParamMap& params,
                                         const std::optional<Scalar>& spectral_value) {
  ParseOptions o;
  o.constants = params;
  if (spectral_value) o.constants[family.spectral] = *spectral_value;
  else o.parameter = family.spectral;
  return o;
}

inline EquationSpec make_equation(const FamilyEntry& family, const ParamMap& overrides = {},
                                  const std::optional<Scalar>& spectral_value = std::nullopt) {
  ParamMap p = resolve_params(family, overrides);
  auto opts = family_parse_options(family, p, spectral_value);
  EquationSpec eq;
  eq.lambda0 = parse_rational(family.lambda0, opts);
  eq.s0 = parse_rational(family.s0, opts);
  if (!spectral_value) eq.parameter = family.spectral;
  return eq;
}

inline EquationSpec make_equation(const std::string& id, const ParamMap& overrides = {},
                                  const std::optional<Scalar>& spectral_value = std::nullopt) {
  return make_equation(find_family(id), overrides, spectral_value);
}

inline std::vector<Scalar> expected_condition(const FamilyEntry& family, std::size_t n, const ParamMap& overrides = {}) {
  return family.expected(resolve_params(family, overrides), n);
}

inline std::vector<Scalar> expected_condition(const std::string& id, std::size_t n, const ParamMap& overrides = {}) {
  return expected_condition(find_family(id), n, overrides);
}

/// Parameters for a fixture: defaults, then caller overrides, then the
/// fixture's own pinned values.
inline ParamMap fixture_params(const FamilyEntry& family, const Fixture& fixture, const ParamMap& overrides = {}) {
  ParamMap merged = overrides;
  for (const auto& [k, v] : fixture.overrides) merged[k] = v;
  return resolve_params(family, merged);
}

inline Scalar fixture_spectral_value(const FamilyEntry& family, const Fixture& fixture, const ParamMap& params) {
  return family.expected(params, fixture.n).at(fixture.branch);
}

inline XPoly fixture_polynomial(const FamilyEntry& family, const Fixture& fixture, const ParamMap& params) {
  auto opts = family_parse_options(family, params, fixture_spectral_value(family, fixture, params));
  XRat f = parse_rational(fixture.polynomial, opts);
  if (!f.is_polynomial()) throw Error(ErrorKind::InvalidInput, "fixture is not a polynomial: " + fixture.polynomial);
  return f.numerator();
}

enum class DeltaAgreement { Equal, ConstantMultiple, Different };

inline std::string_view to_string(DeltaAgreement a) {
  switch (a) {
    case DeltaAgreement::Equal: return "equal";
    case DeltaAgreement::ConstantMultiple: return "constant-multiple";
    case DeltaAgreement::Different: return "different";
  }
  return "?";
}

struct DeltaComparison {
  std::string family;
  std::size_t n = 0;
  std::optional<Scalar> spectral_value;
  XRat engine;
  XRat printed;
  DeltaAgreement agreement = DeltaAgreement::Different;
  std::optional<XRat> ratio;  // engine / printed when the printed form is nonzero
  std::optional<std::string> note;
};

/// Compares delta_n from the recursion with the family's printed closed form,
/// either symbolically in the spectral parameter or at a rational instance.
inline DeltaComparison delta_closed_form_check(const FamilyEntry& family, std::size_t n, const ParamMap& overrides = {},
                                               const std::optional<Scalar>& spectral_value = std::nullopt,
                                               const AimConfig& config = {}) {
  if (!family.printed_delta)
    throw Error(ErrorKind::InvalidInput, "family '" + family.id + "' has no printed closed form for delta_n");
  ParamMap p = resolve_params(family, overrides);
  EquationSpec eq = make_equation(family, p, spectral_value);
  DeltaComparison c;
  c.family = family.id;
  c.n = n;
  c.spectral_value = spectral_value;
  c.engine = iterate(eq, n, config).steps[n].delta;
  c.printed = family.printed_delta(p, n);
  if (spectral_value) c.printed = substitute_param(c.printed, *spectral_value);
  c.note = family.delta_note;
  if (c.engine == c.printed) {
    c.agreement = DeltaAgreement::Equal;
  } else if (!c.printed.is_zero()) {
    c.ratio = c.engine / c.printed;
    c.agreement = (c.ratio->is_constant() && c.ratio->constant_value().is_constant() && !c.ratio->is_zero())
                      ? DeltaAgreement::ConstantMultiple
                      : DeltaAgreement::Different;
  }
  return c;
}

inline DeltaComparison delta_closed_form_check(const std::string& id, std::size_t n, const ParamMap& overrides = {},
                                               const std::optional<Scalar>& spectral_value = std::nullopt,
                                               const AimConfig& config = {}) {
  return delta_closed_form_check(find_family(id), n, overrides, spectral_value, config);
}

// ---------------------------------------------------------------------------
// Kratzer potential -A/r + gamma(gamma+1)/r^2

struct KratzerSpec {
  Scalar A;
  Scalar gamma;
  std::size_t n = 0;
};

struct KratzerReduction {
  EquationSpec equation;  // confluent form with alpha symbolic
  Scalar predicted_alpha;
  Scalar predicted_energy;
};

inline Scalar kratzer_energy(const Scalar& alpha) { return -(alpha * alpha); }

inline KratzerReduction kratzer_reduce(const KratzerSpec& spec) {
  Scalar d = Scalar(static_cast<long>(spec.n)) + spec.gamma + Scalar(1);
  if (d.is_zero()) throw Error(ErrorKind::InadmissibleParams, "n + gamma + 1 must be nonzero");
  ParamMap p{{"A", spec.A}, {"gamma", spec.gamma}};
  KratzerReduction out;
  out.equation = make_equation("kratzer", p);
  out.predicted_alpha = spec.A / (Scalar(2) * d);
  out.predicted_energy = -(spec.A * spec.A) / (Scalar(4) * d * d);
  return out;
}

}  // namespace aimpoly
