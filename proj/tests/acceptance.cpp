// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aimpoly/aimpoly.hpp"
#include "support/hypergeometric.hpp"
#include "support/properties.hpp"

using namespace aimpoly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failure reasons and informational notes for one criterion.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }

  template <class F>
  void run(F&& body) {
    try {
      body(*this);
    } catch (const Error& e) {
      failures_.push_back(std::string("unexpected error: ") + e.what());
    }
  }

  bool passed() const { return failures_.empty() && checks_ > 0; }

  void print() const {
    std::cout << "criterion " << number_ << ": " << (passed() ? "PASS" : "FAIL") << "  " << title_ << " ("
              << checks_ << " checks";
    if (!failures_.empty()) std::cout << ", " << failures_.size() << " failed";
    std::cout << ")\n";
    for (std::size_t i = 0; i < failures_.size() && i < 8; ++i) std::cout << "    fail: " << failures_[i] << "\n";
    for (const auto& n : notes_) std::cout << "    note: " << n << "\n";
  }

 private:
  int number_;
  std::string title_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string params_text(const ParamMap& p) {
  std::string out = "(";
  for (const auto& [k, v] : p) out += (out.size() > 1 ? ", " : "") + k + "=" + v.to_string();
  return out + ")";
}

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Solution built through the alpha route at the family's n-th eigenvalue, checked against the oracle.
CrossCheckReport build(const FamilyEntry& f, const ParamMap& p, std::size_t n, std::size_t branch = 0) {
  auto eq = make_equation(f, p, f.expected(p, n).at(branch));
  return cross_check(eq, f.index_for(p, n, branch));
}

XPoly printed_polynomial(const FamilyEntry& f, const Fixture& fx, const ParamMap& p) {
  Fixture printed = fx;
  if (fx.printed) printed.polynomial = *fx.printed;
  return fixture_polynomial(f, printed, p);
}

const Fixture* fixture_for(const FamilyEntry& f, std::size_t n, const ParamMap& match = {}) {
  for (const auto& fx : f.fixtures) {
    if (fx.n != n) continue;
    bool ok = true;
    for (const auto& [k, v] : match) {
      auto it = fx.overrides.find(k);
      ok = ok && (it == fx.overrides.end() || it->second == v);
    }
    if (ok) return &fx;
  }
  return nullptr;
}

// 1. Bochner equation: spectrum and printed y_1..y_3.
Criterion bochner() {
  Criterion c(1, "Bochner spectrum mu_n = n(d + (n - 1)a) and printed y_1..y_3");
  c.run([](Criterion& c) {
    const auto& f = find_family("bochner");
    std::vector<ParamMap> instances = {
        {{"a", 1}, {"b", 0}, {"c", 0}, {"d", 3}, {"e", 0}},
        {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 3}, {"e", 1}},
        {{"a", 0}, {"b", 1}, {"c", 0}, {"d", 2}, {"e", 1}},
    };
    for (const auto& inst : instances) {
      auto start = Clock::now();
      ParamMap p = resolve_params(f, inst);
      auto eq = make_equation(f, p);
      for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<Scalar> expected;
        for (std::size_t k = 0; k <= n; ++k) expected.push_back(f.expected(p, k).at(0));
        auto roots = eigen_condition(eq, n).rational_roots();
        c.require(roots == sorted_unique(expected),
                  "roots at " + params_text(inst) + " n=" + std::to_string(n) + " differ from k(d + (k - 1)a)");
      }
      for (std::size_t n = 1; n <= 3; ++n) {
        auto report = build(f, p, n);
        const Fixture* fx = fixture_for(f, n);
        XPoly printed = printed_polynomial(f, *fx, p);
        c.require(report.consistent, "construction inconsistent at " + params_text(inst) + " n=" + std::to_string(n));
        c.require(proportional(report.aim.y, printed),
                  "y_" + std::to_string(n) + " at " + params_text(inst) + ": constructed " + to_text(report.aim.y) +
                      ", printed " + to_text(printed));
      }
      double t = seconds_since(start);
      c.require(t < 1.0, "instance " + params_text(inst) + " took " + std::to_string(t) + " s");
    }
    c.note("the printed y_3 constant term lacks 12abc; it matches only when abc = 0");
  });
  return c;
}

// 2. Classical rows: every eigen condition contains the predicted value for n = 0..4.
Criterion classical_conditions() {
  Criterion c(2, "classical families, predicted conditions for n = 0..4");
  c.run([](Criterion& c) {
    const std::vector<std::string> rows = {"cauchy_euler", "hermite",    "hermite_2b", "laguerre",       "confluent",
                                           "hypergeometric", "legendre", "jacobi",     "chebyshev1",     "chebyshev2",
                                           "gegenbauer",   "hyperspherical", "bessel", "gen_bessel"};
    for (const auto& id : rows) {
      const auto& f = find_family(id);
      ParamMap p = resolve_params(f);
      auto eq = make_equation(f, p);
      for (std::size_t n = 0; n <= 4; ++n) {
        auto ec = eigen_condition(eq, n);
        c.require(ec.roots.contains(f.expected(p, n).at(0)),
                  id + " n=" + std::to_string(n) + " misses " + f.expected(p, n).at(0).to_string());
      }
    }
    auto hermite = delta_closed_form_check("hermite", 1);
    if (hermite.agreement != DeltaAgreement::Equal)
      c.note("hermite: engine delta_1 = " + to_text(hermite.engine, {"x", "k"}) + ", printed " +
             to_text(hermite.printed, {"x", "k"}) + " (printed product omits the factor k)");
  });
  return c;
}

// 3. Classical rows: printed polynomials reproduced by both construction routes.
Criterion classical_polynomials() {
  Criterion c(3, "classical families, printed polynomials via alpha route and oracle");
  c.run([](Criterion& c) {
    const std::vector<std::string> rows = {"cauchy_euler", "hermite",    "hermite_2b", "laguerre",       "confluent",
                                           "hypergeometric", "legendre", "jacobi",     "chebyshev1",     "chebyshev2",
                                           "gegenbauer",   "hyperspherical", "bessel", "gen_bessel"};
    std::size_t skipped = 0;
    for (const auto& id : rows) {
      const auto& f = find_family(id);
      for (const auto& fx : f.fixtures) {
        if (fx.provenance == "oracle") {
          ++skipped;
          continue;
        }
        ParamMap p = fixture_params(f, fx);
        XPoly printed = printed_polynomial(f, fx, p);
        auto eq = make_equation(f, p, fixture_spectral_value(f, fx, p));
        auto degree = static_cast<std::size_t>(std::max(0, printed.degree()));
        auto basis = oracle_nullspace(eq, degree);
        bool oracle_ok = false;
        for (const auto& s : basis.solutions) oracle_ok = oracle_ok || proportional(s.y, printed);
        auto report = cross_check(eq, f.index_for(p, fx.n, fx.branch));
        std::string label = id + " y_" + std::to_string(fx.n) + " printed " + to_text(printed);
        c.require(oracle_ok, label + ": oracle gives " + (basis.solutions.empty() ? "nothing" : to_text(basis.solutions[0].y)));
        c.require(proportional(report.aim.y, printed), label + ": alpha route gives " + to_text(report.aim.y));
      }
    }
    c.note(std::to_string(skipped) + " oracle-generated fixtures (hypergeometric row, Jacobi y_2, unprinted y_3) not compared");
  });
  return c;
}

// 4. Generalized Laguerre: termination exactly at c = n(N+1) and the printed solution lists.
Criterion gen_laguerre_family() {
  Criterion c(4, "generalized Laguerre, c = n(N + 1)");
  c.run([](Criterion& c) {
    const auto& f = find_family("gen_laguerre");
    for (auto [N, a, b] : {std::tuple{1L, 1L, 1L}, std::tuple{2L, 1L, 2L}, std::tuple{3L, 2L, 3L}}) {
      ParamMap p = resolve_params(f, {{"N", N}, {"a", a}, {"b", b}});
      const auto span = static_cast<std::size_t>(N + 1);
      AimConfig cfg{3 * span + 1, 512};
      for (std::size_t n = 0; n <= 2; ++n) {
        std::string tag = "(N,a,b)=(" + std::to_string(N) + "," + std::to_string(a) + "," + std::to_string(b) +
                          ") n=" + std::to_string(n);
        const std::size_t target = n * span;
        for (std::size_t cv = 0; cv <= 3 * span; ++cv) {
          auto trace = scan_termination(make_equation(f, p, Scalar(static_cast<long>(cv))), cfg);
          bool fires_here = trace.terminated_at && *trace.terminated_at == target;
          c.require(fires_here == (cv == target),
                    tag + " c=" + std::to_string(cv) + (fires_here ? " terminates at " : " does not terminate at ") +
                        std::to_string(target));
        }
        auto report = build(f, p, n);
        const Fixture* fx = fixture_for(f, n, {{"N", Scalar(N)}});
        XPoly printed = fixture_polynomial(f, *fx, p);
        c.require(report.consistent && proportional(report.aim.y, printed),
                  tag + ": constructed " + to_text(report.aim.y) + ", printed " + to_text(printed));
      }
    }
  });
  return c;
}

// 5. Generalized Hermite: both branches with their parity structure.
Criterion gen_hermite_family() {
  Criterion c(5, "generalized Hermite, both branches");
  c.run([](Criterion& c) {
    const auto& f = find_family("gen_hermite");
    for (long N : {1L, 2L}) {
      ParamMap p = resolve_params(f, {{"N", N}});
      const auto span = static_cast<std::size_t>(N + 1);
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t branch = 0; branch <= 1; ++branch) {
          std::string tag = "N=" + std::to_string(N) + " n=" + std::to_string(n) + " branch=" + std::to_string(branch);
          Scalar cv = f.expected(p, n).at(branch);
          c.require(cv == Scalar(static_cast<long>(n * span + branch)), tag + ": condition " + cv.to_string());
          auto eq = make_equation(f, p, cv);
          auto trace = scan_termination(eq);
          c.require(trace.terminated_at.has_value(), tag + ": no termination");
          if (!trace.terminated_at) continue;
          auto basis = oracle_nullspace(eq, n * span + branch);
          c.require(basis.dimension() == 1, tag + ": oracle dimension " + std::to_string(basis.dimension()));
          if (basis.dimension() != 1) continue;
          const XPoly& y = basis.solutions[0].y;
          bool structured = y.degree() == static_cast<int>(n * span + branch);
          for (std::size_t k = 0; k < y.size(); ++k)
            if (!y[k].is_zero()) structured = structured && (k % span == branch);
          c.require(structured, tag + ": " + to_text(y) + " lacks the expected parity structure");
          support::QPoly z = support::monomial(p.at("a") / Scalar(N + 1), span);
          support::QPoly closed =
              branch == 0 ? support::terminating(n, {}, {Scalar(N) / Scalar(N + 1)}, z)
                          : support::monomial(Scalar(1), 1) * support::terminating(n, {}, {Scalar(N + 2) / Scalar(N + 1)}, z);
          c.require(proportional(y, support::lift(closed)), tag + ": differs from the 1F1 closed form");
          auto report = cross_check(eq, *trace.terminated_at);
          c.require(report.consistent, tag + ": alpha route not confirmed");
        }
      }
    }
  });
  return c;
}

// 6. Mixed-power family: w = n(N+1)(s(b - 1 + n(N+1)) + a).
Criterion mixed_power_family() {
  Criterion c(6, "mixed-power family, w = n(N+1)(s(b-1+n(N+1))+a)");
  c.run([](Criterion& c) {
    const auto& f = find_family("theorem6");
    for (auto [N, s, a, b] : {std::tuple{1L, 1L, 2L, 0L}, std::tuple{1L, 1L, 1L, 0L}, std::tuple{2L, 1L, 2L, 0L}}) {
      ParamMap p = resolve_params(f, {{"N", N}, {"s", s}, {"a", a}, {"b", b}});
      auto eq = make_equation(f, p);
      for (long n = 0; n <= 2; ++n) {
        std::string tag = params_text(p) + " n=" + std::to_string(n);
        Scalar w(n * (N + 1) * (s * (b - 1 + n * (N + 1)) + a));
        c.require(f.expected(p, static_cast<std::size_t>(n)).at(0) == w, tag + ": registry formula disagrees");
        auto idx = f.index_for(p, static_cast<std::size_t>(n));
        c.require(eigen_condition(eq, idx).roots.contains(w), tag + ": w=" + w.to_string() + " not a root");
        auto inst = make_equation(f, p, w);
        auto report = cross_check(inst, idx);
        c.require(report.consistent && verify(inst, report.aim.y).residual_zero,
                  tag + ": constructed " + to_text(report.aim.y) + " fails verification");
      }
    }
  });
  return c;
}

// 7. Kratzer energies.
Criterion kratzer() {
  Criterion c(7, "Kratzer energies E = -A^2/(4(n+gamma+1)^2)");
  c.run([](Criterion& c) {
    const auto& f = find_family("kratzer");
    ParamMap p = resolve_params(f, {{"A", 2}, {"gamma", 0}});
    auto eq = make_equation(f, p);
    const std::vector<Scalar> energies = {Scalar(-1), Scalar(-1, 4), Scalar(-1, 9), Scalar(-1, 16)};
    std::vector<Scalar> previous;
    for (std::size_t n = 0; n <= 3; ++n) {
      auto roots = eigen_condition(eq, n).rational_roots();
      std::vector<Scalar> fresh;
      for (const auto& r : roots)
        if (std::find(previous.begin(), previous.end(), r) == previous.end()) fresh.push_back(r);
      previous = roots;
      c.require(fresh.size() == 1, "n=" + std::to_string(n) + ": expected one new root, got " +
                                       std::to_string(fresh.size()));
      if (fresh.size() != 1) continue;
      Scalar alpha = fresh[0];
      Scalar energy = kratzer_energy(alpha);
      c.require(energy == energies[n], "n=" + std::to_string(n) + ": E=" + energy.to_string());
      c.require(energy == kratzer_reduce({Scalar(2), Scalar(0), n}).predicted_energy,
                "n=" + std::to_string(n) + ": closed form disagrees");
      auto inst = make_equation(f, p, alpha);
      auto report = cross_check(inst, n);
      c.require(report.consistent && verify(inst, report.aim.y).residual_zero,
                "n=" + std::to_string(n) + ": eigenfunction factor fails verification");
    }
  });
  return c;
}

// 8. lambda0 = 0: x^2 y'' = 2y.
Criterion vanishing_lambda() {
  Criterion c(8, "lambda0 = 0 path for x^2 y'' = 2y");
  c.run([](Criterion& c) {
    auto eq = parse_equation("0", "2/x^2");
    auto out = solve(eq);
    c.require(out.terminated_at && *out.terminated_at == 2, "termination index");
    c.require(out.verdict == Verdict::AimVerified, std::string("verdict ") + std::string(to_string(out.verdict)));
    c.require(out.solutions.dimension() == 1 && out.solutions.solutions[0].y == XPoly::monomial(ParamRat(Scalar(1)), 2),
              "solution is not exactly x^2");
    auto trace = iterate(eq, 12);
    std::size_t compared = 0;
    for (std::size_t k = 0; k <= 12; ++k) {
      auto q = quotient_test(trace, k, QuotientForm::LambdaOverS);
      if (!q) continue;
      ++compared;
      c.require(*q == trace.steps[k].delta.is_zero(), "quotient test disagrees at step " + std::to_string(k));
    }
    c.require(compared == 12, "quotient test defined at " + std::to_string(compared) + " of 12 steps");
  });
  return c;
}

// 9. Property suites.
Criterion properties() {
  Criterion c(9, "property suites");
  c.run([](Criterion& c) {
    auto start = Clock::now();
    std::vector<support::SuiteResult> suites = {
        support::algebra_laws(20261015, 10000), support::method_agreement(), support::round_trip(7, 1200),
        support::termination_equivalence()};
    for (const auto& s : suites) {
      std::string msg = s.name + ": " + std::to_string(s.failed) + " of " + std::to_string(s.cases) + " cases failed";
      if (!s.failures.empty()) msg += " (" + s.failures.front() + ")";
      c.require(s.ok(), msg);
      c.note(s.name + ": " + std::to_string(s.cases) + " cases");
    }
    c.require(suites[0].cases >= 10000, "fewer than 10^4 algebra cases");
    c.require(suites[2].cases >= 1000, "fewer than 10^3 round trips");
    double t = seconds_since(start);
    c.require(t < 60.0, "suites took " + std::to_string(t) + " s");
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "suites ran in " << t << " s";
    c.note(os.str());
  });
  return c;
}

}  // namespace

int main() {
  std::vector<std::function<Criterion()>> all = {bochner,      classical_conditions,   classical_polynomials,        gen_laguerre_family, gen_hermite_family,
                                                 mixed_power_family,  kratzer,     vanishing_lambda, properties};
  int failed = 0;
  for (const auto& run : all) {
    Criterion c = run();
    c.print();
    std::cout.flush();
    failed += c.passed() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
