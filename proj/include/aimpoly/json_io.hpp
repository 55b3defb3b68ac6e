#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "aimpoly/aim.hpp"
#include "aimpoly/catalog.hpp"
#include "aimpoly/error.hpp"
#include "aimpoly/expr.hpp"
#include "aimpoly/solution.hpp"

namespace aimpoly {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json coefficient_list(const XPoly& p) {
  Json out = Json::array();
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(to_text(p[k].constant_value()));
  return out;
}

}  // namespace detail

inline Json to_json(const Scalar& v) { return v.to_string(); }

inline Json to_json(const EquationSpec& eq) {
  Symbols sym{eq.variable, eq.parameter.value_or("t")};
  return {{"variable", eq.variable},
          {"parameter", detail::optional_json(eq.parameter)},
          {"lambda0", to_text(eq.lambda0, sym)},
          {"s0", to_text(eq.s0, sym)}};
}

inline Json to_json(const AimTrace& trace, const Symbols& sym = {}) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& st = trace.steps[k];
    steps.push_back({{"n", k},
                     {"lambda", to_text(st.lambda, sym)},
                     {"s", to_text(st.s, sym)},
                     {"delta", to_text(st.delta, sym)},
                     {"delta_zero", st.delta.is_zero()},
                     {"side_condition_ok", st.side_condition_ok}});
  }
  return {{"terminated_at", detail::optional_json(trace.terminated_at)}, {"steps", std::move(steps)}};
}

inline Json to_json(const EigenCondition& ec, const Symbols& sym = {}) {
  Json roots = Json::array();
  Json mult = Json::array();
  for (const auto& r : ec.roots.roots) {
    roots.push_back(r.value.to_string());
    mult.push_back(r.multiplicity);
  }
  return {{"n", ec.n},
          {"identically_satisfied", ec.identically_satisfied},
          {"condition_poly", ec.identically_satisfied ? Json(nullptr) : Json(to_text(ec.condition_poly, sym.parameter))},
          {"rational_roots", std::move(roots)},
          {"multiplicities", std::move(mult)},
          {"residual_factor",
           ec.identically_satisfied ? Json(nullptr) : Json(to_text(ec.roots.residual_factor, sym.parameter))},
          {"delta", to_text(ec.delta, sym)}};
}

inline Json to_json(const PolySolution& s, const Symbols& sym = {}) {
  return {{"polynomial", to_text(s.y, sym)},
          {"coefficients", detail::coefficient_list(s.y)},
          {"degree", s.degree},
          {"normalization", std::string(to_string(s.normalization))},
          {"method", std::string(to_string(s.method))},
          {"residual_zero", s.residual_zero}};
}

inline Json to_json(const SolutionBasis& b, const Symbols& sym = {}) {
  Json sols = Json::array();
  for (const auto& s : b.solutions) sols.push_back(to_json(s, sym));
  return {{"dimension", b.dimension()}, {"solutions", std::move(sols)}};
}

inline Json to_json(const VerifyReport& r, const Symbols& sym = {}) {
  return {{"residual_zero", r.residual_zero},
          {"residual", to_text(r.residual, sym)},
          {"cleared", to_text(r.cleared, sym)}};
}

inline Json to_json(const CrossCheckReport& r, const Symbols& sym = {}) {
  return {{"n", r.n}, {"consistent", r.consistent}, {"aim", to_json(r.aim, sym)}, {"oracle", to_json(r.oracle, sym)}};
}

inline Json to_json(const SolveOutcome& o, const Symbols& sym = {}) {
  Json out = {{"verdict", std::string(to_string(o.verdict))},
              {"terminated_at", detail::optional_json(o.terminated_at)},
              {"side_condition_ok", o.side_condition_ok},
              {"solutions", to_json(o.solutions, sym)}};
  out["cross_check"] = o.cross ? to_json(*o.cross, sym) : Json(nullptr);
  return out;
}

inline Json to_json(const DeltaComparison& c, const Symbols& sym = {}) {
  return {{"family", c.family},
          {"n", c.n},
          {"spectral_value", c.spectral_value ? Json(c.spectral_value->to_string()) : Json(nullptr)},
          {"engine", to_text(c.engine, sym)},
          {"printed", to_text(c.printed, sym)},
          {"agreement", std::string(to_string(c.agreement))},
          {"ratio", c.ratio ? Json(to_text(*c.ratio, sym)) : Json(nullptr)},
          {"note", detail::optional_json(c.note)}};
}

inline Json to_json(const ParamMap& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = v.to_string();
  return out;
}

inline Json to_json(const Fixture& f) {
  Json out = {{"n", f.n},
              {"branch", f.branch},
              {"params", to_json(f.overrides)},
              {"polynomial", f.polynomial},
              {"provenance", f.provenance}};
  if (f.printed) out["printed"] = *f.printed;
  return out;
}

inline Json to_json(const FamilyEntry& e) {
  Json params = Json::array();
  for (const auto& p : e.params)
    params.push_back({{"name", p.name}, {"default", p.default_value.to_string()}, {"integer", p.positive_integer}});
  Json fixtures = Json::array();
  for (const auto& f : e.fixtures) fixtures.push_back(to_json(f));
  Json out = {{"id", e.id},
              {"title", e.title},
              {"params", std::move(params)},
              {"spectral_param", e.spectral},
              {"spectral_note", e.spectral_note},
              {"lambda0", e.lambda0},
              {"s0", e.s0},
              {"expected_condition", e.expected_text},
              {"branches", e.branches()},
              {"printed_delta", e.printed_delta ? Json(e.printed_delta_text) : Json(nullptr)},
              {"delta_note", detail::optional_json(e.delta_note)},
              {"fixtures", std::move(fixtures)},
              {"notes", e.notes}};
  return out;
}

inline Json catalog_json() {
  Json families = Json::array();
  for (const auto& e : registry()) families.push_back(to_json(e));
  return {{"schema", "aimpoly-catalog/1"}, {"families", std::move(families)}};
}

inline Json to_json(const Error& e) {
  Json out = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    out["offset"] = se->offset();
    out["expected"] = se->expected();
  }
  return out;
}

}  // namespace aimpoly
