// Command-line front end: check, eigen, table, solve, verify, catalog.

#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aimpoly/aimpoly.hpp"

namespace {

using namespace aimpoly;

enum ExitCode {
  kOk = 0,
  kResidualNonzero = 1,
  kUsage = 2,
  kNoTermination = 3,
  kBlowup = 4,
  kInconsistent = 5,
  kDomain = 6,
};

enum class Format { Text, Latex, Json };

struct Options {
  std::size_t n_max = 24;
  std::size_t degree_cap = 512;
  std::string format = "text";
  std::string normalization = "primitive";
  std::optional<std::string> param;
  std::optional<std::string> family;
  std::vector<std::string> sets;
  bool approx = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::MultipleParameters:
    case ErrorKind::UnknownFamily:
    case ErrorKind::InadmissibleParams:
    case ErrorKind::InvalidInput: return kUsage;
    case ErrorKind::IterateBlowup: return kBlowup;
    case ErrorKind::InconsistentMethods: return kInconsistent;
    default: return kDomain;
  }
}

Format format_of(const Options& o) {
  if (o.format == "latex") return Format::Latex;
  if (o.format == "json") return Format::Json;
  return Format::Text;
}

AimConfig config_of(const Options& o) {
  if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (o.degree_cap < o.n_max) throw UsageError("--degree-cap must be at least --n-max");
  return {o.n_max, o.degree_cap};
}

Normalization normalization_of(const Options& o) {
  return o.normalization == "monic" ? Normalization::Monic : Normalization::Primitive;
}

/// Each "-" argument consumes the next line of standard input.
std::string read_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(std::cin, line)) throw UsageError("expected an expression on standard input");
  return line;
}

Scalar parse_value(const std::string& text) {
  XRat v = parse_rational(text);
  if (!v.is_constant() || !v.constant_value().is_constant())
    throw UsageError("value '" + text + "' is not a rational constant");
  return v.constant_value().constant_value();
}

ParamMap parse_sets(const std::vector<std::string>& sets) {
  ParamMap out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    out[s.substr(0, eq)] = parse_value(s.substr(eq + 1));
  }
  return out;
}

std::string approx_text(const Scalar& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v.to_double());
  return buf;
}

std::string scalar_text(const Scalar& v, bool approx) {
  return approx && !v.is_integer() ? v.to_string() + " (~ " + approx_text(v) + ")" : v.to_string();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

/// Label/value lines rendered as plain text or a standalone LaTeX document;
/// JSON output is built alongside and printed instead when requested.
class Report {
 public:
  explicit Report(Format format) : format_(format) {}

  void title(std::string t) { title_ = std::move(t); }
  void line(std::string label, std::string text, std::optional<std::string> latex = std::nullopt) {
    lines_.push_back({std::move(label), std::move(text), std::move(latex)});
  }
  void raw_latex(std::string block) { latex_blocks_.push_back(std::move(block)); }
  Json& json() { return json_; }

  void print(std::ostream& os) const {
    if (format_ == Format::Json) {
      os << json_.dump(2) << "\n";
      return;
    }
    if (format_ == Format::Text) {
      for (const auto& l : lines_) os << (l.label.empty() ? "" : l.label + ": ") << l.text << "\n";
      return;
    }
    os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
    if (!title_.empty()) os << "\\section*{" << latex_escape(title_) << "}\n";
    if (!lines_.empty()) {
      os << "\\begin{description}\n";
      for (const auto& l : lines_) {
        os << "\\item[" << latex_escape(l.label) << "] ";
        if (l.latex) os << "$" << *l.latex << "$";
        else os << "\\texttt{" << latex_escape(l.text) << "}";
        os << "\n";
      }
      os << "\\end{description}\n";
    }
    for (const auto& b : latex_blocks_) os << b;
    os << "\\end{document}\n";
  }

 private:
  struct Line {
    std::string label;
    std::string text;
    std::optional<std::string> latex;
  };
  Format format_;
  std::string title_;
  std::vector<Line> lines_;
  std::vector<std::string> latex_blocks_;
  Json json_ = Json::object();
};

// ---------------------------------------------------------------------------
// Equation assembly

struct Problem {
  EquationSpec eq;
  Symbols sym;
  const FamilyEntry* family = nullptr;
  ParamMap params;
  std::optional<Scalar> spectral_value;
};

/// Equation from --family (with --set overrides) or from two expressions.
/// A value for the parameter symbol in --set instantiates it.
Problem build_problem(const Options& o, const std::vector<std::string>& exprs, std::optional<std::size_t> degree,
                      std::size_t branch = 0) {
  Problem p;
  ParamMap sets = parse_sets(o.sets);
  if (o.family) {
    if (!exprs.empty()) throw UsageError("--family takes no coefficient expressions");
    p.family = &find_family(*o.family);
    p.params = resolve_params(*p.family, sets);
    p.sym.parameter = p.family->spectral;
    if (auto it = sets.find(p.family->spectral); it != sets.end()) p.spectral_value = it->second;
    else if (degree) p.spectral_value = p.family->expected(p.params, *degree).at(branch);
    p.eq = make_equation(*p.family, p.params, p.spectral_value);
    return p;
  }
  if (exprs.size() != 2) throw UsageError("expected LAMBDA0 and S0 expressions (or --family)");
  ParseOptions po;
  po.parameter = o.param;
  std::string l = read_arg(exprs[0]);
  std::string s = read_arg(exprs[1]);
  EquationSpec symbolic = parse_equation(l, s, po);
  if (symbolic.parameter) {
    p.sym.parameter = *symbolic.parameter;
    if (auto it = sets.find(*symbolic.parameter); it != sets.end()) {
      p.spectral_value = it->second;
      p.eq = instantiate(symbolic, it->second);
      return p;
    }
  }
  p.eq = symbolic;
  return p;
}

void describe_equation(Report& r, const Problem& p) {
  const EquationSpec& eq = p.eq;
  Symbols sym = p.sym;
  r.line("equation", "y'' = (" + to_text(eq.lambda0, sym) + ") y' + (" + to_text(eq.s0, sym) + ") y",
         "y'' = \\left(" + to_latex(eq.lambda0, sym) + "\\right) y' + \\left(" + to_latex(eq.s0, sym) + "\\right) y");
  if (p.family) r.line("family", p.family->id);
  if (p.spectral_value) r.line(p.sym.parameter, p.spectral_value->to_string(), to_latex(*p.spectral_value));
  r.json()["equation"] = to_json(eq);
  if (p.family) {
    r.json()["family"] = p.family->id;
    r.json()["params"] = to_json(p.params);
  }
  if (p.spectral_value) r.json()["spectral_value"] = p.spectral_value->to_string();
}

void describe_solutions(Report& r, const SolutionBasis& basis, const Symbols& sym) {
  for (std::size_t i = 0; i < basis.solutions.size(); ++i) {
    const auto& s = basis.solutions[i];
    std::string label = basis.solutions.size() == 1 ? "y" : "y[" + std::to_string(i) + "]";
    r.line(label, to_text(s.y, sym), to_latex(s.y, sym));
    r.line("  method", std::string(to_string(s.method)) + ", " + std::string(to_string(s.normalization)) +
                           ", residual " + (s.residual_zero ? "zero" : "nonzero"));
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_check(const Options& o, const std::vector<std::string>& exprs, std::optional<std::size_t> n, std::size_t branch,
              bool full) {
  Report r(format_of(o));
  r.title(full ? "solve" : "check");
  Problem p = build_problem(o, exprs, n, branch);
  if (p.eq.is_parametric())
    throw UsageError("equation depends on '" + p.sym.parameter + "'; give a value with --set " + p.sym.parameter +
                     "=VALUE or use eigen");
  describe_equation(r, p);
  SolveOutcome out = solve(p.eq, config_of(o), normalization_of(o));
  Symbols sym = p.sym;
  r.json()["outcome"] = to_json(out, sym);
  if (!out.terminated_at) {
    r.line("terminated at", "none through n_max = " + std::to_string(o.n_max));
    r.line("verdict", std::string(to_string(out.verdict)));
    r.print(std::cout);
    return kNoTermination;
  }
  std::size_t k = *out.terminated_at;
  r.line("terminated at", "n = " + std::to_string(k));
  r.line("side condition", out.side_condition_ok ? "ok" : "violated (lambda_n lambda_{n-1} = 0)");
  r.line("verdict", std::string(to_string(out.verdict)));
  if (full) {
    r.json()["trace"] = to_json(out.trace, sym);
    if (out.side_condition_ok) {
      XRat a = alpha(out.trace, k);
      r.line("alpha", to_text(a, sym), to_latex(a, sym));
      r.json()["alpha"] = to_text(a, sym);
    }
    if (out.cross) {
      r.line("alpha route", to_text(out.cross->aim.y, sym), to_latex(out.cross->aim.y, sym));
      r.line("oracle dimension", std::to_string(out.cross->oracle.dimension()));
      r.line("consistent", out.cross->consistent ? "yes" : "no");
    }
  }
  describe_solutions(r, out.solutions, sym);
  bool all_zero = !out.solutions.solutions.empty();
  for (const auto& s : out.solutions.solutions) all_zero = all_zero && s.residual_zero;
  r.line("residual", all_zero ? "zero" : "nonzero");
  r.print(std::cout);
  return all_zero ? kOk : kResidualNonzero;
}

void eigen_lines(Report& r, const EigenCondition& ec, const Problem& p, bool approx) {
  const std::string& t = p.sym.parameter;
  std::string prefix = "n = " + std::to_string(ec.n);
  if (ec.identically_satisfied) {
    r.line(prefix, "delta vanishes for every " + t);
    return;
  }
  r.line(prefix + " condition", to_text(ec.condition_poly, t), to_latex(ec.condition_poly, t));
  std::string roots;
  std::string latex;
  for (const auto& root : ec.roots.roots) {
    roots += (roots.empty() ? "" : ", ") + scalar_text(root.value, approx);
    latex += (latex.empty() ? "" : ",\\ ") + to_latex(root.value);
    if (root.multiplicity > 1) {
      roots += " (x" + std::to_string(root.multiplicity) + ")";
      latex += "^{(" + std::to_string(root.multiplicity) + ")}";
    }
  }
  r.line(prefix + " rational roots", roots.empty() ? "none" : roots, latex.empty() ? "\\emptyset" : latex);
  r.line(prefix + " residual factor", to_text(ec.roots.residual_factor, t), to_latex(ec.roots.residual_factor, t));
  if (p.family && p.family->id == "kratzer") {
    std::string energies;
    for (const auto& root : ec.roots.roots)
      energies += (energies.empty() ? "" : ", ") + scalar_text(kratzer_energy(root.value), approx);
    r.line(prefix + " E = -alpha^2", energies.empty() ? "none" : energies);
  }
}

Json eigen_json(const EigenCondition& ec, const Problem& p) {
  Json j = to_json(ec, p.sym);
  if (p.family && p.family->id == "kratzer") {
    Json e = Json::array();
    for (const auto& root : ec.roots.roots) e.push_back(kratzer_energy(root.value).to_string());
    j["energies"] = std::move(e);
  }
  return j;
}

int cmd_eigen(const Options& o, const std::vector<std::string>& exprs, std::optional<std::size_t> n, bool spectrum) {
  Report r(format_of(o));
  r.title("eigen");
  AimConfig cfg = config_of(o);
  Problem p = build_problem(o, exprs, std::nullopt);
  if (!p.eq.is_parametric()) throw UsageError("eigen needs an equation with exactly one parameter symbol");
  describe_equation(r, p);
  r.json()["parameter"] = p.sym.parameter;
  if (spectrum) {
    AimTrace trace = iterate(p.eq, cfg.n_max, cfg);
    Json rows = Json::array();
    for (std::size_t k = 0; k < trace.size(); ++k) {
      EigenCondition ec = eigen_condition_from_delta(trace.steps[k].delta, k);
      eigen_lines(r, ec, p, o.approx);
      rows.push_back(eigen_json(ec, p));
    }
    r.json()["spectrum"] = std::move(rows);
  } else {
    if (!n) throw UsageError("eigen needs --n or --spectrum");
    EigenCondition ec = eigen_condition(p.eq, *n, cfg);
    eigen_lines(r, ec, p, o.approx);
    if (p.family && p.family->id == "kratzer") {
      KratzerReduction kr = kratzer_reduce({p.params.at("A"), p.params.at("gamma"), *n});
      r.line("predicted alpha", scalar_text(kr.predicted_alpha, o.approx));
      r.line("predicted E", scalar_text(kr.predicted_energy, o.approx));
      r.json()["predicted"] = {{"alpha", kr.predicted_alpha.to_string()}, {"E", kr.predicted_energy.to_string()}};
    }
    r.json()["condition"] = eigen_json(ec, p);
  }
  r.print(std::cout);
  return kOk;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args) {
  Report r(format_of(o));
  r.title("verify");
  if (args.empty()) throw UsageError("verify needs a polynomial");
  std::vector<std::string> exprs(args.begin(), args.end() - 1);
  Problem p = build_problem(o, exprs, std::nullopt);
  if (p.eq.is_parametric())
    throw UsageError("equation depends on '" + p.sym.parameter + "'; give a value with --set " + p.sym.parameter +
                     "=VALUE");
  XRat y = parse_rational(read_arg(args.back()));
  if (!y.is_polynomial() || !is_param_free(y)) throw UsageError("candidate must be a polynomial in x");
  describe_equation(r, p);
  VerifyReport v = verify(p.eq, y.numerator());
  r.line("y", to_text(y.numerator(), p.sym), to_latex(y.numerator(), p.sym));
  r.line("residual", v.residual_zero ? "zero" : to_text(v.residual, p.sym),
         v.residual_zero ? std::string("0") : to_latex(v.residual, p.sym));
  r.json()["y"] = to_text(y.numerator(), p.sym);
  r.json()["report"] = to_json(v, p.sym);
  r.print(std::cout);
  return v.residual_zero ? kOk : kResidualNonzero;
}

// --- table ------------------------------------------------------------------

struct TableRow {
  std::string family;
  std::size_t n = 0;
  std::size_t branch = 0;
  std::size_t index = 0;
  std::string spectral;
  Scalar expected;
  bool condition_found = false;
  std::string polynomial;
  std::string fixture;
  std::string provenance;
  bool polynomial_ok = false;
  std::vector<std::string> notes;
  std::string status;
  std::string error;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t v = std::stoul(text);
      return {v, v};
    }
    std::size_t lo = std::stoul(text.substr(0, dots));
    std::size_t hi = std::stoul(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like 0..3, got '" + text + "'");
  }
}

const Fixture* find_fixture(const FamilyEntry& f, const ParamMap& params, std::size_t n, std::size_t branch) {
  for (const auto& fx : f.fixtures)
    if (fx.n == n && fx.branch == branch && fixture_params(f, fx, params) == params) return &fx;
  return nullptr;
}

TableRow table_row(const FamilyEntry& f, const ParamMap& params, std::size_t n, std::size_t branch,
                   const AimConfig& cfg, Normalization how) {
  TableRow row;
  row.family = f.id;
  row.n = n;
  row.branch = branch;
  row.spectral = f.spectral;
  try {
    row.index = f.index_for(params, n, branch);
    row.expected = f.expected(params, n).at(branch);
    EigenCondition ec = eigen_condition(make_equation(f, params), row.index, cfg);
    row.condition_found = ec.identically_satisfied || ec.roots.contains(row.expected);

    EquationSpec eq = make_equation(f, params, row.expected);
    SolveOutcome out = solve(eq, cfg, how);
    const Fixture* fx = find_fixture(f, params, n, branch);
    if (fx) {
      XPoly want = fixture_polynomial(f, *fx, params);
      row.fixture = to_text(normalize(want, how));
      row.provenance = fx->provenance;
      if (fx->printed) row.notes.push_back("printed form " + *fx->printed + " is not a solution; fixture corrected");
    }
    for (const auto& s : out.solutions.solutions) {
      if (!s.residual_zero) continue;
      if (row.polynomial.empty()) row.polynomial = to_text(s.y);
      if (fx && proportional(s.y, fixture_polynomial(f, *fx, params))) {
        row.polynomial = to_text(s.y);
        row.polynomial_ok = true;
      }
    }
    if (!fx) row.polynomial_ok = out.verdict == Verdict::AimVerified && !row.polynomial.empty();

    if (f.printed_delta && row.index == n) {
      DeltaComparison dc = delta_closed_form_check(f, n, params, std::nullopt, cfg);
      if (dc.agreement != DeltaAgreement::Equal) {
        if (dc.note) row.notes.push_back("delta_n: " + *dc.note);
        else row.error = "engine delta_n differs from the printed form";
      }
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  bool ok = row.error.empty() && row.condition_found && row.polynomial_ok;
  row.status = ok ? "PASS" : "FAIL";
  return row;
}

std::vector<TableRow> table_family(const FamilyEntry& f, const ParamMap& params, std::size_t lo, std::size_t hi,
                                   const AimConfig& cfg, Normalization how) {
  std::vector<TableRow> rows;
  for (std::size_t n = lo; n <= hi; ++n)
    for (std::size_t b = 0; b < f.branches(); ++b) rows.push_back(table_row(f, params, n, b, cfg, how));
  return rows;
}

Json row_json(const TableRow& r) {
  return {{"family", r.family},
          {"n", r.n},
          {"branch", r.branch},
          {"index", r.index},
          {"spectral_param", r.spectral},
          {"expected", r.expected.to_string()},
          {"condition_found", r.condition_found},
          {"polynomial", r.polynomial},
          {"fixture", r.fixture.empty() ? Json(nullptr) : Json(r.fixture)},
          {"provenance", r.provenance.empty() ? Json(nullptr) : Json(r.provenance)},
          {"polynomial_ok", r.polynomial_ok},
          {"status", r.status},
          {"notes", r.notes},
          {"error", r.error.empty() ? Json(nullptr) : Json(r.error)}};
}

int cmd_table(const Options& o, const std::string& which, const std::string& range) {
  AimConfig cfg = config_of(o);
  Normalization how = normalization_of(o);
  auto [lo, hi] = parse_range(range);
  ParamMap sets = parse_sets(o.sets);
  std::vector<const FamilyEntry*> families;
  if (which == "all") {
    if (!sets.empty()) throw UsageError("--set applies to a single family");
    for (const auto& f : registry()) families.push_back(&f);
  } else {
    families.push_back(&find_family(which));
  }

  std::vector<std::future<std::vector<TableRow>>> jobs;
  for (const auto* f : families) {
    ParamMap params = resolve_params(*f, sets);
    jobs.push_back(std::async(families.size() > 1 ? std::launch::async : std::launch::deferred,
                              [f, params, lo = lo, hi = hi, cfg, how] { return table_family(*f, params, lo, hi, cfg, how); }));
  }
  std::vector<TableRow> rows;
  for (auto& j : jobs)
    for (auto& r : j.get()) rows.push_back(std::move(r));

  std::size_t failures = 0;
  for (const auto& r : rows) failures += r.status == "FAIL";
  Format fmt = format_of(o);
  if (fmt == Format::Json) {
    Json out = {{"range", {lo, hi}}, {"rows", Json::array()}, {"failures", failures}};
    for (const auto& r : rows) out["rows"].push_back(row_json(r));
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Format::Text) {
    for (const auto& r : rows) {
      std::ostringstream line;
      line << r.family << " n=" << r.n;
      if (r.branch) line << " branch=" << r.branch;
      line << "  " << r.spectral << " = " << r.expected.to_string() << " [" << (r.condition_found ? "found" : "missing")
           << "]  y = " << (r.polynomial.empty() ? "-" : r.polynomial);
      if (!r.fixture.empty()) line << " [" << (r.polynomial_ok ? "matches " : "differs from ") << r.provenance << "]";
      line << "  " << r.status;
      if (!r.notes.empty()) line << " NOTE";
      std::cout << line.str() << "\n";
      for (const auto& note : r.notes) std::cout << "    NOTE " << note << "\n";
      if (!r.error.empty()) std::cout << "    error: " << r.error << "\n";
    }
    std::cout << rows.size() << " rows, " << failures << " FAIL\n";
  } else {
    Report rep(Format::Latex);
    rep.title("table " + which + " " + range);
    std::ostringstream t;
    t << "\\begin{tabular}{llllll}\nfamily & $n$ & condition & polynomial & status & note\\\\\n\\hline\n";
    for (const auto& r : rows) {
      t << latex_escape(r.family) << " & " << r.n << " & $" << detail::latex_symbol(r.spectral) << " = "
        << to_latex(r.expected) << "$ & \\texttt{" << latex_escape(r.polynomial) << "} & " << r.status << " & "
        << (r.notes.empty() ? "" : "NOTE") << "\\\\\n";
    }
    t << "\\end{tabular}\n";
    rep.raw_latex(t.str());
    rep.print(std::cout);
  }
  return failures == 0 ? kOk : kResidualNonzero;
}

int cmd_catalog(const Options& o) {
  Format fmt = format_of(o);
  if (fmt == Format::Json) {
    std::cout << catalog_json().dump(2) << "\n";
    return kOk;
  }
  Report r(fmt);
  r.title("catalog");
  for (const auto& e : registry()) {
    ParamMap p = e.defaults();
    EquationSpec eq = make_equation(e, p);
    Symbols sym{"x", e.spectral};
    std::string params;
    for (const auto& [k, v] : p) params += (params.empty() ? "" : ", ") + k + "=" + v.to_string();
    r.line(e.id, e.title + (params.empty() ? "" : " [" + params + "]"));
    r.line("  lambda0", to_text(eq.lambda0, sym), to_latex(eq.lambda0, sym));
    r.line("  s0", to_text(eq.s0, sym), to_latex(eq.s0, sym));
    r.line("  condition", e.expected_text);
  }
  r.print(std::cout);
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n-max", o.n_max, "Largest iteration index to try")->capture_default_str();
  sub->add_option("--degree-cap", o.degree_cap, "Abort when an iterate exceeds this degree")->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  sub->add_option("--normalization", o.normalization, "Polynomial normalization")
      ->check(CLI::IsMember({"primitive", "monic"}))
      ->capture_default_str();
  sub->add_option("--param", o.param, "Name of the spectral parameter symbol");
  sub->add_option("--family", o.family, "Use a catalog family instead of expressions");
  sub->add_option("--set", o.sets, "Parameter value, name=value (repeatable)")->allow_extra_args(false);
  sub->add_flag("--approx", o.approx, "Print decimal approximations next to exact values");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial solutions of y'' = lambda0(x) y' + s0(x) y by the asymptotic iteration method"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> exprs;
  std::optional<std::size_t> n;
  std::size_t branch = 0;
  bool spectrum = false;
  std::string which;
  std::string range = "0..3";

  auto* check = app.add_subcommand("check", "Find the first n with delta_n = 0 and build the solution");
  add_common(check, o);
  check->allow_extras()->footer("Arguments: LAMBDA0 S0 (use - to read one from stdin)");
  check->add_option("--n", n, "With --family: degree whose predicted eigenvalue is used");
  check->add_option("--branch", branch, "With --family: eigenvalue branch");

  auto* solve_cmd = app.add_subcommand("solve", "Like check, with the alpha route and oracle cross-check");
  add_common(solve_cmd, o);
  solve_cmd->allow_extras()->footer("Arguments: LAMBDA0 S0 (use - to read one from stdin)");
  solve_cmd->add_option("--n", n, "With --family: degree whose predicted eigenvalue is used");
  solve_cmd->add_option("--branch", branch, "With --family: eigenvalue branch");

  auto* eigen = app.add_subcommand("eigen", "Condition on the parameter for delta_n = 0");
  add_common(eigen, o);
  eigen->allow_extras()->footer("Arguments: LAMBDA0 S0 with one parameter symbol");
  eigen->add_option("--n", n, "Iteration index");
  eigen->add_flag("--spectrum", spectrum, "Report every n = 0..n_max");

  auto* verify_cmd = app.add_subcommand("verify", "Residual of a candidate polynomial");
  add_common(verify_cmd, o);
  verify_cmd->allow_extras()->footer("Arguments: [LAMBDA0 S0] Y");

  auto* table = app.add_subcommand("table", "Reproduce catalog conditions and polynomials");
  add_common(table, o);
  table->add_option("target", which, "Family id or 'all'")->required();
  table->add_option("range", range, "Degrees, e.g. 0..3")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "List the built-in families");
  add_common(catalog, o);

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i)
    if (std::string_view(argv[i]) != "--") args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  // Coefficients such as "-m/(1-x^2)" look like short options, so they are
  // collected as extras in their original order.
  for (auto* sub : {check, solve_cmd, eigen, verify_cmd})
    if (sub->parsed()) exprs = sub->remaining();

  Format fmt = format_of(o);
  try {
    if (check->parsed()) return cmd_check(o, exprs, n, branch, false);
    if (solve_cmd->parsed()) return cmd_check(o, exprs, n, branch, true);
    if (eigen->parsed()) return cmd_eigen(o, exprs, n, spectrum);
    if (verify_cmd->parsed()) return cmd_verify(o, exprs);
    if (table->parsed()) return cmd_table(o, which, range);
    if (catalog->parsed()) return cmd_catalog(o);
  } catch (const UsageError& e) {
    if (fmt == Format::Json) std::cout << Json{{"error", "Usage"}, {"message", e.what()}}.dump(2) << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (fmt == Format::Json) std::cout << to_json(e).dump(2) << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}
