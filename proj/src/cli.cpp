#include "fejer/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fejer/applications.hpp"
#include "fejer/battery.hpp"
#include "fejer/bounds.hpp"
#include "fejer/error.hpp"
#include "fejer/hconvexity.hpp"
#include "fejer/io.hpp"
#include "fejer/mapping.hpp"
#include "fejer/quadrature.hpp"

namespace fejer::cli {

namespace {

/// Input problem attributable to one named field.
class FieldError : public Error {
 public:
  FieldError(const std::string& field, const std::string& what) : Error(field + ": " + what) {}
};

enum class Format { Json, Text, Csv };

struct Outcome {
  fejer::Json json;
  std::vector<BoundReport> reports;  // drives text and csv when `table` is empty
  std::string text;                  // extra text lines
  std::string table;                 // csv override
  bool satisfied = true;
};

std::string key_of(const std::string& flag) {
  std::string k = flag;
  for (auto& c : k)
    if (c == '-') c = '_';
  return k;
}

// Merged settings: config file values overridden by explicitly given flags.
class Settings {
 public:
  void load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FieldError("config", "cannot open '" + path + "'");
    fejer::Json j;
    try {
      j = fejer::Json::parse(in);
    } catch (const std::exception& e) {
      throw FieldError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FieldError("config", "top-level value must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "tolerances" || it.key() == "problem") {
        if (!it.value().is_object()) throw FieldError(it.key(), "must be an object");
        for (auto t = it.value().begin(); t != it.value().end(); ++t) values_[key_of(t.key())] = t.value();
      } else {
        values_[key_of(it.key())] = it.value();
      }
    }
  }

  void set(const std::string& key, fejer::Json v) { values_[key] = std::move(v); }
  bool has(const std::string& key) const { return values_.count(key) && !values_.at(key).is_null(); }

  std::optional<std::string> string(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = values_.at(key);
    if (!v.is_string()) throw FieldError(key, "must be a string");
    return v.get<std::string>();
  }

  std::optional<double> number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = values_.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      char* end = nullptr;
      const double d = std::strtod(s.c_str(), &end);
      if (!s.empty() && end == s.c_str() + s.size() && std::isfinite(d)) return d;
    }
    throw FieldError(key, "must be a finite number");
  }

  std::optional<int> integer(const std::string& key) const {
    const auto d = number(key);
    if (!d) return std::nullopt;
    if (std::trunc(*d) != *d || std::fabs(*d) > 1e9) throw FieldError(key, "must be an integer");
    return static_cast<int>(*d);
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const auto& v = values_.at(key);
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string()) return v.get<std::string>() == "true";
    throw FieldError(key, "must be a boolean");
  }

  const fejer::Json* raw(const std::string& key) const { return has(key) ? &values_.at(key) : nullptr; }

  std::string require_string(const std::string& key) const {
    auto v = string(key);
    if (!v) throw FieldError(key, "is required");
    return *v;
  }

  double require_number(const std::string& key) const {
    auto v = number(key);
    if (!v) throw FieldError(key, "is required");
    return *v;
  }

 private:
  std::map<std::string, fejer::Json> values_;
};

template <class F>
auto field(const std::string& name, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const FieldError&) {
    throw;
  } catch (const Error& e) {
    throw FieldError(name, e.what());
  }
}

Expression expression_field(const Settings& s, const std::string& key, const std::string& fallback = "") {
  auto text = s.string(key);
  if (!text) {
    if (fallback.empty()) throw FieldError(key, "is required");
    text = fallback;
  }
  return field(key, [&] { return Expression::parse(*text); });
}

std::optional<Expression> optional_expression(const Settings& s, const std::string& key) {
  auto text = s.string(key);
  if (!text || text->empty()) return std::nullopt;
  return field(key, [&] { return Expression::parse(*text); });
}

HKernel kernel_field(const Settings& s, const std::string& fallback) {
  const fejer::Json* raw = s.raw("kernel");
  if (raw && raw->is_object()) return field("kernel", [&] { return kernel_from_json(*raw); });
  const std::string text = raw ? s.require_string("kernel") : fallback;
  return field("kernel", [&] { return HKernel::parse(text); });
}

QuadratureSettings quadrature_settings(const Settings& s) {
  QuadratureSettings q;
  if (auto v = s.number("abs_tol")) q.abs_tol = *v;
  if (auto v = s.number("rel_tol")) q.rel_tol = *v;
  if (auto v = s.integer("max_depth")) q.max_depth = *v;
  field("tolerances", [&] {
    q.validate();
    return 0;
  });
  return q;
}

ProblemSpec problem_field(const Settings& s, const std::string& default_f = "") {
  const Expression f = expression_field(s, "f", default_f);
  auto fprime = optional_expression(s, "fprime");
  const Expression g = expression_field(s, "g", "1");
  const double a = s.require_number("a");
  const double b = s.require_number("b");
  if (!(a < b)) throw FieldError("b", "interval requires a < b");
  return ProblemSpec::make(f, std::move(fprime), g, a, b);
}

fejer::Json problem_json(const ProblemSpec& p) {
  return fejer::Json{{"f", p.f().to_string()},
                     {"fprime", p.fprime() ? fejer::Json(p.fprime()->to_string()) : fejer::Json(nullptr)},
                     {"g", p.g().to_string()},
                     {"a", p.a()},
                     {"b", p.b()},
                     {"g_symmetric", p.g_symmetric()},
                     {"g_nonnegative", p.g_nonnegative()}};
}

fejer::Json reports_json(const std::vector<BoundReport>& reports) {
  fejer::Json arr = fejer::Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

bool all_satisfied(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.satisfied) return false;
  return true;
}

/// A defect check: satisfied iff measured <= tolerance.
BoundReport defect_report(const std::string& label, double defect, double tolerance) {
  return BoundReport::make(label, defect, tolerance, 0.0);
}

// ---- commands ---------------------------------------------------------------

Outcome cmd_verify_lemma(const Settings& s, const QuadratureSettings& q) {
  const ProblemSpec p = problem_field(s, "x^2");
  const int grid = s.integer("grid").value_or(101);
  const int sup_samples = s.integer("sup_samples").value_or(kDefaultSupSamples);
  const double holder_p = s.number("p").value_or(2.0);
  const auto pq = field("p", [&] { return ConjugateExponents::from_p(holder_p); });
  if (grid < 2) throw FieldError("grid", "must be >= 2");

  Outcome o;
  std::vector<std::string> skipped;
  const bool symmetric = p.g_symmetric();
  const bool nonnegative = p.g_nonnegative();
  if (symmetric) {
    o.reports.push_back(defect_report("lemma_i_symmetric_form", m_symmetric_form_defect(p, grid, q), 1e-8));
    o.reports.push_back(defect_report("lemma_ii_antisymmetry", m_antisymmetry_defect(p, grid, q), 1e-8));
  } else {
    skipped.emplace_back("lemma_i_symmetric_form: g is not symmetric");
    skipped.emplace_back("lemma_ii_antisymmetry: g is not symmetric");
  }
  if (symmetric && nonnegative) {
    o.reports.push_back(defect_report("lemma_iii_sign", m_sign_violation(p, grid, q), 1e-10));
    o.reports.push_back(m_bound_sup(p, q, sup_samples));
    o.reports.push_back(m_bound_holder(p, pq, q));
  } else {
    skipped.emplace_back("lemma_iii_sign and lemma_iv: g must be symmetric and nonnegative");
  }
  o.reports.push_back(defect_report("lemma_v_identity", lemma_identity_defect(p, q), 1e-7));
  if (symmetric)
    o.reports.push_back(defect_report("lemma_v_mirrored_identity", mirrored_identity_defect(p, q), 1e-7));
  else
    skipped.emplace_back("lemma_v_mirrored_identity: g is not symmetric");

  if (auto path = s.string("mplot")) {
    const int mgrid = s.integer("mplot_grid").value_or(101);
    field("mplot", [&] {
      emit_mplot(p, mgrid, *path, q);
      return 0;
    });
  }

  o.satisfied = all_satisfied(o.reports);
  o.json = fejer::Json{{"command", "verify-lemma"},
                       {"problem", problem_json(p)},
                       {"checks", reports_json(o.reports)},
                       {"skipped", skipped},
                       {"all_satisfied", o.satisfied}};
  for (const auto& line : skipped) o.text += "skipped " + line + "\n";
  return o;
}

Outcome cmd_bound(const Settings& s, const QuadratureSettings& q) {
  const ProblemSpec p = problem_field(s);
  const std::string variant = s.string("variant").value_or("h-convex");
  const int sup_samples = s.integer("sup_samples").value_or(kDefaultSupSamples);
  Outcome o;

  auto guarded = [&](auto&& compute) {
    try {
      return compute();
    } catch (const SymmetryViolationError& e) {
      throw FieldError("g", e.what());
    } catch (const NonIntegrableKernelError& e) {
      throw FieldError("kernel", e.what());
    }
  };

  if (variant == "fejer") {
    const auto t = fejer_triple(p, q);
    o.json = to_json(t);
    o.satisfied = t.left_holds && t.right_holds;
    o.reports.push_back(BoundReport::make("fejer_left", t.lhs, t.mid));
    o.reports.push_back(BoundReport::make("fejer_right", t.mid, t.rhs));
    return o;
  }

  const HKernel h = kernel_field(s, "power:1");
  auto add_h = [&] { o.reports.push_back(guarded([&] { return bound_h_convex(p, h, q); })); };
  auto add_mirror = [&] { o.reports.push_back(guarded([&] { return bound_h_convex_mirror(p, h, q); })); };
  auto add_s = [&] {
    const double sv = s.require_number("s");
    o.reports.push_back(guarded([&] { return field("s", [&] { return bound_s_convex(p, sv, q); }); }));
  };
  auto add_convex = [&] {
    o.reports.push_back(guarded([&] { return bound_convex_left(p, q); }));
    o.reports.push_back(guarded([&] { return bound_convex_right(p, q); }));
  };
  auto add_bounded = [&] {
    const DerivBounds d{s.require_number("m"), s.require_number("M")};
    const auto pq = field("p", [&] { return ConjugateExponents::from_p(s.number("p").value_or(2.0)); });
    const auto r = field("m", [&] { return bound_bounded_derivative(p, d, pq, q, sup_samples); });
    o.reports.insert(o.reports.end(), {r.primary, r.sup_form, r.holder_form});
  };
  auto add_lipschitz = [&] {
    const LipschitzConstant L{s.require_number("K")};
    const auto r = field("K", [&] { return bound_lipschitz(p, L, q, sup_samples); });
    o.reports.insert(o.reports.end(), {r.primary, r.sup_form});
  };

  if (variant == "h-convex") {
    add_h();
  } else if (variant == "mirror") {
    add_mirror();
  } else if (variant == "s-convex") {
    add_s();
  } else if (variant == "convex") {
    add_convex();
  } else if (variant == "convex-left") {
    o.reports.push_back(guarded([&] { return bound_convex_left(p, q); }));
  } else if (variant == "convex-right") {
    o.reports.push_back(guarded([&] { return bound_convex_right(p, q); }));
  } else if (variant == "bounded-derivative") {
    add_bounded();
  } else if (variant == "lipschitz") {
    add_lipschitz();
  } else if (variant == "reference") {
    o.reports.push_back(guarded([&] { return bound_reference_convex(p, q); }));
  } else if (variant == "all") {
    add_h();
    add_mirror();
    add_convex();
    if (s.has("s")) add_s();
    if (s.has("m") && s.has("M")) add_bounded();
    if (s.has("K")) add_lipschitz();
  } else {
    throw FieldError("variant", "unknown variant '" + variant + "'");
  }

  o.satisfied = all_satisfied(o.reports);
  o.json = o.reports.size() == 1 ? to_json(o.reports.front()) : reports_json(o.reports);
  return o;
}

Partition partition_field(const Settings& s, const ProblemSpec& p) {
  if (const fejer::Json* raw = s.raw("partition")) {
    if (raw->is_array()) return field("partition", [&] { return partition_from_json(*raw); });
    const std::string text = s.require_string("partition");
    std::vector<double> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (item.empty() || end != item.c_str() + item.size())
        throw FieldError("partition", "'" + item + "' is not a number");
      pts.push_back(v);
    }
    return field("partition", [&] { return Partition(std::move(pts)); });
  }
  const int n = s.integer("n").value_or(1);
  return field("n", [&] { return Partition::uniform(p.a(), p.b(), n); });
}

Outcome cmd_quad(const Settings& s, const QuadratureSettings& q) {
  const ProblemSpec p = problem_field(s);
  const HKernel h = kernel_field(s, "power:1");
  field("kernel", [&] {
    h.require_integrable(q);
    return 0;
  });

  Outcome o;
  std::optional<Partition> P;
  fejer::Json extra = fejer::Json::object();
  if (s.flag("adaptive")) {
    const double tol = s.require_number("tol");
    const int max_intervals = s.integer("max_intervals").value_or(4096);
    const auto r = field("tol", [&] { return adaptive_refine(p, h, tol, max_intervals, q); });
    P = r.partition;
    extra["adaptive"] = fejer::Json{{"tol", tol},
                                    {"max_intervals", max_intervals},
                                    {"certified_bound", r.error_bound},
                                    {"converged", r.converged}};
    o.satisfied = r.converged;
  } else {
    P = partition_field(s, p);
  }
  const QuadResult r = field("partition", [&] { return run_quadrature(p, h, *P, q); });
  o.satisfied = o.satisfied && r.certified();

  o.json = fejer::Json{{"command", "quad"},
                       {"kernel", h.describe()},
                       {"intervals", P->intervals()},
                       {"partition", to_json(*P)},
                       {"result", to_json(r)}};
  for (auto it = extra.begin(); it != extra.end(); ++it) o.json[it.key()] = it.value();

  std::ostringstream text;
  text << "intervals " << P->intervals() << "\n"
       << "value " << csv_number(r.value) << "\n"
       << "error_bound " << csv_number(r.error_bound) << "\n"
       << "reference " << csv_number(r.reference) << "\n"
       << "actual_error " << csv_number(r.actual_error) << "\n"
       << "certified " << (r.certified() ? "true" : "false") << "\n";
  for (const auto& w : r.warnings) text << "warning: " << w << "\n";
  o.text = text.str();
  o.table = "intervals,value,error_bound,reference,actual_error,certified\n" +
            std::to_string(P->intervals()) + "," + csv_number(r.value) + "," + csv_number(r.error_bound) +
            "," + csv_number(r.reference) + "," + csv_number(r.actual_error) + "," +
            (r.certified() ? "true" : "false") + "\n";
  return o;
}

Outcome cmd_means(const Settings& s) {
  const MeanParams mp{s.require_number("a"), s.require_number("b"), s.require_number("n"),
                      s.number("k").value_or(1.0)};
  const auto r = field("n", [&] { return means_bound_check(mp); });
  Outcome o;
  o.reports.push_back(r);
  o.satisfied = r.satisfied;
  o.json = fejer::Json{{"command", "means"},
                       {"report", to_json(r)},
                       {"arithmetic_mean_of_powers",
                        arithmetic_mean(std::pow(mp.a, mp.n), std::pow(mp.b, mp.n))},
                       {"log_mean", gen_log_mean(mp.a, mp.b, mp.n)},
                       {"corollary_bound", means_corollary_bound(mp.a, mp.b, mp.n)}};
  return o;
}

Outcome cmd_moment(const Settings& s, const QuadratureSettings& q) {
  const Expression g = expression_field(s, "g");
  const double a = s.require_number("a"), b = s.require_number("b");
  const DensitySpec d = field("g", [&] { return DensitySpec::make(g, a, b, q); });
  const HKernel h = kernel_field(s, "power:1");

  Outcome o;
  o.json = fejer::Json{{"command", "moment"}, {"expectation", lambda_moment(d, 1.0, q)}};
  if (auto lambda = s.number("lambda")) {
    const auto* power = std::get_if<HKernel::Power>(&h.variant());
    if (!power) throw FieldError("kernel", "--lambda requires a power kernel");
    const auto r = field("lambda", [&] { return power_moment_check(d, *lambda, power->k, q); });
    o.reports.push_back(r.theorem);
    o.json["lambda"] = *lambda;
    o.json["lambda_moment"] = lambda_moment(d, *lambda, q);
    o.json["report"] = to_json(r.theorem);
    o.json["display_bound"] = r.display_bound;
  } else {
    const Expression f = expression_field(s, "f", "x");
    const auto fprime = optional_expression(s, "fprime");
    const auto r = field("kernel", [&] { return moment_bound_check(d, f, fprime, h, q); });
    o.reports.push_back(r);
    o.json["report"] = to_json(r);
  }
  o.satisfied = all_satisfied(o.reports);
  return o;
}

Outcome cmd_check_hconvex(const Settings& s) {
  const Expression phi = expression_field(s, "phi");
  const HKernel h = kernel_field(s, "power:1");
  const double a = s.require_number("a"), b = s.require_number("b");
  const int grid = s.integer("grid").value_or(21);
  const double tol = s.number("hc_tol").value_or(-1.0);
  const auto r = field("phi", [&] { return check_h_convex(phi, h, a, b, grid, tol); });
  Outcome o;
  o.satisfied = r.passed();
  o.json = to_json(r);
  o.json["kernel"] = h.describe();
  std::ostringstream text;
  text << "checked " << r.checked_triples << " triples, " << r.violation_count << " violations"
       << (r.passed() ? " (not refuted at this grid resolution)" : "") << "\n";
  std::string table = "x,y,lambda,lhs,rhs\n";
  for (const auto& v : r.violations) {
    text << "violation x=" << csv_number(v.x) << " y=" << csv_number(v.y) << " lambda=" << csv_number(v.lambda)
         << " lhs=" << csv_number(v.lhs) << " rhs=" << csv_number(v.rhs) << "\n";
    table += csv_number(v.x) + "," + csv_number(v.y) + "," + csv_number(v.lambda) + "," + csv_number(v.lhs) +
             "," + csv_number(v.rhs) + "\n";
  }
  o.text = text.str();
  o.table = table;
  return o;
}

Outcome cmd_battery(const Settings& s) {
  BatteryOptions opts;
  opts.inject_fault = s.string("inject_fault").value_or("");
  const auto summary = run_battery(opts);
  Outcome o;
  o.satisfied = summary.all_passed();
  o.json = to_json(summary);
  std::ostringstream text;
  std::string table = "name,relation,value,expected,tolerance,passed\n";
  for (const auto& c : summary.cases) {
    text << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << csv_number(c.value)
         << " expected=" << csv_number(c.expected) << (c.error.empty() ? "" : " error=" + c.error) << "\n";
    table += c.name + "," + (c.relation == BatteryCase::Relation::AtMost ? "at_most" : "equals") + "," +
             csv_number(c.value) + "," + csv_number(c.expected) + "," + csv_number(c.tolerance) + "," +
             (c.passed ? "true" : "false") + "\n";
  }
  text << summary.cases.size() - summary.failures() << "/" << summary.cases.size() << " cases passed\n";
  o.text = text.str();
  o.table = table;
  return o;
}

std::string render(const Outcome& o, Format format) {
  switch (format) {
    case Format::Json: return o.json.dump(2) + "\n";
    case Format::Csv: {
      if (!o.table.empty()) return o.table;
      std::ostringstream out;
      write_csv(out, o.reports);
      return out.str();
    }
    case Format::Text: {
      std::ostringstream out;
      for (const auto& r : o.reports) {
        out << r.label << ": measured=" << csv_number(r.measured) << " bound=" << csv_number(r.bound)
            << " slack=" << csv_number(r.slack) << (r.satisfied ? " [holds]" : " [VIOLATED]") << "\n";
        for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
      }
      out << o.text;
      if (o.reports.empty() && o.text.empty()) out << o.json.dump(2) << "\n";
      return out.str();
    }
  }
  return {};
}

struct FlagSpec {
  const char* name;
  const char* help;
  bool is_switch = false;
};

const std::vector<FlagSpec> kCommonFlags = {
    {"output", "output format: json (default), text or csv"},
    {"out", "write the report to this file instead of stdout"},
    {"abs-tol", "absolute integration tolerance (default 1e-10; env FEJER_TOL)"},
    {"rel-tol", "relative integration tolerance (default 1e-8)"},
    {"max-depth", "maximum bisection depth of the integrator (default 50)"},
};

const std::vector<FlagSpec> kProblemFlags = {
    {"f", "f(x), e.g. \"x^2\""},
    {"fprime", "f'(x); omitted selects a central difference"},
    {"g", "weight g(x) (default 1)"},
    {"a", "left endpoint"},
    {"b", "right endpoint"},
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fejér-type trapezoidal inequalities for h-convex functions"};
  app.require_subcommand(1);

  struct Registered {
    CLI::App* app;
    std::vector<std::pair<std::string, CLI::Option*>> options;
  };
  std::map<std::string, std::string> raw;
  std::map<std::string, bool> switches;
  std::vector<Registered> commands;
  std::string config_path;

  auto add = [&](const char* name, const char* help, std::vector<std::vector<FlagSpec>> groups) {
    Registered r{app.add_subcommand(name, help), {}};
    r.app->add_option("--config", config_path, "JSON config file; flags override its values");
    groups.push_back(kCommonFlags);
    for (const auto& group : groups) {
      for (const auto& f : group) {
        const std::string flag = std::string("--") + f.name;
        const std::string key = key_of(f.name);
        CLI::Option* opt = f.is_switch ? r.app->add_flag(flag, switches[key], f.help)
                                       : r.app->add_option(flag, raw[key], f.help);
        r.options.emplace_back(key, opt);
      }
    }
    commands.push_back(std::move(r));
  };

  add("verify-lemma", "check the properties of the mapping M(t)",
      {kProblemFlags,
       {{"grid", "t-grid size for pointwise checks (default 101)"},
        {"p", "Hölder exponent p > 1 (default 2)"},
        {"sup-samples", "grid size for ||g||_inf (default 1001)"},
        {"mplot", "write a t,M table to this CSV file"},
        {"mplot-grid", "rows in the M(t) table (default 101)"}}});
  add("bound", "evaluate a trapezoidal-gap bound",
      {kProblemFlags,
       {{"kernel", "power:K | constant:C | custom:<expr> (default power:1)"},
        {"variant",
         "h-convex (default), mirror, s-convex, convex, convex-left, convex-right, bounded-derivative, "
         "lipschitz, reference, fejer, all"},
        {"s", "exponent for the s-convex variant"},
        {"m", "lower bound of f' (bounded-derivative)"},
        {"M", "upper bound of f' (bounded-derivative)"},
        {"K", "Lipschitz constant of f'"},
        {"p", "Hölder exponent p > 1 (default 2)"},
        {"sup-samples", "grid size for ||g||_inf (default 1001)"}}});
  add("quad", "weighted trapezoidal rule with an a-priori error certificate",
      {kProblemFlags,
       {{"kernel", "power:K | constant:C | custom:<expr> (default power:1)"},
        {"n", "number of uniform intervals (default 1)"},
        {"partition", "explicit comma-separated breakpoints"},
        {"adaptive", "refine greedily until the bound is below --tol", true},
        {"tol", "target error bound for --adaptive"},
        {"max-intervals", "interval cap for --adaptive (default 4096)"}}});
  add("means", "arithmetic versus generalized log-mean inequality",
      {{{"a", "0 < a"}, {"b", "b > a"}, {"n", "mean exponent"}, {"k", "kernel exponent (default 1)"}}});
  add("moment", "moment bounds for a symmetric density",
      {{{"g", "density on [a,b]"},
        {"a", "0 < a"},
        {"b", "b > a"},
        {"f", "f(x) (default x)"},
        {"fprime", "f'(x)"},
        {"kernel", "power:K | constant:C | custom:<expr> (default power:1)"},
        {"lambda", "use f(x) = x^lambda/lambda and report both bounds"}}});
  add("check-hconvex", "sampling check of h-convexity",
      {{{"phi", "nonnegative function to check"},
        {"kernel", "power:K | constant:C | custom:<expr> (default power:1)"},
        {"a", "left endpoint"},
        {"b", "right endpoint"},
        {"grid", "grid size (default 21)"},
        {"hc-tol", "violation tolerance (default 1e-9 (1 + max|phi|))"}}});
  add("battery", "run the built-in regression battery", {{{"inject-fault", "negate one case (testing)"}}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSatisfied : kInputError;
  }

  try {
    const Registered* active = nullptr;
    for (const auto& c : commands)
      if (c.app->parsed()) active = &c;
    const std::string command = active->app->get_name();

    Settings settings;
    if (!config_path.empty()) settings.load_config(config_path);
    if (auto cfg = settings.string("command"); cfg && *cfg != command)
      throw FieldError("command", "config file is for '" + *cfg + "' but '" + command + "' was run");
    if (const char* env = std::getenv("FEJER_TOL")) settings.set("abs_tol", std::string(env));
    for (const auto& [key, opt] : active->options) {
      if (opt->count() == 0) continue;
      if (switches.count(key))
        settings.set(key, switches[key]);
      else
        settings.set(key, raw[key]);
    }

    const std::string fmt = settings.string("output").value_or("json");
    Format format;
    if (fmt == "json")
      format = Format::Json;
    else if (fmt == "text")
      format = Format::Text;
    else if (fmt == "csv")
      format = Format::Csv;
    else
      throw FieldError("output", "must be json, text or csv");

    const QuadratureSettings q = quadrature_settings(settings);

    Outcome outcome;
    if (command == "verify-lemma")
      outcome = cmd_verify_lemma(settings, q);
    else if (command == "bound")
      outcome = cmd_bound(settings, q);
    else if (command == "quad")
      outcome = cmd_quad(settings, q);
    else if (command == "means")
      outcome = cmd_means(settings);
    else if (command == "moment")
      outcome = cmd_moment(settings, q);
    else if (command == "check-hconvex")
      outcome = cmd_check_hconvex(settings);
    else
      outcome = cmd_battery(settings);

    const std::string rendered = render(outcome, format);
    auto path = settings.string("out");
    if (!path) path = settings.string("output_path");
    if (path) {
      std::ofstream file(*path);
      if (!file) throw FieldError("out", "cannot open '" + *path + "' for writing");
      file << rendered;
    } else {
      out << rendered;
    }
    return outcome.satisfied ? kSatisfied : kViolated;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace fejer::cli
