#include "fejer/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "fejer/error.hpp"
#include "fejer/mapping.hpp"

namespace fejer {

namespace {

const Json& required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number_field(const Json& j, const char* key) {
  const Json& v = required(j, key);
  if (!v.is_number()) throw ParameterError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = required(j, key);
  if (!v.is_string()) throw ParameterError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const BoundReport& r) {
  return Json{{"label", r.label},     {"measured", r.measured},   {"bound", r.bound},
              {"slack", r.slack},     {"satisfied", r.satisfied}, {"report_tol", r.report_tol},
              {"warnings", r.warnings}};
}

Json to_json(const ConvexityReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"x", v.x}, {"y", v.y}, {"lambda", v.lambda}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return Json{{"checked_triples", r.checked_triples},
              {"violation_count", r.violation_count},
              {"max_violation", r.max_violation},
              {"tolerance", r.tolerance},
              {"passed", r.passed()},
              {"note", r.passed() ? "not refuted at this grid resolution" : "h-convexity refuted"},
              {"violations", violations}};
}

Json to_json(const QuadResult& r) {
  return Json{{"value", r.value},
              {"error_bound", r.error_bound},
              {"reference", r.reference},
              {"actual_error", r.actual_error},
              {"certified", r.certified()},
              {"warnings", r.warnings}};
}

Json to_json(const Partition& P) { return Json(P.points()); }

Json to_json(const FejerTriple& t) {
  return Json{{"lhs", t.lhs},
              {"mid", t.mid},
              {"rhs", t.rhs},
              {"left_holds", t.left_holds},
              {"right_holds", t.right_holds}};
}

HKernel kernel_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "power") return HKernel::power(number_field(j, "k"));
  if (kind == "constant") return HKernel::constant(number_field(j, "c"));
  if (kind == "custom") return HKernel::custom(Expression::parse(string_field(j, "expr")));
  throw ParameterError("field 'kind' must be power, constant or custom");
}

Json kernel_to_json(const HKernel& h) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HKernel::Power>)
          return Json{{"kind", "power"}, {"k", v.k}};
        else if constexpr (std::is_same_v<T, HKernel::Constant>)
          return Json{{"kind", "constant"}, {"c", v.c}};
        else
          return Json{{"kind", "custom"}, {"expr", v.expr.to_string()}};
      },
      h.variant());
}

ProblemSpec problem_from_json(const Json& j) {
  std::string fprime;
  if (j.contains("fprime") && !j.at("fprime").is_null()) fprime = string_field(j, "fprime");
  return ProblemSpec::parse(string_field(j, "f"), fprime, string_field(j, "g"), number_field(j, "a"),
                            number_field(j, "b"));
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("partition must be a JSON array of numbers");
  std::vector<double> pts;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParameterError("partition must be a JSON array of numbers");
    pts.push_back(v.get<double>());
  }
  return Partition(std::move(pts));
}

std::string csv_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "label,measured,bound,slack,satisfied\n";
  for (const auto& r : reports)
    out << r.label << ',' << csv_number(r.measured) << ',' << csv_number(r.bound) << ','
        << csv_number(r.slack) << ',' << (r.satisfied ? "true" : "false") << '\n';
}

void emit_mplot(const ProblemSpec& p, int grid, std::ostream& out, const QuadratureSettings& s) {
  if (grid < 2) throw ParameterError("mplot grid must be >= 2");
  out << "t,M\n";
  for (int i = 0; i < grid; ++i) {
    const double t = i == grid - 1 ? 1.0 : static_cast<double>(i) / (grid - 1);
    out << csv_number(t) << ',' << csv_number(m_value(p, t, s)) << '\n';
  }
}

void emit_mplot(const ProblemSpec& p, int grid, const std::string& path, const QuadratureSettings& s) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  emit_mplot(p, grid, file, s);
  if (!file) throw Error("failed writing '" + path + "'");
}

}  // namespace fejer
