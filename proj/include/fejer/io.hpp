#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fejer/bounds.hpp"
#include "fejer/hconvexity.hpp"
#include "fejer/kernel.hpp"
#include "fejer/problem.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

using Json = nlohmann::ordered_json;

// Fixed field sets; the golden files under tests/golden pin them.
Json to_json(const BoundReport& r);
Json to_json(const ConvexityReport& r);
Json to_json(const QuadResult& r);
Json to_json(const Partition& P);
Json to_json(const FejerTriple& t);

/// {"kind":"power","k":..} | {"kind":"constant","c":..} | {"kind":"custom","expr":".."}
HKernel kernel_from_json(const Json& j);
Json kernel_to_json(const HKernel& h);

/// {"f":"expr","fprime":"expr"|null,"g":"expr","a":num,"b":num}
ProblemSpec problem_from_json(const Json& j);

/// Partition from a JSON array of points.
Partition partition_from_json(const Json& j);

/// Decimal text with 15 significant digits and '.' separator.
std::string csv_number(double v);

/// Header `label,measured,bound,slack,satisfied` followed by one row per report.
void write_csv(std::ostream& out, const std::vector<BoundReport>& reports);

/// Tabulates M(t) at t_i = i/(grid-1): header `t,M`, then `grid` rows.
void emit_mplot(const ProblemSpec& p, int grid, std::ostream& out, const QuadratureSettings& s = {});
void emit_mplot(const ProblemSpec& p, int grid, const std::string& path, const QuadratureSettings& s = {});

}  // namespace fejer
