#pragma once

#include <string>
#include <vector>

#include "fejer/io.hpp"

namespace fejer {

/// One regression case: either `value` must match `expected` within
/// `tolerance` (Relation::Equals), or `value` must not exceed `expected` by
/// more than `tolerance` (Relation::AtMost, used for inequality checks).
struct BatteryCase {
  enum class Relation { Equals, AtMost };

  std::string name;
  Relation relation = Relation::Equals;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string error;  // non-empty when the case threw

  double slack() const;
};

struct BatteryOptions {
  /// Name of a case whose expected value is negated (mutation sanity check).
  std::string inject_fault;
};

struct BatterySummary {
  std::vector<BatteryCase> cases;
  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs the built-in regression cases: worked examples with closed-form or
/// independently derived expected values.
BatterySummary run_battery(const BatteryOptions& options = {});

Json to_json(const BatteryCase& c);
Json to_json(const BatterySummary& s);

}  // namespace fejer
