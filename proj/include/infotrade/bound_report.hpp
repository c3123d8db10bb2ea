#pragma once

#include <string>

#include <json.hpp>

namespace infotrade {

/// One checked inequality instance, always normalized to the form lhs <= rhs.
///
/// slack = rhs - lhs, and the verdict holds iff slack >= -tolerance. Inequalities
/// stated as "A >= B" are recorded with lhs = B and rhs = A.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = true;
  nlohmann::json context = nlohmann::json::object();

  static BoundReport at_most(std::string name, double lhs, double rhs, double tolerance,
                             nlohmann::json context = nlohmann::json::object());

  nlohmann::json to_json() const;
};

}  // namespace infotrade
