#include "infotrade/bound_report.hpp"

#include <cmath>

namespace infotrade {

BoundReport BoundReport::at_most(std::string name, double lhs, double rhs, double tolerance,
                                 nlohmann::json context) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.slack = rhs - lhs;
  // NaN slack (e.g. inf - inf) never counts as holding.
  r.holds = r.slack >= -tolerance;
  r.context = context.is_object() ? std::move(context) : nlohmann::json::object();
  r.context["tolerance"] = tolerance;
  return r;
}

nlohmann::json BoundReport::to_json() const {
  auto number = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
  };
  return {{"name", name},   {"lhs", number(lhs)},           {"rhs", number(rhs)},
          {"slack", number(slack)}, {"verdict", holds ? "holds" : "violated"},
          {"context", context}};
}

}  // namespace infotrade
