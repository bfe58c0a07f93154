#include "gscs/schemes.hpp"

#include <cmath>

#include "gscs/errors.hpp"

namespace gscs {

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::uniform: return "uniform";
    case SchemeKind::degree_first: return "degree_first";
    case SchemeKind::degree_last: return "degree_last";
  }
  return "?";
}

SchemeKind scheme_from_string(const std::string& s) {
  if (s == "uniform") return SchemeKind::uniform;
  if (s == "degree_first") return SchemeKind::degree_first;
  if (s == "degree_last") return SchemeKind::degree_last;
  throw ConfigError("unknown scheme kind '" + s +
                    "' (expected uniform|degree_first|degree_last)");
}

Vector realize(const SchemeSpec& spec, const Graph& g) {
  if (!std::isfinite(spec.budget) || !(spec.budget > 0))
    throw InvalidParams("scheme budget must be > 0");
  const int n = g.size();
  if (spec.kind == SchemeKind::uniform)
    return Vector::Constant(n, spec.budget / n);

  Vector weight(n);
  for (int i = 0; i < n; ++i) {
    const int d = out_degree(g, i);
    if (d == 0)
      throw ZeroDegree("node " + std::to_string(i + 1) +
                       " has out-degree 0; degree schemes undefined");
    weight[i] = spec.kind == SchemeKind::degree_first ? Scalar(d) : Scalar(1) / d;
  }
  return spec.budget * weight / weight.sum();
}

} // namespace gscs
