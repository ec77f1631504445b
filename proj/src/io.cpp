#include "charflow/io.hpp"

#include "charflow/errors.hpp"

namespace charflow {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing coordinate '") + key + "'");
  return j.at(key);
}

Component component_of(const Json& j) {
  if (!j.contains("component")) return Component::C11;
  return parse_component(j.at("component").get<std::string>());
}

double json_double(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_finite_double(v.get<std::string>());
  throw ParseError("coordinate is neither a number nor a string");
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("exact coordinate must be an integer or a \"p/q\" string");
}

}  // namespace

Character<double> character_from_json_double(const Json& j) {
  return {json_double(field(j, "x")), json_double(field(j, "y")), json_double(field(j, "z")),
          component_of(j)};
}

Character<Rational> character_from_json_rational(const Json& j) {
  return {json_rational(field(j, "x")), json_rational(field(j, "y")),
          json_rational(field(j, "z")),
          component_of(j)};
}

Json character_to_json(const Character<double>& u) {
  return {{"x", u.x}, {"y", u.y}, {"z", u.z}, {"component", component_name(u.component)}};
}

Json character_to_json(const Character<Rational>& u) {
  return {{"x", format_scalar(u.x)},
          {"y", format_scalar(u.y)},
          {"z", format_scalar(u.z)},
          {"component", component_name(u.component)}};
}

std::string report_to_csv(const ErgodicReport& report) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (const auto& b : report.histogram)
    out += format_scalar(b.lo) + ',' + format_scalar(b.hi) + ',' + std::to_string(b.count) +
           '\n';
  return out;
}

Json report_to_json(const ErgodicReport& report) {
  Json bins = Json::array();
  for (const auto& b : report.histogram)
    bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  Json j{{"c", report.c},
         {"sweep", report.sweep},
         {"iterations", report.iterations},
         {"discrepancy", report.discrepancy},
         {"coverage", report.coverage},
         {"seed", report.seed},
         {"max_kappa_drift", report.max_kappa_drift},
         {"escaped", report.escaped},
         {"flagged", report.flagged},
         {"histogram", bins}};
  if (!report.sweep) j["z"] = report.z;
  return j;
}

}  // namespace charflow
