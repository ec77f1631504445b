#pragma once

// JSON/CSV serialization of characters, words, verdicts, and reports.

#include <nlohmann/json.hpp>

#include <string>

#include "charflow/character.hpp"
#include "charflow/ergodic.hpp"
#include "charflow/fricke.hpp"
#include "charflow/numeric.hpp"
#include "charflow/reduction.hpp"

namespace charflow {

using Json = nlohmann::json;

// Character JSON: {"x": <scalar>, "y": ..., "z": ..., "component": "11"}.
// Scalars are JSON numbers (float backend) or "p/q" strings (exact).
Character<double> character_from_json_double(const Json& j);
Character<Rational> character_from_json_rational(const Json& j);

Json character_to_json(const Character<double>& u);
Json character_to_json(const Character<Rational>& u);

template <class T>
Json verdict_to_json(const FrickeVerdict<T>& v) {
  Json ineqs = Json::array();
  for (const auto& rec : v.inequalities)
    ineqs.push_back({{"expr", rec.expr}, {"value", format_scalar(rec.value)}, {"ok", rec.ok}});
  return {{"surface", v.surface == Surface::MoebiusM ? "moebius" : "klein"},
          {"member", v.member},
          {"inequalities", ineqs}};
}

// Trace CSV: step, letter, x, y, z, zbar, tau.
template <class T>
std::string trace_to_csv(const ReductionTrace<T>& trace) {
  std::string out = "step,letter,x,y,z,zbar,tau\n";
  auto row = [&](std::size_t step, char letter, const Character<T>& u) {
    out += std::to_string(step);
    out += ',';
    out += letter;
    out += ',' + format_scalar(u.x) + ',' + format_scalar(u.y) + ',' + format_scalar(u.z) +
           ',' + format_scalar(zbar(u)) + ',' + format_scalar(tau(u)) + '\n';
  };
  row(0, '.', trace.input);
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    row(i + 1, generator_letter(trace.steps[i].letter), trace.steps[i].point);
  return out;
}

std::string report_to_csv(const ErgodicReport& report);
Json report_to_json(const ErgodicReport& report);

}  // namespace charflow
