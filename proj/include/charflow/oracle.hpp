#pragma once

// Exact brute-force verification harness: word-BFS classification,
// certificate replay, and empirical threshold searches for the Fricke
// domains.

#include <cstddef>
#include <optional>

#include "charflow/character.hpp"
#include "charflow/errors.hpp"
#include "charflow/fricke.hpp"
#include "charflow/group.hpp"
#include "charflow/reduction.hpp"
#include "charflow/sampling.hpp"

namespace charflow {

struct Certificate {
  Character<Rational> input;
  GroupWord word;
  Character<Rational> terminator;
  TerminatorClass cls = TerminatorClass::IterationCap;
  bool verified = false;
};

// Replay the witness word exactly and re-check the terminator-class
// inequalities with exact arithmetic. Throws VerificationFailed with the
// first diverging step index.
inline Certificate certify(const ReductionTrace<Rational>& trace) {
  Certificate cert{trace.input, trace.word, trace.terminator, trace.cls, false};
  Character<Rational> v = trace.input;
  for (std::size_t i = 0; i < trace.word.letters.size(); ++i) {
    v = charflow::apply(trace.word.letters[i], v);
    if (i < trace.steps.size() && !(v == trace.steps[i].point))
      throw VerificationFailed("replay diverges from the recorded trace",
                               static_cast<long>(i));
  }
  if (!(v == trace.terminator))
    throw VerificationFailed("replayed word does not reach the terminator",
                             static_cast<long>(trace.word.letters.size()));
  const Tolerance exact = Tolerance::exact();
  switch (trace.cls) {
    case TerminatorClass::FrickeM:
      if (!in_omega0_M(v, exact).member)
        throw VerificationFailed("terminator not in Omega_0^M", -1);
      break;
    case TerminatorClass::EllipticE:
      if (!(abs_value(zbar(v)) < Rational(2)))
        throw VerificationFailed("terminator not in the elliptic region", -1);
      break;
    case TerminatorClass::SigmaZero:
      if (!(v.x == 0 || v.y == 0))
        throw VerificationFailed("terminator not on the degenerate locus", -1);
      break;
    case TerminatorClass::IterationCap:
      throw VerificationFailed("iteration-capped trace cannot be certified", -1);
  }
  cert.verified = true;
  return cert;
}

struct BruteforceResult {
  std::optional<TerminatorClass> cls;  // preferred verdict (FrickeM wins)
  bool found_fricke = false;
  bool found_elliptic = false;
  bool found_sigma_zero = false;
};

// Exact BFS over reduced Lambda-words of length <= max_len. A point
// counts as FrickeM if it (or its sigma_xz image) lies in Omega_0^M, as
// EllipticE if |z| < 2 or |zbar| < 2, as SigmaZero if x = 0 or y = 0.
// FrickeM is preferred when several flags appear within the cap.
BruteforceResult classify_bruteforce_full(const Character<Rational>& u,
                                          std::size_t max_len);

inline std::optional<TerminatorClass> classify_bruteforce(const Character<Rational>& u,
                                                          std::size_t max_len) {
  return classify_bruteforce_full(u, max_len).cls;
}

// Sampling-based estimate of the level threshold below/above which the
// base Fricke domain meets kappa^{-1}(c). Evidence-grade, not a proof.
double threshold_search(Surface surface, double c_lo, double c_hi, std::size_t grid);

// Analytic emptiness test for Omega_0^M at level c: xy > 4 together with
// x^2 + y^2 < -c - 6 forces c < -14.
inline bool omega0_M_level_empty(double c) { return c >= -14; }

}  // namespace charflow
