#include <doctest.h>

#include "charflow/oracle.hpp"

using namespace charflow;

namespace {
Character<Rational> rat(long x, long y, long z) {
  return {Rational(x), Rational(y), Rational(z), Component::C11};
}
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("bruteforce base cases") {
  auto r = classify_bruteforce(rat(3, 2, -3), 0);
  REQUIRE(r.has_value());
  CHECK(*r == TerminatorClass::FrickeM);

  auto v = apply_word(word_from_string("xyzxy"), rat(3, 2, -3));
  auto r2 = classify_bruteforce(v, 6);
  REQUIRE(r2.has_value());
  CHECK(*r2 == TerminatorClass::FrickeM);
  CHECK(tau_reduce(v, Tolerance::exact()).cls == TerminatorClass::FrickeM);
}

TEST_CASE("bruteforce agrees with the reduction on the regression input") {
  Character<Rational> u{Rational(-1, 5), Rational(12), Rational(-10), Component::C11};
  auto trace = tau_reduce(u, Tolerance::exact());
  auto res = classify_bruteforce_full(u, 12);
  REQUIRE(res.cls.has_value());
  switch (trace.cls) {
    case TerminatorClass::FrickeM: CHECK(res.found_fricke); break;
    case TerminatorClass::EllipticE: CHECK(res.found_elliptic); break;
    case TerminatorClass::SigmaZero: CHECK(res.found_sigma_zero); break;
    default: FAIL("reduction hit the iteration cap");
  }
}

TEST_CASE("agreement on seeded deep inputs") {
  Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    auto u = random_rational_omega0_M(rng);
    auto w = random_lambda_word(1 + rng() % 6, rng);
    auto v = apply_word(w, u);
    REQUIRE(kappa(v) < Rational(-14));
    auto trace = tau_reduce(v, Tolerance::exact());
    auto res = classify_bruteforce_full(v, 12);
    if (!res.cls || trace.cls == TerminatorClass::IterationCap) continue;
    const bool ok = (trace.cls == TerminatorClass::FrickeM && res.found_fricke) ||
                    (trace.cls == TerminatorClass::EllipticE && res.found_elliptic) ||
                    (trace.cls == TerminatorClass::SigmaZero && res.found_sigma_zero);
    CHECK(ok);
  }
}

TEST_CASE("certificates") {
  auto t = tau_reduce(rat(3, 2, -3), Tolerance::exact());
  auto cert = certify(t);
  CHECK(cert.verified);
  CHECK(cert.cls == TerminatorClass::FrickeM);

  auto t0 = tau_reduce(rat(0, 5, -4), Tolerance::exact());
  CHECK(certify(t0).verified);
  CHECK(certify(t0).cls == TerminatorClass::SigmaZero);

  // corrupt one letter of a nontrivial witness word
  auto v = apply_word(word_from_string("xyx"), rat(3, 2, -3));
  auto tr = tau_reduce(v, Tolerance::exact());
  REQUIRE(tr.word.letters.size() >= 1);
  auto bad = tr;
  bad.word.letters[0] =
      bad.word.letters[0] == Generator::Qx ? Generator::Qy : Generator::Qx;
  CHECK_THROWS_AS((void)certify(bad), VerificationFailed);

  // an iteration-capped trace cannot be certified
  auto capped = tau_reduce(Character<Rational>{Rational(7), Rational(5), Rational(-9),
                                               Component::C11},
                           Tolerance::exact(), 0);
  CHECK_THROWS_AS((void)certify(capped), VerificationFailed);
}

TEST_CASE("threshold searches") {
  const double m = threshold_search(Surface::MoebiusM, -20, -10, 64);
  CHECK(m > -14.05);
  CHECK(m < -13.95);
  const double k = threshold_search(Surface::KleinK, 2, 10, 64);
  CHECK(k > 5.95);
  CHECK(k < 6.05);
  // both endpoints on the empty side: no members anywhere in the bracket
  CHECK_THROWS_AS((void)threshold_search(Surface::MoebiusM, -13, -12, 64),
                  PreconditionViolated);
}

TEST_CASE("analytic level emptiness") {
  CHECK(omega0_M_level_empty(-14));
  CHECK(omega0_M_level_empty(-13));
  CHECK(omega0_M_level_empty(-10));
  CHECK_FALSE(omega0_M_level_empty(-14.1));
  CHECK_FALSE(omega0_M_level_empty(-24));
}

}  // TEST_SUITE
