#pragma once

// Scalar backends shared by the whole library.
//
// Computations run on one of two backends:
//   * double        -- fast, used for experiments and sweeps
//   * Rational      -- exact big-integer rationals, used by the oracle
// Library code is templated on the backend type; the type-erased Scalar
// below exists only at the I/O boundary (JSON/CSV, CLI).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>

#include "charflow/errors.hpp"

namespace charflow {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

// Comparison slack for the double backend. eps_eq pads equality tests,
// eps_strict pads strict inequalities such as |zbar| > 2.
struct Tolerance {
  double eps_eq = 1e-9;
  double eps_strict = 1e-9;

  static Tolerance exact() { return Tolerance{0.0, 0.0}; }
};

enum class Ordering { Less, Equal, Greater };

inline Ordering compare(double a, double b, const Tolerance& tol) {
  if (std::abs(a - b) <= tol.eps_eq) return Ordering::Equal;
  return a < b ? Ordering::Less : Ordering::Greater;
}

inline Ordering compare(const Rational& a, const Rational& b, const Tolerance&) {
  if (a == b) return Ordering::Equal;
  return a < b ? Ordering::Less : Ordering::Greater;
}

// u == v up to eps_eq (exact on the Rational backend).
template <class T>
bool approx_eq(const T& a, const T& b, const Tolerance& tol) {
  return compare(a, b, tol) == Ordering::Equal;
}

// Strictly a < b with eps_strict margin on the double backend: the
// inequality must hold by more than the slack.
inline bool strictly_less(double a, double b, const Tolerance& tol) {
  return a < b - tol.eps_strict;
}
inline bool strictly_less(const Rational& a, const Rational& b, const Tolerance&) {
  return a < b;
}

template <class T>
bool strictly_greater(const T& a, const T& b, const Tolerance& tol) {
  return strictly_less(b, a, tol);
}

template <class T>
T abs_value(const T& v) {
  using std::abs;
  return abs(v);
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.template convert_to<double>(); }

// ---------------------------------------------------------------------------
// Scalar serialization: rationals as "p/q" (or plain integer), doubles as
// decimal literals.

inline std::string format_scalar(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline std::string format_scalar(const Rational& v) {
  std::ostringstream os;
  if (denominator(v) == 1) {
    os << numerator(v);
  } else {
    os << numerator(v) << "/" << denominator(v);
  }
  return os.str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      // accept terminating decimals: 10^k denominators are exact
      if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
          throw ParseError("bad decimal literal '" + s + "'");
        boost::multiprecision::cpp_int den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(boost::multiprecision::cpp_int(digits), den);
      }
      return Rational(boost::multiprecision::cpp_int(s));
    }
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

inline double parse_finite_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad numeric literal '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("trailing junk in numeric literal '" + s + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite value '" + s + "'");
  return v;
}

// ---------------------------------------------------------------------------
// Type-erased scalar for the I/O boundary.

class Scalar {
 public:
  Scalar() : value_(0.0) {}
  explicit Scalar(double v) : value_(v) {
    if (!std::isfinite(v)) throw ParseError("Scalar requires a finite float");
  }
  explicit Scalar(Rational v) : value_(std::move(v)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  double as_double() const {
    return is_exact() ? to_double(std::get<Rational>(value_)) : std::get<double>(value_);
  }
  const Rational& as_rational() const {
    if (!is_exact()) throw BackendMismatch("float scalar used where exact required");
    return std::get<Rational>(value_);
  }

  std::string str() const {
    return is_exact() ? format_scalar(std::get<Rational>(value_))
                      : format_scalar(std::get<double>(value_));
  }

  friend Ordering compare(const Scalar& a, const Scalar& b, const Tolerance& tol) {
    if (a.is_exact() != b.is_exact())
      throw BackendMismatch("cannot compare scalars of different backends");
    if (a.is_exact()) return compare(a.as_rational(), b.as_rational(), tol);
    return compare(std::get<double>(a.value_), std::get<double>(b.value_), tol);
  }

 private:
  std::variant<double, Rational> value_;
};

}  // namespace charflow
