#pragma once

// Characters (x, y, z) on the real character variety components, the
// kappa polynomial family, zbar, tau, and the sign-change involutions.

#include <string>
#include <vector>

#include "charflow/errors.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

// The three components carrying a nonzero Stiefel-Whitney class.
enum class Component { C01, C10, C11 };

inline std::string component_name(Component c) {
  switch (c) {
    case Component::C01: return "01";
    case Component::C10: return "10";
    case Component::C11: return "11";
  }
  return "??";
}

inline Component parse_component(const std::string& s) {
  if (s == "01") return Component::C01;
  if (s == "10") return Component::C10;
  if (s == "11") return Component::C11;
  throw ParseError("unknown component '" + s + "'");
}

template <class T>
struct Character {
  T x{}, y{}, z{};
  Component component = Component::C11;

  bool operator==(const Character&) const = default;
};

template <class T>
bool coords_equal(const Character<T>& a, const Character<T>& b, const Tolerance& tol) {
  return a.component == b.component && approx_eq(a.x, b.x, tol) &&
         approx_eq(a.y, b.y, tol) && approx_eq(a.z, b.z, tol);
}

// Component-wise kappa polynomial. On C11: -x^2 - y^2 + z^2 + xyz - 2.
template <class T>
T kappa(const Character<T>& u) {
  const T xyz = u.x * u.y * u.z;
  switch (u.component) {
    case Component::C01: return u.x * u.x - u.y * u.y - u.z * u.z + xyz - T(2);
    case Component::C10: return -u.x * u.x + u.y * u.y - u.z * u.z + xyz - T(2);
    case Component::C11: return -u.x * u.x - u.y * u.y + u.z * u.z + xyz - T(2);
  }
  return T{};
}

namespace detail {
template <class T>
void require_c11(const Character<T>& u, const char* op) {
  if (u.component != Component::C11)
    throw ComponentMismatch(std::string(op) + " is defined on component 11 only");
}
}  // namespace detail

// zbar = -xy - z, the Q_z-conjugate root of z. C11 chart only.
template <class T>
T zbar(const Character<T>& u) {
  detail::require_c11(u, "zbar");
  return -u.x * u.y - u.z;
}

// tau = -z * zbar; on kappa^{-1}(c) this equals x^2 + y^2 + c + 2.
template <class T>
T tau(const Character<T>& u) {
  detail::require_c11(u, "tau");
  return -u.z * zbar(u);
}

enum class SignChange { SigmaXZ, SigmaYZ, SigmaXY };

template <class T>
Character<T> sign_change(const Character<T>& u, SignChange which) {
  switch (which) {
    case SignChange::SigmaXZ: return {-u.x, u.y, -u.z, u.component};
    case SignChange::SigmaYZ: return {u.x, -u.y, -u.z, u.component};
    case SignChange::SigmaXY: return {-u.x, -u.y, u.z, u.component};
  }
  return u;
}

template <class T>
struct NormalizedSigns {
  Character<T> character;
  std::vector<SignChange> applied;
};

// Sign-orbit normal form: flip to z <= 0. Since sigma_xz negates both z and
// zbar, a point with z and zbar of opposite signs ends up with z < 0 < zbar.
template <class T>
NormalizedSigns<T> normalize_signs(const Character<T>& u) {
  detail::require_c11(u, "normalize_signs");
  NormalizedSigns<T> out{u, {}};
  if (u.z > T(0)) {
    out.character = sign_change(u, SignChange::SigmaXZ);
    out.applied.push_back(SignChange::SigmaXZ);
  }
  return out;
}

// Transpositions used to route the C01/C10 components to the C11 chart.
// t_xy swaps C01 and C10 and stabilizes C11; t_xz swaps C01 and C11.
template <class T>
Character<T> transpose_xy(const Character<T>& u) {
  Component c = u.component;
  if (c == Component::C01) c = Component::C10;
  else if (c == Component::C10) c = Component::C01;
  return {u.y, u.x, u.z, c};
}

template <class T>
Character<T> transpose_xz(const Character<T>& u) {
  if (u.component == Component::C10)
    throw ComponentMismatch("t_xz does not act on component 10");
  Component c = u.component == Component::C01 ? Component::C11 : Component::C01;
  return {u.z, u.y, u.x, c};
}

}  // namespace charflow
