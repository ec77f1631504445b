#pragma once

// Fricke-space membership for the once-punctured Moebius band and Klein
// bottle, the pair-of-pants pullback and the 4-punctured-sphere
// pushforward with the Keen trace inequalities.

#include <string>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/errors.hpp"
#include "charflow/group.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

enum class Surface { MoebiusM, KleinK };

template <class T>
struct InequalityRecord {
  std::string expr;
  T value{};
  bool ok = false;
};

template <class T>
struct FrickeVerdict {
  bool member = false;
  Surface surface = Surface::MoebiusM;
  std::vector<InequalityRecord<T>> inequalities;
};

// Base Moebius domain: z < -2 and zbar < -2 (equivalently xy + z > 2),
// strict with eps_strict slack on the double backend. Open region:
// boundary points are non-members.
template <class T>
FrickeVerdict<T> in_omega0_M(const Character<T>& u, const Tolerance& tol = {}) {
  detail::require_c11(u, "in_omega0_M");
  FrickeVerdict<T> v;
  v.surface = Surface::MoebiusM;
  const T zb = zbar(u);
  v.inequalities.push_back({"z < -2", u.z, strictly_less(u.z, T(-2), tol)});
  v.inequalities.push_back({"zbar < -2", zb, strictly_less(zb, T(-2), tol)});
  v.member = v.inequalities[0].ok && v.inequalities[1].ok;
  return v;
}

// Base Klein domain. C11 chart: x^2 + y^2 - xyz + 4 < 0; C01 chart:
// y^2 + z^2 - xyz + 4 < 0. No direct C10 form; route via transposition.
template <class T>
FrickeVerdict<T> in_omega0_K(const Character<T>& u, const Tolerance& tol = {}) {
  FrickeVerdict<T> v;
  v.surface = Surface::KleinK;
  T value;
  std::string expr;
  if (u.component == Component::C11) {
    value = u.x * u.x + u.y * u.y - u.x * u.y * u.z + T(4);
    expr = "x^2 + y^2 - xyz + 4 < 0";
  } else if (u.component == Component::C01) {
    value = u.y * u.y + u.z * u.z - u.x * u.y * u.z + T(4);
    expr = "y^2 + z^2 - xyz + 4 < 0";
  } else {
    throw ComponentMismatch("no direct Klein inequality on component 10");
  }
  v.inequalities.push_back({expr, value, strictly_less(value, T(0), tol)});
  v.member = v.inequalities[0].ok;
  return v;
}

template <class T>
FrickeVerdict<T> fricke_membership(Surface s, const Character<T>& u,
                                   const Tolerance& tol = {}) {
  return s == Surface::MoebiusM ? in_omega0_M(u, tol) : in_omega0_K(u, tol);
}

// Pullback to the pair of pants chart: (x, y, z) -> (x, x, y^2+z^2-xyz+2),
// with the discreteness conditions |x| > 2 and y^2+z^2-xyz+2 < -2 (the
// second already implies the first).
template <class T>
struct PantsImage {
  T first{}, second{}, third{};
  bool discrete = false;
};

template <class T>
PantsImage<T> pants_pullback(const Character<T>& u, const Tolerance& tol = {}) {
  if (u.component != Component::C01)
    throw ComponentMismatch("pants_pullback uses the component 01 chart");
  PantsImage<T> out;
  out.first = u.x;
  out.second = u.x;
  out.third = u.y * u.y + u.z * u.z - u.x * u.y * u.z + T(2);
  out.discrete = strictly_greater(abs_value(u.x), T(2), tol) &&
                 strictly_less(out.third, T(-2), tol);
  return out;
}

// Trace coordinates of the 4-punctured sphere.
template <class T>
struct QpsTraces {
  T a{}, b{}, c_{}, d{}, t_ab{}, t_bc{}, t_ca{};
};

// Pushforward along the orientation double cover:
// (x,y,z) -> (z, zbar, z, zbar, -x^2-2, -y^2-2, kappa(u)).
template <class T>
QpsTraces<T> qps_pushforward(const Character<T>& u) {
  detail::require_c11(u, "qps_pushforward");
  const T zb = zbar(u);
  return {u.z, zb, u.z, zb, -u.x * u.x - T(2), -u.y * u.y - T(2), kappa(u)};
}

// Residual of the 4-punctured-sphere Fricke relation; zero on the image
// of qps_pushforward.
template <class T>
T fricke_relation_residual(const QpsTraces<T>& q) {
  const T lhs = q.t_ab * q.t_ab + q.t_bc * q.t_bc + q.t_ca * q.t_ca +
                q.t_ab * q.t_bc * q.t_ca;
  const T rhs = (q.a * q.b + q.c_ * q.d) * q.t_ab + (q.a * q.d + q.b * q.c_) * q.t_bc +
                (q.a * q.c_ + q.b * q.d) * q.t_ca -
                (q.a * q.a + q.b * q.b + q.c_ * q.c_ + q.d * q.d +
                 q.a * q.b * q.c_ * q.d - T(4));
  return lhs - rhs;
}

// Keen's discreteness conditions: the six listed traces all below -2.
template <class T>
bool keen_check(const QpsTraces<T>& q, const Tolerance& tol = {}) {
  const T bound(-2);
  return strictly_less(q.a, bound, tol) && strictly_less(q.b, bound, tol) &&
         strictly_less(q.c_, bound, tol) && strictly_less(q.d, bound, tol) &&
         strictly_less(q.t_ab, bound, tol) && strictly_less(q.t_bc, bound, tol);
}

// Membership of u in the translate w * Omega_0: test apply_word(w^{-1}, u)
// against the base domain.
template <class T>
FrickeVerdict<T> translate_fricke(const Character<T>& u, const GroupWord& w,
                                  Surface s = Surface::MoebiusM,
                                  const Tolerance& tol = {}) {
  return fricke_membership(s, apply_word(inverse_word(w), u), tol);
}

}  // namespace charflow
