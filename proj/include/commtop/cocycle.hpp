#pragma once

#include "commtop/torus.hpp"

#include <string>
#include <vector>

namespace commtop {

struct PLPoint {
  Rational time;
  RationalVector lift;

  bool operator==(const PLPoint& o) const { return time == o.time && lift == o.lift; }
};

/// Piecewise-linear path [0,1] -> R^k x F with constant F part. The lift
/// lives in R^k, not mod 1, so products of paths stay continuous.
class PLPath {
 public:
  /// Times must increase strictly from 0 to 1; lifts share one length.
  PLPath(std::vector<PLPoint> points, Element f);
  static PLPath constant(RationalVector lift, Element f = kIdentity);
  static PLPath linear(RationalVector from, RationalVector to, Element f = kIdentity);

  const std::vector<PLPoint>& points() const { return points_; }
  Element f() const { return f_; }
  std::size_t rank() const { return points_.front().lift.size(); }
  RationalVector lift_at(const Rational& time) const;
  RationalVector start() const { return points_.front().lift; }
  RationalVector end() const { return points_.back().lift; }
  /// lift(1) - lift(0) is integral.
  bool is_closed() const;
  PLPath reversed() const;
  PLPath translated(const RationalVector& shift) const;
  bool operator==(const PLPath& o) const { return f_ == o.f_ && points_ == o.points_; }

 private:
  std::vector<PLPoint> points_;
  Element f_;
};

using PLLoop = PLPath;

/// Pointwise product and inverse under (t,f)(t',f') = (t + rho(f)t', ff') on lifts.
PLPath path_multiply(const TorusExtension& e, const PLPath& a, const PLPath& b);
PLPath path_inverse(const TorusExtension& e, const PLPath& a);
/// The group element at a parameter.
ExtElement path_value(const TorusExtension& e, const PLPath& a, const Rational& time);

/// Transition functions on the arcs C1∩C2, C1∩C3, C2∩C3. Parameter 0 is the
/// "front" triple point and 1 the "back" one.
struct PatchCocycle {
  PLPath a12, a13, a23;
};

struct CocycleCheck {
  std::string condition;
  std::string location;  // "front" or "back"
  bool pass = true;
  std::string detail;
};

struct CocycleDiagnostics {
  bool ok = true;
  std::vector<CocycleCheck> checks;
  /// "<condition> fails at <location>: <detail>" for the first failure, else empty.
  std::string first_failure() const;
};

CocycleDiagnostics validate(const TorusExtension& e, const PatchCocycle& c);
/// Pointwise inverse. Throws InvalidArgument unless validate(c) passes.
PatchCocycle invert(const TorusExtension& e, const PatchCocycle& c);

struct ClutchResult {
  PLLoop loop;                  // a12*a23 forward on [0,1/2], a13 reversed on [1/2,1]
  bool identity_component = true;
  RationalVector winding;       // lift(1) - lift(0); integral for split extensions
  std::string marker;           // "not in identity-component loop" when applicable
};

/// Throws InvariantViolation ("non-closing loop") if the two arcs do not meet
/// at both triple points.
ClutchResult clutch(const TorusExtension& e, const PatchCocycle& c);

struct QxResult {
  bool triple_points_affine = true;  // (x, q, 1) is affinely commutative at both triple points
  PatchCocycle cocycle;              // a12 = [x, q], a13 = a23 = 1
  ClutchResult clutch;
};

/// Composite commutator cocycle built from the patch functions (x, q, 1),
/// where x is a loop in T based at the identity. Throws InvalidArgument if x
/// is not a closed torus loop based at the identity.
QxResult build_qx_cocycle(const TorusExtension& e, Element q, const PLLoop& x);

/// Rational PL circle: x(s) = s*end*u, y(s) = s*end*v for s in [0,1].
struct CircleData {
  std::vector<BigInt> u, v;
  Rational end = 1;
};

/// alpha12 = p x . q y, alpha23 = (q y)^-1, alpha13 = p x. Throws
/// InvalidArgument naming the commutator value if [p x(end), q y(end)] != 1
/// or [p, q] != 1.
PatchCocycle build_alpha_cocycle(const TorusExtension& e, Element p, Element q, const CircleData& circle);

std::string to_string(const PLPath& path, const FiniteGroup& f);
std::string vector_to_string(const RationalVector& v);

}  // namespace commtop
