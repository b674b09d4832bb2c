#pragma once

#include "rotpoly/errors.hpp"
#include "rotpoly/mat2.hpp"

namespace rotpoly {

/// An evaluation point s = a + jb held as two real components.
struct ComplexPoint {
  double a = 0.0;  ///< real part
  double b = 0.0;  ///< imaginary part

  ComplexPoint() = default;
  /// Throws SpecError if either component is NaN or infinite.
  ComplexPoint(double re, double im);

  bool on_real_axis() const { return b == 0.0; }
};

/// The rotation form R = aI + bJ of a complex number. Only the two scalars
/// are stored; the full matrix [[a,b],[-b,a]] is derived on demand.
struct RotationForm {
  double a = 0.0;
  double b = 0.0;

  Mat2 matrix() const { return {a, b, -b, a}; }
  double norm_squared() const { return a * a + b * b; }
};

/// Companion form R_c = T^{-1} R T together with the similarity transform T.
/// Exists only off the real axis (T is singular when b = 0).
struct CompanionPair {
  Mat2 rc;  ///< [[0,1],[-(a^2+b^2), 2a]]
  Mat2 t;   ///< [[-a,1],[-b,0]]
};

enum class FieldOp { add, sub, mul, div };

/// The isomorphism s = a + jb  <->  R = aI + bJ.
RotationForm embed(ComplexPoint s);

/// J^k for k >= 0, reduced by the period-4 cycle {I, J, -I, -J}.
Mat2 j_power(unsigned k);

/// The rotation form of s^k, via the spectral decomposition
/// R^k = lambda1^k E1 + lambda2^k E2 reduced to real operations
/// (polar form r^k (cos k*theta, sin k*theta)).
RotationForm rot_power(RotationForm r, unsigned k);

/// Field arithmetic carried out on rotation forms. Division throws
/// DivisionByZeroRotation when the divisor has a^2 + b^2 = 0.
RotationForm field_op(RotationForm r1, RotationForm r2, FieldOp op);

/// Companion form of the point. Throws RealAxisPoint when b = 0; callers
/// fall back to plain real Horner in that case.
CompanionPair companion(ComplexPoint s);

}  // namespace rotpoly
