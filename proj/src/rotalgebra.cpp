#include "rotpoly/rotalgebra.hpp"

#include <cmath>

namespace rotpoly {

ComplexPoint::ComplexPoint(double re, double im) : a(re), b(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw SpecError("complex point components must be finite");
  }
}

RotationForm embed(ComplexPoint s) { return {s.a, s.b}; }

Mat2 j_power(unsigned k) {
  switch (k % 4u) {
    case 0u: return Mat2::identity();
    case 1u: return j_matrix();
    case 2u: return -Mat2::identity();
    default: return -j_matrix();
  }
}

RotationForm rot_power(RotationForm r, unsigned k) {
  if (k == 0) return {1.0, 0.0};
  const double rho = std::hypot(r.a, r.b);
  if (rho == 0.0) return {0.0, 0.0};
  const double theta = std::atan2(r.b, r.a);
  const double scale = std::pow(rho, static_cast<double>(k));
  return {scale * std::cos(k * theta), scale * std::sin(k * theta)};
}

RotationForm field_op(RotationForm r1, RotationForm r2, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return {r1.a + r2.a, r1.b + r2.b};
    case FieldOp::sub:
      return {r1.a - r2.a, r1.b - r2.b};
    case FieldOp::mul:
      return {r1.a * r2.a - r1.b * r2.b, r2.a * r1.b + r1.a * r2.b};
    case FieldOp::div: {
      const double d = r2.norm_squared();
      if (d == 0.0) throw DivisionByZeroRotation{};
      return {(r1.a * r2.a + r1.b * r2.b) / d, (r2.a * r1.b - r1.a * r2.b) / d};
    }
  }
  throw DomainError("unknown field operation");
}

CompanionPair companion(ComplexPoint s) {
  if (s.on_real_axis()) throw RealAxisPoint{};
  const double norm = s.a * s.a + s.b * s.b;
  return {{0.0, 1.0, -norm, 2.0 * s.a}, {-s.a, 1.0, -s.b, 0.0}};
}

}  // namespace rotpoly
