#pragma once

#include <cmath>

namespace rotpoly {

/// Fixed 2-vector; carrier for the Horner accumulators z.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

/// Fixed 2x2 real matrix, row-major. Carrier for R, J, R_c, T, U, G, A, B.
struct Mat2 {
  double m00 = 0.0, m01 = 0.0;
  double m10 = 0.0, m11 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  constexpr Mat2 transpose() const { return {m00, m10, m01, m11}; }
  constexpr double trace() const { return m00 + m11; }
  constexpr double det() const { return m00 * m11 - m01 * m10; }
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

constexpr Mat2 operator*(double s, const Mat2& m) {
  return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
  return {m.m00 * v.x + m.m01 * v.y, m.m10 * v.x + m.m11 * v.y};
}

constexpr Mat2 operator-(const Mat2& m) { return {-m.m00, -m.m01, -m.m10, -m.m11}; }

/// J = [[0,1],[-1,0]], the imaginary unit of the rotation-matrix field.
constexpr Mat2 j_matrix() { return {0.0, 1.0, -1.0, 0.0}; }

inline double max_abs_entry(const Mat2& m) {
  return std::max(std::max(std::fabs(m.m00), std::fabs(m.m01)),
                  std::max(std::fabs(m.m10), std::fabs(m.m11)));
}

}  // namespace rotpoly
