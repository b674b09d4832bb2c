#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotpoly/rotalgebra.hpp"

namespace rotpoly {

/// Tally of real floating-point operations actually executed. Index
/// arithmetic and comparisons are never counted; multiplications by the
/// structural constants 0 and 1 inside the companion matrix are not
/// executed and therefore not counted.
struct OpCounter {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;  ///< additions and subtractions

  OpCounter& operator+=(const OpCounter& o) {
    mults += o.mults;
    adds += o.adds;
    return *this;
  }
};

enum class CoeffKind { real, complex };

/// One-variable polynomial p(s) = sum_l (alpha_l + j beta_l) s^{n-l}.
///
/// Coefficients are in DESCENDING powers: alpha[0] multiplies s^n and
/// alpha[n] is the constant term. Most polynomial libraries use the
/// opposite order; callers converting from them must reverse.
struct PolySpec {
  std::vector<double> alpha;
  std::vector<double> beta;  ///< imaginary parts; all zero for real polynomials

  /// Real-coefficient polynomial (beta is filled with zeros).
  explicit PolySpec(std::vector<double> real_coeffs);
  /// Complex-coefficient polynomial. Lists must be non-empty, of equal
  /// length, and finite; throws SpecError otherwise.
  PolySpec(std::vector<double> real_coeffs, std::vector<double> imag_coeffs);

  std::size_t degree() const { return alpha.size() - 1; }
  /// real iff every beta entry is exactly zero.
  CoeffKind kind() const;
};

/// Result of one evaluation: value u + jv, the raw final accumulators of
/// the two companion recursions, and the operations spent.
struct EvalResult {
  double u = 0.0;
  double v = 0.0;
  Vec2 z_alpha{};
  Vec2 z_beta{};
  OpCounter ops{};
};

/// Runs the real-coefficient companion recursion z_{l+1} = R_c z_l + c_l w
/// from z_0 = 0 and returns z_{n+1}. One application of R_c and one
/// coefficient addition per step. Throws RealAxisPoint when point.b = 0.
Vec2 horner_accumulate(std::span<const double> coeffs, ComplexPoint point, OpCounter& ops);

/// Value of a real-coefficient polynomial at a complex point. On the real
/// axis (b = 0) this evaluates by plain real Horner, which is exact, so the
/// call is total over finite points. Throws SpecError if the polynomial has
/// complex coefficients.
EvalResult eval_real(const PolySpec& poly, ComplexPoint point);

/// Value of a polynomial with complex coefficients: two companion
/// recursions sharing one R_c, combined as (u, v) = (u_a - v_b, v_a + u_b).
/// Falls back to real Horner on both coefficient lists when b = 0.
EvalResult eval_complex(const PolySpec& poly, ComplexPoint point);

/// dp/ds at the point, evaluated by running the same recursions on the
/// scaled coefficients nu_l = (n - l) gamma_l for l = 0..n-1. A degree-0
/// polynomial differentiates to zero and returns (0, 0).
EvalResult eval_derivative(const PolySpec& poly, ComplexPoint point);

/// |p(s)|^2 via the conjugate-product quadratic form
///   [z_a^T z_b^T] [[A, B], [-B, A]] [z_a; z_b]
/// with A = [[a^2+b^2, -a], [-a, 1]] and B = [[0, b], [-b, 0]].
/// Uses u^2 + v^2 when b = 0.
double abs_squared(const PolySpec& poly, ComplexPoint point);

/// p(s) + p*(s*) = 2 u_p, computed as 2 [0 1] (A z_a + B z_b).
double conj_sum(const PolySpec& poly, ComplexPoint point);

/// The real scalar d in p(s) - p*(s*) = j d (equal to 2 v_p), computed as
/// 2 [0 1] (-B z_a + A z_b).
double conj_diff_imag(const PolySpec& poly, ComplexPoint point);

/// 1/p(s) = p*(s*) / |p(s)|^2. Throws EvaluationAtRoot when the modulus
/// underflows (the point is a root).
ComplexPoint reciprocal(const PolySpec& poly, ComplexPoint point);

namespace detail {

/// Precomputed nontrivial entries of R_c. Building one costs 3 mults and
/// 1 add, charged to the counter once and shared by both recursions.
struct CompanionCoeffs {
  double neg_norm;  ///< -(a^2 + b^2)
  double twice_a;   ///< 2a
};

CompanionCoeffs make_companion_coeffs(ComplexPoint point, OpCounter& ops);

/// One recursion over the whole coefficient list using prebuilt R_c entries.
Vec2 accumulate(std::span<const double> coeffs, const CompanionCoeffs& rc, OpCounter& ops);

/// Plain real Horner; n mults and n adds.
double real_horner(std::span<const double> coeffs, double x, OpCounter& ops);

}  // namespace detail

}  // namespace rotpoly
