#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotpoly/freqresp.hpp"

namespace rotpoly {

/// Transfer function in factored time-constant form,
/// G(s) = prod(1 + T_n s) / prod(1 + T_d s), all T > 0.
struct TimeConstantForm {
  std::vector<double> numerator_tcs;
  std::vector<double> denominator_tcs;

  /// Throws SpecError unless every entry is finite and > 0. More numerator
  /// factors than denominator factors is accepted (callers may warn).
  TimeConstantForm(std::vector<double> num_tcs, std::vector<double> den_tcs);
};

/// Dense square matrix, row-major. Just enough algebra for the Leverrier
/// recursion and matrix powers; not a general linear-algebra type.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<double> e;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order) : n(order), e(order * order, 0.0) {}
  SquareMatrix(std::size_t order, std::vector<double> entries);

  static SquareMatrix identity(std::size_t order);

  double& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

  double trace() const;
  double frobenius_norm() const;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(double s, const SquareMatrix& m);

/// Single-input single-output state-space model
/// x' = A x + B u, y = C x.
struct StateSpace {
  SquareMatrix a;         ///< n x n state matrix
  std::vector<double> b;  ///< n x 1 input vector
  std::vector<double> c;  ///< 1 x n output vector

  /// Throws DimensionMismatch when sizes disagree, SpecError on non-finite
  /// entries or an empty system.
  StateSpace(SquareMatrix a_matrix, std::vector<double> b_vector, std::vector<double> c_vector);

  std::size_t order() const { return a.n; }
};

/// Output of the Leverrier recursion: characteristic polynomial
/// coefficients p_0..p_n (monic, descending), numerator coefficients
/// q_1..q_n of C adj(sI - A) B, and the adjugate expansion matrices F_1..F_n.
struct LeverrierResult {
  std::vector<double> p_coeffs;
  std::vector<double> q_coeffs;
  std::vector<SquareMatrix> f_matrices;
};

/// Binary digits of a positive integer, most significant first.
struct BitString {
  std::vector<std::uint8_t> bits;
};

/// Coefficients of prod_i (s - r_i), monic, descending powers. Element f
/// is c_f = (-1)^f e_f(roots), the signed elementary symmetric polynomial.
/// Computed by multiplying out one factor at a time.
std::vector<double> expand_roots(std::span<const double> roots);

/// c_f alone.
double expand_root_coeff(std::span<const double> roots, std::size_t f);

/// Converts factored time-constant form to a transfer function with monic
/// numerator/denominator (roots -1/T) and the gain K = prod T_n / prod T_d
/// factored out.
TransferFunctionSpec tc_to_tf(const TimeConstantForm& form);

/// Leverrier–Faddeeva: F_1 = I, p_l = -tr(A F_l)/l, F_{l+1} = A F_l + p_l I,
/// with q_k = C F_k B. The closure A F_n + p_n I = 0 holds to roundoff for
/// well-conditioned A; accuracy degrades for orders much beyond 20.
LeverrierResult leverrier(const StateSpace& ss);

/// Same output computed from the closed forms
/// F_k = sum_{l<k} p_l A^{k-l-1} and p_k = -(1/k) sum_{l<k} p_l tr(A^{k-l}).
/// Slower than the fused recursion; kept as an independent cross-check.
LeverrierResult leverrier_closed_form_check(const StateSpace& ss);

/// Binary expansion, MSB first. Throws NonPositive when rho < 1.
BitString to_bits(std::uint64_t rho);

struct MatPowResult {
  SquareMatrix value;
  std::size_t matrix_mults = 0;  ///< at most 2*(bit length - 1)
};

/// A^rho by left-to-right square-and-multiply over the bits of rho:
/// starting from A, square per bit and multiply by A on set bits.
/// Throws NonPositive when rho < 1.
MatPowResult mat_pow(const SquareMatrix& a, std::uint64_t rho);

}  // namespace rotpoly
