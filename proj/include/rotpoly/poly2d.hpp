#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rotpoly/horner1d.hpp"

namespace rotpoly {

/// Two-variable polynomial p(s1, s2) = sum_l sum_k P(l,k) s1^{n2-l} s2^{m2-k}.
/// Rows index descending powers of s1, columns descending powers of s2.
struct Poly2DSpec {
  std::size_t rows = 0;  ///< n2 + 1
  std::size_t cols = 0;  ///< m2 + 1
  std::vector<double> p;  ///< row-major

  Poly2DSpec(std::size_t n_rows, std::size_t n_cols, std::vector<double> entries);
  static Poly2DSpec from_rows(const std::vector<std::vector<double>>& row_lists);

  double at(std::size_t l, std::size_t k) const { return p[l * cols + k]; }
  std::size_t s1_degree() const { return rows - 1; }
  std::size_t s2_degree() const { return cols - 1; }
};

/// Rank-1 factorization P = eta * rho^T, i.e. p(s1,s2) = p1(s1) p2(s2)
/// with p1 coefficients eta and p2 coefficients rho (descending powers).
struct SeparableFactors {
  std::vector<double> eta;
  std::vector<double> rho;
};

/// Value of a 2D evaluation: eta_p + j theta_p, plus the per-column inner
/// results f_k(s1) = alpha_k + j beta_k from the horizontal pass.
struct Eval2DResult {
  double re = 0.0;
  double im = 0.0;
  std::vector<std::pair<double, double>> inner_parts;
};

struct Response2D {
  double magnitude = 0.0;
  double phase = 0.0;  ///< radians in (-pi, pi]
  double re = 0.0;
  double im = 0.0;
};

/// Attempts a rank-1 factorization. Integer matrices factor by row/column
/// gcds (scaled by the overall content); general matrices factor by pivot
/// row/column division. Factors are returned only when the relative
/// Frobenius reconstruction residual is within tol. Throws ZeroMatrix for
/// an all-zero P, SpecError for tol <= 0.
std::optional<SeparableFactors> check_separable(const Poly2DSpec& p2d, double tol);

/// Evaluates the two one-variable factors and combines them by complex
/// multiplication (magnitudes multiply, phases add).
Eval2DResult eval_separable(const SeparableFactors& factors, ComplexPoint s1, ComplexPoint s2);

/// General two-pass evaluation: the horizontal pass runs the companion
/// recursion of s1 down each column, the vertical pass runs two companion
/// recursions of s2 driven by the per-column real/imaginary parts, combined
/// as [re; im] = T2 u + J^T T2 v. Degenerate axes (b1 = 0 or b2 = 0) fall
/// back to plain real Horner for the affected pass.
Eval2DResult eval2d(const Poly2DSpec& p2d, ComplexPoint s1, ComplexPoint s2);

/// Magnitude and phase of q/p at the point pair, with re/im reconstructed
/// from them. Throws PoleAtPoint when the denominator modulus underflows.
Response2D response2d(const Poly2DSpec& q2d, const Poly2DSpec& p2d, ComplexPoint s1,
                      ComplexPoint s2);

}  // namespace rotpoly
