#pragma once

#include <cstddef>
#include <vector>

#include "rotpoly/horner1d.hpp"

namespace rotpoly {

/// H(s) = K q(s) / p(s).
struct TransferFunctionSpec {
  PolySpec numerator;
  PolySpec denominator;
  double gain = 1.0;

  /// Throws SpecError if the denominator is identically zero or the gain is
  /// not finite. An improper ratio (deg q > deg p) is accepted; callers that
  /// care should check proper() and warn.
  TransferFunctionSpec(PolySpec num, PolySpec den, double k = 1.0);

  bool proper() const { return numerator.degree() <= denominator.degree(); }
};

/// One point of a frequency sweep. When `pole` is set the denominator
/// modulus underflowed at this omega and the dependent fields are NaN.
struct FrequencySample {
  double omega = 0.0;
  double u_q = 0.0, v_q = 0.0;  ///< numerator real/imag parts
  double u_p = 0.0, v_p = 0.0;  ///< denominator real/imag parts
  double magnitude = 0.0;       ///< |H(j omega)|, absolute units
  double phase = 0.0;           ///< radians in (-pi, pi]
  double re_h = 0.0, im_h = 0.0;
  bool pole = false;
};

enum class GridScale { log, linear };

struct FrequencyGrid {
  double omega_min = 0.0;
  double omega_max = 0.0;
  std::size_t points = 1;
  GridScale scale = GridScale::log;

  /// Validates: points >= 1, omega_min <= omega_max, both finite, and
  /// omega_min > 0 for log scale. Throws SpecError otherwise.
  FrequencyGrid(double wmin, double wmax, std::size_t count, GridScale s);

  /// Grid values, ascending, endpoints included exactly.
  std::vector<double> omegas() const;
};

struct SweepResult {
  std::vector<FrequencySample> samples;
  OpCounter ops;  ///< total over all samples
};

/// Value of p at s = j omega via the specialized companion recursion
/// z_{l+1} = [[0,1],[-omega^2,0]] z_l + gamma_l w and the extraction
/// matrices [[0,1],[omega,0]] and [[-omega,0],[0,1]]. Results equal
/// eval_complex at (0, omega); omega = 0 uses the real-axis fallback.
EvalResult eval_jomega(const PolySpec& poly, double omega);

/// |p(j omega)|^2. Complex coefficients use the 4x4 conjugate-product form;
/// real coefficients reduce to z^T diag(omega^2, 1) z; omega = 0 uses
/// u^2 + v^2.
double abs_squared_jomega(const PolySpec& poly, double omega);

/// Single frequency-response sample: magnitude |K| sqrt((u_q^2+v_q^2)/(u_p^2+v_p^2)),
/// full-quadrant phase from the numerator/denominator cross terms, and
/// re/im reconstructed as magnitude*cos/sin(phase). A vanishing denominator
/// flags the sample as a pole instead of failing. Operations spent are added
/// to *ops when given.
FrequencySample response_at(const TransferFunctionSpec& tf, double omega, OpCounter* ops = nullptr);

/// One sample per grid point, ascending in omega, with aggregate counters.
SweepResult sweep(const TransferFunctionSpec& tf, const FrequencyGrid& grid);

/// Per-frequency operation counts this method is reported to take:
/// complex kind 2(n+4) mults and 2(n+1) adds; the real-coefficient path
/// costs about half, (n+4) and (n+1). Measured counts never exceed these.
OpCounter predicted_ops(std::size_t degree, CoeffKind kind);

/// Conventional-method budget for comparison reports: 6(n+1)+2 mults and
/// 2(n+1) adds per frequency.
OpCounter baseline_ops(std::size_t degree);

/// Textbook complex-arithmetic Horner at s = j omega. Values match
/// eval_jomega; the counter realizes the conventional accounting, where each
/// complex*complex multiply spends four real multiplications plus two real
/// additions and all six are booked against the multiplication budget.
EvalResult conventional_eval(const PolySpec& poly, double omega);

}  // namespace rotpoly
