#include "rotpoly/freqresp.hpp"

#include <cmath>
#include <limits>

#include "rotpoly/phase.hpp"

namespace rotpoly {

namespace {

constexpr double kQuietNan = std::numeric_limits<double>::quiet_NaN();

bool identically_zero(const PolySpec& p) {
  for (double a : p.alpha) {
    if (a != 0.0) return false;
  }
  for (double b : p.beta) {
    if (b != 0.0) return false;
  }
  return true;
}

/// z_{l+1} = [[0,1],[-omega^2,0]] z_l + c_l w; one mult and one add per step.
Vec2 jomega_accumulate(std::span<const double> coeffs, double neg_omega_sq, OpCounter& ops) {
  Vec2 z{};
  for (double c : coeffs) {
    z = Vec2{z.y, neg_omega_sq * z.x + c};
    ops.mults += 1;
    ops.adds += 1;
  }
  return z;
}

}  // namespace

TransferFunctionSpec::TransferFunctionSpec(PolySpec num, PolySpec den, double k)
    : numerator(std::move(num)), denominator(std::move(den)), gain(k) {
  if (identically_zero(denominator)) {
    throw SpecError("transfer function denominator is identically zero");
  }
  if (!std::isfinite(gain)) throw SpecError("transfer function gain must be finite");
}

FrequencyGrid::FrequencyGrid(double wmin, double wmax, std::size_t count, GridScale s)
    : omega_min(wmin), omega_max(wmax), points(count), scale(s) {
  if (!std::isfinite(wmin) || !std::isfinite(wmax) || points < 1 || wmin > wmax) {
    throw SpecError("frequency grid requires finite omega_min <= omega_max and points >= 1");
  }
  if (scale == GridScale::log && wmin <= 0.0) {
    throw SpecError("log frequency grid requires omega_min > 0");
  }
}

std::vector<double> FrequencyGrid::omegas() const {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = omega_min;
    return out;
  }
  const double span = static_cast<double>(points - 1);
  if (scale == GridScale::log) {
    const double ratio = omega_max / omega_min;
    for (std::size_t i = 0; i < points; ++i) {
      out[i] = omega_min * std::pow(ratio, static_cast<double>(i) / span);
    }
  } else {
    for (std::size_t i = 0; i < points; ++i) {
      out[i] = omega_min + (omega_max - omega_min) * static_cast<double>(i) / span;
    }
  }
  out.front() = omega_min;
  out.back() = omega_max;
  return out;
}

EvalResult eval_jomega(const PolySpec& poly, double omega) {
  if (!std::isfinite(omega)) throw SpecError("omega must be finite");
  if (omega == 0.0) return eval_complex(poly, ComplexPoint(0.0, 0.0));

  EvalResult res;
  const double neg_omega_sq = -(omega * omega);
  res.ops.mults += 1;
  if (poly.kind() == CoeffKind::real) {
    res.z_alpha = jomega_accumulate(poly.alpha, neg_omega_sq, res.ops);
    // [u; v] = [[0,1],[omega,0]] z
    res.u = res.z_alpha.y;
    res.v = omega * res.z_alpha.x;
    res.ops.mults += 1;
    return res;
  }
  res.z_alpha = jomega_accumulate(poly.alpha, neg_omega_sq, res.ops);
  res.z_beta = jomega_accumulate(poly.beta, neg_omega_sq, res.ops);
  // [u; v] = [[0,1],[omega,0]] z_a + [[-omega,0],[0,1]] z_b
  res.u = res.z_alpha.y - omega * res.z_beta.x;
  res.v = omega * res.z_alpha.x + res.z_beta.y;
  res.ops.mults += 2;
  res.ops.adds += 2;
  return res;
}

double abs_squared_jomega(const PolySpec& poly, double omega) {
  if (!std::isfinite(omega)) throw SpecError("omega must be finite");
  if (omega == 0.0) {
    const EvalResult ev = eval_complex(poly, ComplexPoint(0.0, 0.0));
    return ev.u * ev.u + ev.v * ev.v;
  }
  OpCounter scratch;
  const double omega_sq = omega * omega;
  const double neg_omega_sq = -omega_sq;
  const Vec2 za = jomega_accumulate(poly.alpha, neg_omega_sq, scratch);
  if (poly.kind() == CoeffKind::real) {
    // z^T diag(omega^2, 1) z
    return omega_sq * za.x * za.x + za.y * za.y;
  }
  const Vec2 zb = jomega_accumulate(poly.beta, neg_omega_sq, scratch);
  // [z_a^T z_b^T] [[w2,0,0,w],[0,1,-w,0],[0,-w,w2,0],[w,0,0,1]] [z_a; z_b]
  return omega_sq * (za.x * za.x + zb.x * zb.x) + za.y * za.y + zb.y * zb.y +
         2.0 * omega * (za.x * zb.y - za.y * zb.x);
}

FrequencySample response_at(const TransferFunctionSpec& tf, double omega, OpCounter* ops) {
  FrequencySample s;
  s.omega = omega;
  const EvalResult num = eval_jomega(tf.numerator, omega);
  const EvalResult den = eval_jomega(tf.denominator, omega);
  if (ops != nullptr) {
    *ops += num.ops;
    *ops += den.ops;
  }
  s.u_q = num.u;
  s.v_q = num.v;
  s.u_p = den.u;
  s.v_p = den.v;
  const double den2 = den.u * den.u + den.v * den.v;
  if (den2 < std::numeric_limits<double>::min()) {
    s.pole = true;
    s.magnitude = s.phase = s.re_h = s.im_h = kQuietNan;
    return s;
  }
  const double num2 = num.u * num.u + num.v * num.v;
  s.magnitude = std::fabs(tf.gain) * std::sqrt(num2 / den2);
  double phi = std::atan2(num.v * den.u - num.u * den.v, num.u * den.u + num.v * den.v);
  if (tf.gain < 0.0) phi += std::numbers::pi;
  s.phase = wrap_phase(phi);
  s.re_h = s.magnitude * std::cos(s.phase);
  s.im_h = s.magnitude * std::sin(s.phase);
  return s;
}

SweepResult sweep(const TransferFunctionSpec& tf, const FrequencyGrid& grid) {
  SweepResult result;
  const std::vector<double> ws = grid.omegas();
  result.samples.reserve(ws.size());
  for (double w : ws) {
    result.samples.push_back(response_at(tf, w, &result.ops));
  }
  return result;
}

OpCounter predicted_ops(std::size_t degree, CoeffKind kind) {
  const std::uint64_t n = degree;
  if (kind == CoeffKind::complex) return {2 * (n + 4), 2 * (n + 1)};
  return {n + 4, n + 1};
}

OpCounter baseline_ops(std::size_t degree) {
  const std::uint64_t n = degree;
  return {6 * (n + 1) + 2, 2 * (n + 1)};
}

EvalResult conventional_eval(const PolySpec& poly, double omega) {
  if (!std::isfinite(omega)) throw SpecError("omega must be finite");
  EvalResult res;
  double wr = poly.alpha[0];
  double wi = poly.beta[0];
  const double sr = 0.0;  // s = j omega handled as a general complex number
  const double si = omega;
  for (std::size_t l = 1; l < poly.alpha.size(); ++l) {
    const double pr = sr * wr - si * wi;
    const double pi = sr * wi + si * wr;
    res.ops.mults += 6;  // four real mults + two real adds, all booked as mults
    wr = pr + poly.alpha[l];
    wi = pi + poly.beta[l];
    res.ops.adds += 2;
  }
  res.u = wr;
  res.v = wi;
  return res;
}

}  // namespace rotpoly
