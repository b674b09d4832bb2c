#include "rotpoly/horner1d.hpp"

#include <cmath>
#include <limits>

namespace rotpoly {

namespace {

void validate_coeffs(const std::vector<double>& alpha, const std::vector<double>& beta) {
  if (alpha.empty() || alpha.size() != beta.size()) {
    throw SpecError("coefficient lists must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!std::isfinite(alpha[i]) || !std::isfinite(beta[i])) {
      throw SpecError("coefficients must be finite");
    }
  }
}

/// T z = [u; -v] with T = [[-a,1],[-b,0]]; 2 mults, 1 add.
Vec2 extract(ComplexPoint point, Vec2 z, OpCounter& ops) {
  Vec2 out{-point.a * z.x + z.y, -point.b * z.x};
  ops.mults += 2;
  ops.adds += 1;
  return out;
}

}  // namespace

PolySpec::PolySpec(std::vector<double> real_coeffs)
    : alpha(std::move(real_coeffs)), beta(alpha.size(), 0.0) {
  validate_coeffs(alpha, beta);
}

PolySpec::PolySpec(std::vector<double> real_coeffs, std::vector<double> imag_coeffs)
    : alpha(std::move(real_coeffs)), beta(std::move(imag_coeffs)) {
  validate_coeffs(alpha, beta);
}

CoeffKind PolySpec::kind() const {
  for (double b : beta) {
    if (b != 0.0) return CoeffKind::complex;
  }
  return CoeffKind::real;
}

namespace detail {

CompanionCoeffs make_companion_coeffs(ComplexPoint point, OpCounter& ops) {
  const double norm = point.a * point.a + point.b * point.b;
  ops.mults += 3;  // a*a, b*b, 2*a
  ops.adds += 1;
  return {-norm, 2.0 * point.a};
}

Vec2 accumulate(std::span<const double> coeffs, const CompanionCoeffs& rc, OpCounter& ops) {
  Vec2 z{};
  for (double c : coeffs) {
    // z' = R_c z + c w; the top row of R_c is structurally [0 1].
    z = Vec2{z.y, rc.neg_norm * z.x + rc.twice_a * z.y + c};
    ops.mults += 2;
    ops.adds += 2;
  }
  return z;
}

double real_horner(std::span<const double> coeffs, double x, OpCounter& ops) {
  double w = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    w = x * w + coeffs[i];
    ops.mults += 1;
    ops.adds += 1;
  }
  return w;
}

}  // namespace detail

Vec2 horner_accumulate(std::span<const double> coeffs, ComplexPoint point, OpCounter& ops) {
  if (coeffs.empty()) throw SpecError("coefficient list must be non-empty");
  if (point.on_real_axis()) throw RealAxisPoint{};
  const auto rc = detail::make_companion_coeffs(point, ops);
  return detail::accumulate(coeffs, rc, ops);
}

EvalResult eval_real(const PolySpec& poly, ComplexPoint point) {
  if (poly.kind() != CoeffKind::real) {
    throw SpecError("eval_real requires a real-coefficient polynomial");
  }
  EvalResult res;
  if (point.on_real_axis()) {
    res.u = detail::real_horner(poly.alpha, point.a, res.ops);
    res.v = 0.0;
    res.z_alpha = {0.0, res.u};
    return res;
  }
  const auto rc = detail::make_companion_coeffs(point, res.ops);
  res.z_alpha = detail::accumulate(poly.alpha, rc, res.ops);
  const Vec2 tz = extract(point, res.z_alpha, res.ops);
  res.u = tz.x;
  res.v = -tz.y;
  return res;
}

EvalResult eval_complex(const PolySpec& poly, ComplexPoint point) {
  if (poly.kind() == CoeffKind::real) return eval_real(poly, point);
  EvalResult res;
  if (point.on_real_axis()) {
    res.u = detail::real_horner(poly.alpha, point.a, res.ops);
    res.v = detail::real_horner(poly.beta, point.a, res.ops);
    res.z_alpha = {0.0, res.u};
    res.z_beta = {0.0, res.v};
    return res;
  }
  const auto rc = detail::make_companion_coeffs(point, res.ops);
  res.z_alpha = detail::accumulate(poly.alpha, rc, res.ops);
  res.z_beta = detail::accumulate(poly.beta, rc, res.ops);
  const Vec2 ta = extract(point, res.z_alpha, res.ops);
  const Vec2 tb = extract(point, res.z_beta, res.ops);
  // [u; v] = U T z_a + G T z_b with U = diag(1,-1) and G the exchange matrix.
  res.u = ta.x + tb.y;
  res.v = -ta.y + tb.x;
  res.ops.adds += 2;
  return res;
}

EvalResult eval_derivative(const PolySpec& poly, ComplexPoint point) {
  const std::size_t n = poly.degree();
  if (n == 0) return {};  // constant differentiates to zero
  OpCounter scale_ops;
  std::vector<double> nu_alpha(n), nu_beta(n);
  const bool is_complex = poly.kind() == CoeffKind::complex;
  for (std::size_t l = 0; l < n; ++l) {
    const double f = static_cast<double>(n - l);
    nu_alpha[l] = f * poly.alpha[l];
    nu_beta[l] = is_complex ? f * poly.beta[l] : 0.0;
  }
  scale_ops.mults += (is_complex ? 2 : 1) * static_cast<std::uint64_t>(n);
  EvalResult res = eval_complex(PolySpec(std::move(nu_alpha), std::move(nu_beta)), point);
  res.ops += scale_ops;
  return res;
}

namespace {

/// z_a^T A z_a + z_b^T A z_b + 2 z_a^T B z_b with the conjugate-product blocks.
double conjugate_quadratic_form(ComplexPoint point, Vec2 za, Vec2 zb, bool with_beta) {
  const double norm = point.a * point.a + point.b * point.b;
  const double quad_a = norm * za.x * za.x - 2.0 * point.a * za.x * za.y + za.y * za.y;
  if (!with_beta) return quad_a;
  const double quad_b = norm * zb.x * zb.x - 2.0 * point.a * zb.x * zb.y + zb.y * zb.y;
  const double cross = point.b * (za.x * zb.y - za.y * zb.x);
  return quad_a + quad_b + 2.0 * cross;
}

struct ConjParts {
  Vec2 za{};
  Vec2 zb{};
  bool with_beta = false;
};

ConjParts run_accumulators(const PolySpec& poly, ComplexPoint point) {
  OpCounter scratch;
  const auto rc = detail::make_companion_coeffs(point, scratch);
  ConjParts parts;
  parts.za = detail::accumulate(poly.alpha, rc, scratch);
  parts.with_beta = poly.kind() == CoeffKind::complex;
  if (parts.with_beta) parts.zb = detail::accumulate(poly.beta, rc, scratch);
  return parts;
}

}  // namespace

double abs_squared(const PolySpec& poly, ComplexPoint point) {
  if (point.on_real_axis()) {
    const EvalResult ev = eval_complex(poly, point);
    return ev.u * ev.u + ev.v * ev.v;
  }
  const ConjParts parts = run_accumulators(poly, point);
  return conjugate_quadratic_form(point, parts.za, parts.zb, parts.with_beta);
}

double conj_sum(const PolySpec& poly, ComplexPoint point) {
  if (point.on_real_axis()) return 2.0 * eval_complex(poly, point).u;
  const ConjParts parts = run_accumulators(poly, point);
  const double norm = point.a * point.a + point.b * point.b;
  const Mat2 a_block{norm, -point.a, -point.a, 1.0};
  const Mat2 b_block{0.0, point.b, -point.b, 0.0};
  const Vec2 sum = a_block * parts.za + b_block * parts.zb;
  return 2.0 * sum.y;
}

double conj_diff_imag(const PolySpec& poly, ComplexPoint point) {
  if (point.on_real_axis()) return 2.0 * eval_complex(poly, point).v;
  const ConjParts parts = run_accumulators(poly, point);
  const double norm = point.a * point.a + point.b * point.b;
  const Mat2 a_block{norm, -point.a, -point.a, 1.0};
  const Mat2 b_block{0.0, point.b, -point.b, 0.0};
  const Vec2 diff = (-b_block) * parts.za + a_block * parts.zb;
  return 2.0 * diff.y;
}

ComplexPoint reciprocal(const PolySpec& poly, ComplexPoint point) {
  const EvalResult ev = eval_complex(poly, point);
  const double m2 = ev.u * ev.u + ev.v * ev.v;
  if (m2 < std::numeric_limits<double>::min()) throw EvaluationAtRoot{};
  return {ev.u / m2, -ev.v / m2};
}

}  // namespace rotpoly
