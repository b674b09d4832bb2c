#include "rotpoly/poly2d.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "rotpoly/phase.hpp"

namespace rotpoly {

Poly2DSpec::Poly2DSpec(std::size_t n_rows, std::size_t n_cols, std::vector<double> entries)
    : rows(n_rows), cols(n_cols), p(std::move(entries)) {
  if (rows == 0 || cols == 0 || p.size() != rows * cols) {
    throw SpecError("2D coefficient matrix must be non-empty and rectangular");
  }
  for (double x : p) {
    if (!std::isfinite(x)) throw SpecError("2D coefficients must be finite");
  }
}

Poly2DSpec Poly2DSpec::from_rows(const std::vector<std::vector<double>>& row_lists) {
  if (row_lists.empty() || row_lists.front().empty()) {
    throw SpecError("2D coefficient matrix must be non-empty");
  }
  const std::size_t cols = row_lists.front().size();
  std::vector<double> flat;
  flat.reserve(row_lists.size() * cols);
  for (const auto& row : row_lists) {
    if (row.size() != cols) throw SpecError("2D coefficient rows must have equal length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Poly2DSpec(row_lists.size(), cols, std::move(flat));
}

namespace {

double frobenius(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

bool integral_entries(const Poly2DSpec& p2d) {
  for (double x : p2d.p) {
    if (std::trunc(x) != x || std::fabs(x) > 9.007199254740992e15) return false;
  }
  return true;
}

/// Row/column gcd factors per the separable construction, scaled by the
/// overall content so that eta * rho^T reproduces P rather than content * P.
SeparableFactors gcd_factors(const Poly2DSpec& p2d, std::size_t pl, std::size_t pk) {
  SeparableFactors f;
  f.eta.assign(p2d.rows, 0.0);
  f.rho.assign(p2d.cols, 0.0);
  std::uint64_t content = 0;
  for (std::size_t l = 0; l < p2d.rows; ++l) {
    std::uint64_t g = 0;
    for (std::size_t k = 0; k < p2d.cols; ++k) {
      g = std::gcd(g, static_cast<std::uint64_t>(std::fabs(p2d.at(l, k))));
    }
    f.eta[l] = static_cast<double>(g);
    content = std::gcd(content, g);
  }
  for (std::size_t k = 0; k < p2d.cols; ++k) {
    std::uint64_t g = 0;
    for (std::size_t l = 0; l < p2d.rows; ++l) {
      g = std::gcd(g, static_cast<std::uint64_t>(std::fabs(p2d.at(l, k))));
    }
    f.rho[k] = static_cast<double>(g) / static_cast<double>(content);
  }
  // Signs: rho follows the pivot row, eta follows the pivot column.
  const double pivot_sign = sign_of(p2d.at(pl, pk));
  for (std::size_t k = 0; k < p2d.cols; ++k) f.rho[k] *= sign_of(p2d.at(pl, k));
  for (std::size_t l = 0; l < p2d.rows; ++l) {
    f.eta[l] *= sign_of(p2d.at(l, pk)) * pivot_sign;
  }
  return f;
}

/// rho is the pivot row verbatim; eta is the pivot column divided by the
/// pivot entry, so eta at the pivot row is one.
SeparableFactors pivot_factors(const Poly2DSpec& p2d, std::size_t pl, std::size_t pk) {
  SeparableFactors f;
  f.eta.assign(p2d.rows, 0.0);
  f.rho.assign(p2d.cols, 0.0);
  const double pivot = p2d.at(pl, pk);
  for (std::size_t k = 0; k < p2d.cols; ++k) f.rho[k] = p2d.at(pl, k);
  for (std::size_t l = 0; l < p2d.rows; ++l) f.eta[l] = p2d.at(l, pk) / pivot;
  return f;
}

double reconstruction_residual(const Poly2DSpec& p2d, const SeparableFactors& f) {
  double s = 0.0;
  for (std::size_t l = 0; l < p2d.rows; ++l) {
    for (std::size_t k = 0; k < p2d.cols; ++k) {
      const double d = p2d.at(l, k) - f.eta[l] * f.rho[k];
      s += d * d;
    }
  }
  return std::sqrt(s) / frobenius(p2d.p);
}

struct InnerParts {
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// Horizontal pass: f_k(s1) = alpha_k + j beta_k per column, via the
/// companion recursion w_{l+1,k} = R_c1 w_{lk} + p_lk e and
/// [alpha_k; beta_k] = T1 w with T1 = [[-a1, 1], [b1, 0]].
InnerParts horizontal_pass(const Poly2DSpec& p2d, ComplexPoint s1) {
  InnerParts parts;
  parts.alpha.assign(p2d.cols, 0.0);
  parts.beta.assign(p2d.cols, 0.0);
  if (s1.on_real_axis()) {
    for (std::size_t k = 0; k < p2d.cols; ++k) {
      double w = p2d.at(0, k);
      for (std::size_t l = 1; l < p2d.rows; ++l) w = s1.a * w + p2d.at(l, k);
      parts.alpha[k] = w;
    }
    return parts;
  }
  const double neg_norm = -(s1.a * s1.a + s1.b * s1.b);
  const double twice_a = 2.0 * s1.a;
  for (std::size_t k = 0; k < p2d.cols; ++k) {
    Vec2 w{};
    for (std::size_t l = 0; l < p2d.rows; ++l) {
      w = Vec2{w.y, neg_norm * w.x + twice_a * w.y + p2d.at(l, k)};
    }
    parts.alpha[k] = -s1.a * w.x + w.y;
    parts.beta[k] = s1.b * w.x;
  }
  return parts;
}

}  // namespace

std::optional<SeparableFactors> check_separable(const Poly2DSpec& p2d, double tol) {
  if (!(tol > 0.0)) throw SpecError("separability tolerance must be positive");
  std::size_t pl = 0, pk = 0;
  double best = 0.0;
  for (std::size_t l = 0; l < p2d.rows; ++l) {
    for (std::size_t k = 0; k < p2d.cols; ++k) {
      if (std::fabs(p2d.at(l, k)) > best) {
        best = std::fabs(p2d.at(l, k));
        pl = l;
        pk = k;
      }
    }
  }
  if (best == 0.0) throw ZeroMatrix{};
  if (integral_entries(p2d)) {
    SeparableFactors f = gcd_factors(p2d, pl, pk);
    if (reconstruction_residual(p2d, f) <= tol) return f;
  }
  SeparableFactors f = pivot_factors(p2d, pl, pk);
  if (reconstruction_residual(p2d, f) <= tol) return f;
  return std::nullopt;
}

Eval2DResult eval_separable(const SeparableFactors& factors, ComplexPoint s1, ComplexPoint s2) {
  const EvalResult p1 = eval_real(PolySpec(factors.eta), s1);
  const EvalResult p2 = eval_real(PolySpec(factors.rho), s2);
  Eval2DResult res;
  res.re = p1.u * p2.u - p1.v * p2.v;
  res.im = p1.u * p2.v + p1.v * p2.u;
  res.inner_parts.reserve(factors.rho.size());
  for (double r : factors.rho) {
    res.inner_parts.emplace_back(r * p1.u, r * p1.v);
  }
  return res;
}

Eval2DResult eval2d(const Poly2DSpec& p2d, ComplexPoint s1, ComplexPoint s2) {
  const InnerParts parts = horizontal_pass(p2d, s1);
  Eval2DResult res;
  res.inner_parts.reserve(p2d.cols);
  for (std::size_t k = 0; k < p2d.cols; ++k) {
    res.inner_parts.emplace_back(parts.alpha[k], parts.beta[k]);
  }
  if (s2.on_real_axis()) {
    double u = parts.alpha[0];
    double v = parts.beta[0];
    for (std::size_t k = 1; k < p2d.cols; ++k) {
      u = s2.a * u + parts.alpha[k];
      v = s2.a * v + parts.beta[k];
    }
    res.re = u;
    res.im = v;
    return res;
  }
  const double neg_norm = -(s2.a * s2.a + s2.b * s2.b);
  const double twice_a = 2.0 * s2.a;
  Vec2 u{}, v{};
  for (std::size_t k = 0; k < p2d.cols; ++k) {
    u = Vec2{u.y, neg_norm * u.x + twice_a * u.y + parts.alpha[k]};
    v = Vec2{v.y, neg_norm * v.x + twice_a * v.y + parts.beta[k]};
  }
  // [re; im] = T2 u + J^T T2 v with T2 = [[-a2, 1], [b2, 0]].
  res.re = -s2.a * u.x + u.y - s2.b * v.x;
  res.im = s2.b * u.x + (-s2.a * v.x + v.y);
  return res;
}

Response2D response2d(const Poly2DSpec& q2d, const Poly2DSpec& p2d, ComplexPoint s1,
                      ComplexPoint s2) {
  const Eval2DResult num = eval2d(q2d, s1, s2);
  const Eval2DResult den = eval2d(p2d, s1, s2);
  const double den2 = den.re * den.re + den.im * den.im;
  if (den2 < std::numeric_limits<double>::min()) throw PoleAtPoint{};
  const double num2 = num.re * num.re + num.im * num.im;
  Response2D out;
  out.magnitude = std::sqrt(num2 / den2);
  out.phase = wrap_phase(std::atan2(num.im, num.re) - std::atan2(den.im, den.re));
  out.re = out.magnitude * std::cos(out.phase);
  out.im = out.magnitude * std::sin(out.phase);
  return out;
}

}  // namespace rotpoly
