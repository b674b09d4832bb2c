#include "rotpoly/sysmodel.hpp"

#include <algorithm>
#include <cmath>

namespace rotpoly {

namespace {

void check_same_order(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n != b.n) throw DimensionMismatch{};
}

}  // namespace

TimeConstantForm::TimeConstantForm(std::vector<double> num_tcs, std::vector<double> den_tcs)
    : numerator_tcs(std::move(num_tcs)), denominator_tcs(std::move(den_tcs)) {
  for (const auto* list : {&numerator_tcs, &denominator_tcs}) {
    for (double t : *list) {
      if (!(t > 0.0) || !std::isfinite(t)) {
        throw SpecError("time constants must be finite and positive");
      }
    }
  }
}

SquareMatrix::SquareMatrix(std::size_t order, std::vector<double> entries)
    : n(order), e(std::move(entries)) {
  if (e.size() != n * n) throw DimensionMismatch("entry count does not match matrix order");
  for (double x : e) {
    if (!std::isfinite(x)) throw SpecError("matrix entries must be finite");
  }
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1.0;
  return m;
}

double SquareMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

double SquareMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : e) s += x * x;
  return std::sqrt(s);
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_order(a, b);
  SquareMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      const double aik = a.at(i, k);
      for (std::size_t j = 0; j < a.n; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_order(a, b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
  return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  check_same_order(a, b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] -= b.e[i];
  return out;
}

SquareMatrix operator*(double s, const SquareMatrix& m) {
  SquareMatrix out = m;
  for (double& x : out.e) x *= s;
  return out;
}

StateSpace::StateSpace(SquareMatrix a_matrix, std::vector<double> b_vector,
                       std::vector<double> c_vector)
    : a(std::move(a_matrix)), b(std::move(b_vector)), c(std::move(c_vector)) {
  if (a.n == 0) throw SpecError("state-space model must have order >= 1");
  if (b.size() != a.n || c.size() != a.n) throw DimensionMismatch{};
  for (const auto* v : {&b, &c}) {
    for (double x : *v) {
      if (!std::isfinite(x)) throw SpecError("state-space entries must be finite");
    }
  }
}

std::vector<double> expand_roots(std::span<const double> roots) {
  std::vector<double> coeffs{1.0};
  for (double r : roots) {
    coeffs.push_back(0.0);
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
      coeffs[i] -= r * coeffs[i - 1];
    }
  }
  return coeffs;
}

double expand_root_coeff(std::span<const double> roots, std::size_t f) {
  if (f > roots.size()) throw DimensionMismatch("coefficient index exceeds root count");
  return expand_roots(roots)[f];
}

TransferFunctionSpec tc_to_tf(const TimeConstantForm& form) {
  double gain = 1.0;
  std::vector<double> num_roots, den_roots;
  num_roots.reserve(form.numerator_tcs.size());
  den_roots.reserve(form.denominator_tcs.size());
  for (double t : form.numerator_tcs) {
    gain *= t;
    num_roots.push_back(-1.0 / t);
  }
  for (double t : form.denominator_tcs) {
    gain /= t;
    den_roots.push_back(-1.0 / t);
  }
  return TransferFunctionSpec(PolySpec(expand_roots(num_roots)),
                              PolySpec(expand_roots(den_roots)), gain);
}

namespace {

double cfb_product(const std::vector<double>& c, const SquareMatrix& f,
                   const std::vector<double>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < f.n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < f.n; ++j) row += f.at(i, j) * b[j];
    out += c[i] * row;
  }
  return out;
}

}  // namespace

LeverrierResult leverrier(const StateSpace& ss) {
  const std::size_t n = ss.order();
  LeverrierResult res;
  res.p_coeffs.reserve(n + 1);
  res.p_coeffs.push_back(1.0);
  res.f_matrices.reserve(n);
  res.f_matrices.push_back(SquareMatrix::identity(n));
  for (std::size_t l = 1; l <= n; ++l) {
    const SquareMatrix af = ss.a * res.f_matrices.back();
    const double pl = -af.trace() / static_cast<double>(l);
    res.p_coeffs.push_back(pl);
    if (l < n) res.f_matrices.push_back(af + pl * SquareMatrix::identity(n));
  }
  res.q_coeffs.reserve(n);
  for (const SquareMatrix& f : res.f_matrices) {
    res.q_coeffs.push_back(cfb_product(ss.c, f, ss.b));
  }
  return res;
}

LeverrierResult leverrier_closed_form_check(const StateSpace& ss) {
  const std::size_t n = ss.order();
  // A^0..A^n and their traces, computed once up front.
  std::vector<SquareMatrix> powers;
  powers.reserve(n + 1);
  powers.push_back(SquareMatrix::identity(n));
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(ss.a * powers.back());

  LeverrierResult res;
  res.p_coeffs.assign(1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      acc += res.p_coeffs[l] * powers[k - l].trace();
    }
    res.p_coeffs.push_back(-acc / static_cast<double>(k));
  }
  res.f_matrices.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    SquareMatrix f(n);
    for (std::size_t l = 0; l < k; ++l) {
      f = f + res.p_coeffs[l] * powers[k - l - 1];
    }
    res.f_matrices.push_back(std::move(f));
  }
  res.q_coeffs.reserve(n);
  for (const SquareMatrix& f : res.f_matrices) {
    res.q_coeffs.push_back(cfb_product(ss.c, f, ss.b));
  }
  return res;
}

BitString to_bits(std::uint64_t rho) {
  if (rho < 1) throw NonPositive{};
  BitString out;
  while (rho > 0) {
    out.bits.push_back(static_cast<std::uint8_t>(rho & 1u));
    rho >>= 1;
  }
  std::reverse(out.bits.begin(), out.bits.end());
  return out;
}

MatPowResult mat_pow(const SquareMatrix& a, std::uint64_t rho) {
  if (a.n == 0) throw DimensionMismatch("matrix must be non-empty");
  const BitString bits = to_bits(rho);
  MatPowResult res{a, 0};
  for (std::size_t i = 1; i < bits.bits.size(); ++i) {
    res.value = res.value * res.value;
    ++res.matrix_mults;
    if (bits.bits[i] != 0) {
      res.value = res.value * a;
      ++res.matrix_mults;
    }
  }
  return res;
}

}  // namespace rotpoly
