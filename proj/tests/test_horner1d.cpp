#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "rotpoly/horner1d.hpp"

using namespace rotpoly;
using oracles::cdouble;

namespace {

cdouble value_of(const EvalResult& r) { return {r.u, r.v}; }

ComplexPoint random_point(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> dist(-radius, radius);
  return {dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("polynomial coefficient validation") {
  CHECK_THROWS_AS(PolySpec(std::vector<double>{}), SpecError);
  CHECK_THROWS_AS(PolySpec({1.0, 2.0}, {1.0}), SpecError);
  CHECK_THROWS_AS(PolySpec({1.0, std::nan("")}), SpecError);
  CHECK(PolySpec({1.0, 2.0}).kind() == CoeffKind::real);
  CHECK(PolySpec({1.0, 2.0}, {0.0, 0.0}).kind() == CoeffKind::real);
  CHECK(PolySpec({1.0, 2.0}, {0.0, 0.5}).kind() == CoeffKind::complex);
}

TEST_CASE("horner_accumulate runs the companion recursion") {
  OpCounter ops;
  const std::vector<double> linear{1.0, 0.0};  // p = s
  const Vec2 z = horner_accumulate(linear, ComplexPoint(0.0, 2.0), ops);
  CHECK(z.x == 1.0);
  CHECK(z.y == 0.0);

  OpCounter ops2;
  const std::vector<double> constant{4.5};
  const Vec2 z1 = horner_accumulate(constant, ComplexPoint(1.0, -2.0), ops2);
  CHECK(z1.x == 0.0);
  CHECK(z1.y == 4.5);

  // j is a root of s^2 + 1, so T z vanishes.
  const EvalResult at_root = eval_real(PolySpec({1.0, 0.0, 1.0}), ComplexPoint(0.0, 1.0));
  CHECK(at_root.u == 0.0);
  CHECK(at_root.v == 0.0);

  OpCounter ops3;
  CHECK_THROWS_AS(horner_accumulate(linear, ComplexPoint(1.0, 0.0), ops3), RealAxisPoint);
  CHECK_THROWS_AS(horner_accumulate(std::span<const double>{}, ComplexPoint(0.0, 1.0), ops3),
                  SpecError);
}

TEST_CASE("horner_accumulate spends one R_c application per step") {
  // Companion setup is 3 mults + 1 add; each of the n+1 steps is 2 + 2.
  for (std::size_t n : {0u, 1u, 5u, 12u}) {
    OpCounter ops;
    const std::vector<double> coeffs(n + 1, 1.0);
    horner_accumulate(coeffs, ComplexPoint(0.5, -1.5), ops);
    CHECK(ops.mults == 3 + 2 * (n + 1));
    CHECK(ops.adds == 1 + 2 * (n + 1));
  }
}

TEST_CASE("eval_real examples") {
  const EvalResult s_at_j2 = eval_real(PolySpec({1.0, 0.0}), ComplexPoint(0.0, 2.0));
  CHECK(s_at_j2.u == 0.0);
  CHECK(s_at_j2.v == 2.0);

  const EvalResult constant = eval_real(PolySpec({7.0}), ComplexPoint(-3.0, 0.7));
  CHECK(constant.u == 7.0);
  CHECK(constant.v == 0.0);

  // Root on the real axis exercises the b = 0 fallback.
  const EvalResult at_root = eval_real(PolySpec({1.0, 3.0, 2.0}), ComplexPoint(-1.0, 0.0));
  CHECK(at_root.u == 0.0);
  CHECK(at_root.v == 0.0);

  CHECK_THROWS_AS(eval_real(PolySpec({1.0}, {1.0}), ComplexPoint(0.0, 1.0)), SpecError);
}

TEST_CASE("eval_complex examples") {
  // p = j s at the real point 1 goes through the b = 0 fallback.
  const EvalResult js = eval_complex(PolySpec({0.0, 0.0}, {1.0, 0.0}), ComplexPoint(1.0, 0.0));
  CHECK(js.u == 0.0);
  CHECK(js.v == 1.0);

  const EvalResult affine =
      eval_complex(PolySpec({1.0, 2.0}, {1.0, 0.0}), ComplexPoint(1.0, 1.0));
  CHECK(affine.u == doctest::Approx(2.0));
  CHECK(affine.v == doctest::Approx(2.0));

  const EvalResult constant =
      eval_complex(PolySpec({1.0}, {1.0}), ComplexPoint(0.3, -0.8));
  CHECK(constant.u == 1.0);
  CHECK(constant.v == 1.0);
}

TEST_CASE("z_beta stays zero for real-coefficient polynomials") {
  const EvalResult r = eval_complex(PolySpec({0.5, -1.0, 2.0}), ComplexPoint(0.4, 1.3));
  CHECK(r.z_beta.x == 0.0);
  CHECK(r.z_beta.y == 0.0);
}

TEST_CASE("eval matches the direct complex-Horner oracle") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> deg(0, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = deg(rng);
    const bool complex_kind = coin(rng) == 1;
    std::vector<double> alpha = oracles::random_coeffs(rng, n + 1);
    std::vector<double> beta =
        complex_kind ? oracles::random_coeffs(rng, n + 1) : std::vector<double>(n + 1, 0.0);
    const PolySpec poly(alpha, beta);
    const ComplexPoint pt = random_point(rng, 7.0);
    const cdouble expected = oracles::eval(poly, {pt.a, pt.b});
    const cdouble got = value_of(eval_complex(poly, pt));
    CAPTURE(trial);
    CHECK(oracles::close(got, expected));
  }
}

TEST_CASE("conjugate points give conjugate values for real coefficients") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<std::size_t> deg(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const PolySpec poly(oracles::random_coeffs(rng, deg(rng) + 1));
    const ComplexPoint pt = random_point(rng, 3.0);
    const EvalResult up = eval_real(poly, pt);
    const EvalResult down = eval_real(poly, ComplexPoint(pt.a, -pt.b));
    CHECK(down.u == doctest::Approx(up.u));
    CHECK(down.v == doctest::Approx(-up.v));
  }
}

TEST_CASE("derivative examples") {
  const EvalResult square = eval_derivative(PolySpec({1.0, 0.0, 0.0}), ComplexPoint(1.0, 1.0));
  CHECK(square.u == doctest::Approx(2.0));
  CHECK(square.v == doctest::Approx(2.0));

  const EvalResult constant = eval_derivative(PolySpec({9.0}), ComplexPoint(2.0, 3.0));
  CHECK(constant.u == 0.0);
  CHECK(constant.v == 0.0);
  CHECK(constant.ops.mults == 0);

  const EvalResult cubic = eval_derivative(PolySpec({1.0, 0.0, 0.0, 0.0}), ComplexPoint(0.0, 1.0));
  CHECK(cubic.u == doctest::Approx(-3.0));
  CHECK(std::fabs(cubic.v) <= 1e-12);
}

TEST_CASE("derivative matches analytic oracle and finite differences") {
  std::mt19937 rng(107);
  std::uniform_int_distribution<std::size_t> deg(1, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = deg(rng);
    const bool complex_kind = coin(rng) == 1;
    std::vector<double> alpha = oracles::random_coeffs(rng, n + 1);
    std::vector<double> beta =
        complex_kind ? oracles::random_coeffs(rng, n + 1) : std::vector<double>(n + 1, 0.0);
    const PolySpec poly(alpha, beta);
    const ComplexPoint pt = random_point(rng, 2.0);
    const cdouble s{pt.a, pt.b};

    const cdouble got = value_of(eval_derivative(poly, pt));
    const cdouble analytic = oracles::eval_derivative(poly, s);
    CAPTURE(trial);
    CHECK(oracles::close(got, analytic));

    // Central differences along both axes; Cauchy-Riemann makes them agree.
    const cdouble fd_real = (oracles::eval(poly, s + h) - oracles::eval(poly, s - h)) / (2.0 * h);
    const cdouble fd_imag = (oracles::eval(poly, s + cdouble{0.0, h}) -
                             oracles::eval(poly, s - cdouble{0.0, h})) /
                            cdouble{0.0, 2.0 * h};
    CHECK(oracles::close(got, fd_real, 1e-5, 1e-7));
    CHECK(oracles::close(got, fd_imag, 1e-5, 1e-7));
  }
}

TEST_CASE("abs_squared examples and cross-check") {
  CHECK(abs_squared(PolySpec({1.0, 0.0}), ComplexPoint(0.0, 3.0)) == doctest::Approx(9.0));
  CHECK(abs_squared(PolySpec({1.0}), ComplexPoint(0.7, -2.0)) == doctest::Approx(1.0));

  std::mt19937 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const PolySpec poly(oracles::random_coeffs(rng, 7), oracles::random_coeffs(rng, 7));
    const ComplexPoint pt = random_point(rng, 3.0);
    const EvalResult ev = eval_complex(poly, pt);
    CAPTURE(trial);
    CHECK(oracles::close(abs_squared(poly, pt), ev.u * ev.u + ev.v * ev.v));
  }
}

TEST_CASE("conjugate sum and difference") {
  // Real polynomial at a real point: p + p* = 2 p(x).
  const PolySpec real_poly({2.0, -1.0, 0.5});
  CHECK(conj_sum(real_poly, ComplexPoint(1.5, 0.0)) ==
        doctest::Approx(2.0 * (2.0 * 2.25 - 1.5 + 0.5)));

  const PolySpec s({1.0, 0.0});
  CHECK(std::fabs(conj_sum(s, ComplexPoint(0.0, 1.0))) <= 1e-15);
  CHECK(conj_diff_imag(s, ComplexPoint(0.0, 1.0)) == doctest::Approx(2.0));

  const PolySpec one_plus_j({1.0}, {1.0});
  CHECK(conj_sum(one_plus_j, ComplexPoint(0.4, 0.9)) == doctest::Approx(2.0));
  CHECK(conj_diff_imag(one_plus_j, ComplexPoint(0.4, 0.9)) == doctest::Approx(2.0));
}

TEST_CASE("conjugate combinations equal 2u and 2v everywhere") {
  std::mt19937 rng(113);
  std::uniform_int_distribution<std::size_t> deg(0, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = deg(rng);
    std::vector<double> beta = coin(rng) == 1 ? oracles::random_coeffs(rng, n + 1)
                                              : std::vector<double>(n + 1, 0.0);
    const PolySpec poly(oracles::random_coeffs(rng, n + 1), beta);
    ComplexPoint pt = random_point(rng, 4.0);
    if (coin(rng) == 1) pt = ComplexPoint(pt.a, 0.0);
    const EvalResult ev = eval_complex(poly, pt);
    CAPTURE(trial);
    CHECK(oracles::close(conj_sum(poly, pt), 2.0 * ev.u));
    CHECK(oracles::close(conj_diff_imag(poly, pt), 2.0 * ev.v));
  }
}

TEST_CASE("reciprocal") {
  const ComplexPoint inv_j = reciprocal(PolySpec({1.0, 0.0}), ComplexPoint(0.0, 1.0));
  CHECK(inv_j.a == doctest::Approx(0.0));
  CHECK(inv_j.b == doctest::Approx(-1.0));

  const ComplexPoint half = reciprocal(PolySpec({2.0}), ComplexPoint(5.0, -1.0));
  CHECK(half.a == 0.5);
  CHECK(half.b == 0.0);

  CHECK_THROWS_AS(reciprocal(PolySpec({1.0, 0.0, 1.0}), ComplexPoint(0.0, 1.0)),
                  EvaluationAtRoot);

  std::mt19937 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    const PolySpec poly(oracles::random_coeffs(rng, 5), oracles::random_coeffs(rng, 5));
    const ComplexPoint pt = random_point(rng, 2.0);
    const cdouble p = oracles::eval(poly, {pt.a, pt.b});
    if (std::abs(p) < 1e-6) continue;
    const ComplexPoint r = reciprocal(poly, pt);
    const cdouble prod = p * cdouble{r.a, r.b};
    CAPTURE(trial);
    CHECK(oracles::close(prod, cdouble{1.0, 0.0}));
  }
}

TEST_CASE("operation counts depend only on degree, kind, and axis flag") {
  std::mt19937 rng(131);
  for (std::size_t n : {0u, 1u, 3u, 8u}) {
    const PolySpec a(oracles::random_coeffs(rng, n + 1), oracles::random_coeffs(rng, n + 1));
    const PolySpec b(oracles::random_coeffs(rng, n + 1), oracles::random_coeffs(rng, n + 1));
    const ComplexPoint p1{0.3, 1.7};
    const ComplexPoint p2{-2.0, 0.4};
    const EvalResult ra = eval_complex(a, p1);
    const EvalResult rb = eval_complex(b, p2);
    CHECK(ra.ops.mults == rb.ops.mults);
    CHECK(ra.ops.adds == rb.ops.adds);

    const PolySpec ar(oracles::random_coeffs(rng, n + 1));
    const PolySpec br(oracles::random_coeffs(rng, n + 1));
    const EvalResult rar = eval_real(ar, p1);
    const EvalResult rbr = eval_real(br, p2);
    CHECK(rar.ops.mults == rbr.ops.mults);
    CHECK(rar.ops.adds == rbr.ops.adds);
    // The complex kind costs two recursions, the real kind one.
    CHECK(ra.ops.mults > rar.ops.mults);
  }
}
