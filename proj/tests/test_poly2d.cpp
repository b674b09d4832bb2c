#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rotpoly/poly2d.hpp"

using namespace rotpoly;
using oracles::cdouble;

namespace {

Poly2DSpec random_poly2d(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  return Poly2DSpec(rows, cols, oracles::random_coeffs(rng, rows * cols));
}

ComplexPoint random_point(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> dist(-radius, radius);
  return {dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("separability detection") {
  const auto factors = check_separable(Poly2DSpec::from_rows({{1.0, 2.0}, {1.0, 2.0}}), 1e-9);
  REQUIRE(factors.has_value());
  CHECK(factors->eta == std::vector<double>{1.0, 1.0});
  CHECK(factors->rho == std::vector<double>{1.0, 2.0});

  CHECK_FALSE(check_separable(Poly2DSpec::from_rows({{1.0, 0.0}, {0.0, 1.0}}), 1e-9));

  const auto single = check_separable(Poly2DSpec::from_rows({{5.0}}), 1e-9);
  REQUIRE(single.has_value());
  CHECK(single->eta[0] * single->rho[0] == 5.0);

  CHECK_THROWS_AS(check_separable(Poly2DSpec::from_rows({{0.0, 0.0}}), 1e-9), ZeroMatrix);
  CHECK_THROWS_AS(check_separable(Poly2DSpec::from_rows({{1.0}}), 0.0), SpecError);
}

TEST_CASE("integer matrices factor through row and column gcds") {
  const auto factors =
      check_separable(Poly2DSpec::from_rows({{2.0, 4.0}, {2.0, 4.0}}), 1e-12);
  REQUIRE(factors.has_value());
  CHECK(factors->eta == std::vector<double>{2.0, 2.0});
  CHECK(factors->rho == std::vector<double>{1.0, 2.0});

  const auto negative =
      check_separable(Poly2DSpec::from_rows({{-6.0, 10.0}, {-15.0, 25.0}}), 1e-12);
  REQUIRE(negative.has_value());
  for (std::size_t l = 0; l < 2; ++l) {
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(negative->eta[l] * negative->rho[k] ==
            Poly2DSpec::from_rows({{-6.0, 10.0}, {-15.0, 25.0}}).at(l, k));
    }
  }
}

TEST_CASE("separable evaluation multiplies the factor values") {
  const auto factors = check_separable(Poly2DSpec::from_rows({{1.0, 2.0}, {1.0, 2.0}}), 1e-9);
  REQUIRE(factors.has_value());
  const Eval2DResult at_jj =
      eval_separable(*factors, ComplexPoint(0.0, 1.0), ComplexPoint(0.0, 1.0));
  // (j + 1)(j + 2) = 1 + 3j
  CHECK(at_jj.re == doctest::Approx(1.0));
  CHECK(at_jj.im == doctest::Approx(3.0));

  const SeparableFactors constants{{3.0}, {-2.0}};
  const Eval2DResult c = eval_separable(constants, ComplexPoint(1.0, 2.0), ComplexPoint(-1.0, 0.5));
  CHECK(c.re == -6.0);
  CHECK(c.im == 0.0);

  // s1 + 1 vanishes at s1 = -1, annihilating the product.
  const SeparableFactors line{{1.0, 1.0}, {1.0, 2.0}};
  const Eval2DResult zero = eval_separable(line, ComplexPoint(-1.0, 0.0), ComplexPoint(0.3, 0.4));
  CHECK(zero.re == 0.0);
  CHECK(zero.im == 0.0);
}

TEST_CASE("two-pass evaluation examples") {
  const Eval2DResult constant =
      eval2d(Poly2DSpec::from_rows({{1.0}}), ComplexPoint(2.0, -1.0), ComplexPoint(0.5, 3.0));
  CHECK(constant.re == 1.0);
  CHECK(constant.im == 0.0);

  // p = s1 s2 at (j, j) equals -1.
  const Poly2DSpec bilinear = Poly2DSpec::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const Eval2DResult jj = eval2d(bilinear, ComplexPoint(0.0, 1.0), ComplexPoint(0.0, 1.0));
  CHECK(jj.re == doctest::Approx(-1.0));
  CHECK(std::fabs(jj.im) <= 1e-12);
}

TEST_CASE("two-pass evaluation matches the nested oracle") {
  std::mt19937 rng(401);
  std::uniform_int_distribution<std::size_t> deg(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly2DSpec p = random_poly2d(rng, deg(rng) + 1, deg(rng) + 1);
    const ComplexPoint s1 = random_point(rng, 4.0);
    const ComplexPoint s2 = random_point(rng, 4.0);
    const Eval2DResult got = eval2d(p, s1, s2);
    const cdouble expected = oracles::eval_2d(p, {s1.a, s1.b}, {s2.a, s2.b});
    CAPTURE(trial);
    CHECK(oracles::close({got.re, got.im}, expected));
  }
}

TEST_CASE("inner parts carry the per-column values f_k(s1)") {
  std::mt19937 rng(402);
  const Poly2DSpec p = random_poly2d(rng, 5, 4);
  const ComplexPoint s1 = random_point(rng, 3.0);
  const Eval2DResult res = eval2d(p, s1, random_point(rng, 3.0));
  REQUIRE(res.inner_parts.size() == p.cols);
  for (std::size_t k = 0; k < p.cols; ++k) {
    std::vector<cdouble> column(p.rows);
    for (std::size_t l = 0; l < p.rows; ++l) column[l] = p.at(l, k);
    const cdouble expected = oracles::horner(column, {s1.a, s1.b});
    CAPTURE(k);
    CHECK(oracles::close({res.inner_parts[k].first, res.inner_parts[k].second}, expected));
  }
}

TEST_CASE("degenerate axes fall back to real Horner") {
  std::mt19937 rng(403);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2DSpec p = random_poly2d(rng, 4, 3);
    const ComplexPoint real_s1{1.3, 0.0};
    const ComplexPoint s2 = random_point(rng, 2.0);
    const cdouble e1 = oracles::eval_2d(p, {real_s1.a, 0.0}, {s2.a, s2.b});
    const Eval2DResult g1 = eval2d(p, real_s1, s2);
    CHECK(oracles::close({g1.re, g1.im}, e1));

    const ComplexPoint s1 = random_point(rng, 2.0);
    const ComplexPoint real_s2{-0.7, 0.0};
    const cdouble e2 = oracles::eval_2d(p, {s1.a, s1.b}, {real_s2.a, 0.0});
    const Eval2DResult g2 = eval2d(p, s1, real_s2);
    CAPTURE(trial);
    CHECK(oracles::close({g2.re, g2.im}, e2));
  }
}

TEST_CASE("separable path equals the general path on rank-1 inputs") {
  std::mt19937 rng(409);
  std::uniform_int_distribution<std::size_t> deg(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> eta = oracles::random_coeffs(rng, deg(rng) + 1);
    const std::vector<double> rho = oracles::random_coeffs(rng, deg(rng) + 1);
    std::vector<std::vector<double>> rows(eta.size());
    for (std::size_t l = 0; l < eta.size(); ++l) {
      rows[l].resize(rho.size());
      for (std::size_t k = 0; k < rho.size(); ++k) rows[l][k] = eta[l] * rho[k];
    }
    Poly2DSpec p = Poly2DSpec::from_rows(rows);
    const auto factors = check_separable(p, 1e-9);
    if (!factors.has_value()) continue;  // an exact zero pivot row is possible but unlikely
    for (int i = 0; i < 20; ++i) {
      const ComplexPoint s1 = random_point(rng, 2.0);
      const ComplexPoint s2 = random_point(rng, 2.0);
      const Eval2DResult sep = eval_separable(*factors, s1, s2);
      const Eval2DResult gen = eval2d(p, s1, s2);
      CAPTURE(trial);
      CHECK(oracles::close({sep.re, sep.im}, {gen.re, gen.im}, 1e-9, 1e-9));
    }
  }
}

TEST_CASE("reconstruction residual bounds returned factors") {
  std::mt19937 rng(419);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2DSpec p = random_poly2d(rng, 3, 4);
    const auto factors = check_separable(p, 0.5);  // loose tolerance admits noise
    if (!factors.has_value()) continue;
    double num = 0.0, den = 0.0;
    for (std::size_t l = 0; l < p.rows; ++l) {
      for (std::size_t k = 0; k < p.cols; ++k) {
        const double d = p.at(l, k) - factors->eta[l] * factors->rho[k];
        num += d * d;
        den += p.at(l, k) * p.at(l, k);
      }
    }
    CHECK(std::sqrt(num / den) <= 0.5);
  }
}

TEST_CASE("conjugate symmetry in both variables") {
  std::mt19937 rng(421);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2DSpec p = random_poly2d(rng, 3, 3);
    const ComplexPoint s1 = random_point(rng, 2.0);
    const ComplexPoint s2 = random_point(rng, 2.0);
    const Eval2DResult up = eval2d(p, s1, s2);
    const Eval2DResult down =
        eval2d(p, ComplexPoint(s1.a, -s1.b), ComplexPoint(s2.a, -s2.b));
    CAPTURE(trial);
    CHECK(oracles::close(down.re, up.re));
    CHECK(oracles::close(down.im, -up.im));
  }
}

TEST_CASE("2D response") {
  const Poly2DSpec p = Poly2DSpec::from_rows({{1.0, 0.5}, {0.25, 2.0}});
  const Response2D unity = response2d(p, p, ComplexPoint(0.3, 0.7), ComplexPoint(-1.0, 0.2));
  CHECK(std::fabs(unity.magnitude - 1.0) <= 1e-12);
  CHECK(std::fabs(unity.phase) <= 1e-12);

  const Poly2DSpec bilinear = Poly2DSpec::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const Poly2DSpec one = Poly2DSpec::from_rows({{1.0}});
  const ComplexPoint j{0.0, 1.0};

  const Response2D minus_one = response2d(bilinear, one, j, j);
  CHECK(minus_one.magnitude == doctest::Approx(1.0));
  CHECK(minus_one.phase == doctest::Approx(std::numbers::pi));

  // 1 / (s1 s2) at (j, j) has phase -pi, wrapped to +pi.
  const Response2D inverse = response2d(one, bilinear, j, j);
  CHECK(inverse.magnitude == doctest::Approx(1.0));
  CHECK(inverse.phase == doctest::Approx(std::numbers::pi));

  CHECK_THROWS_AS(response2d(one, bilinear, ComplexPoint(0.0, 0.0), j), PoleAtPoint);
}

TEST_CASE("phase antisymmetry of swapped ratio") {
  std::mt19937 rng(431);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2DSpec q = random_poly2d(rng, 3, 2);
    const Poly2DSpec p = random_poly2d(rng, 2, 3);
    const ComplexPoint s1 = random_point(rng, 2.0);
    const ComplexPoint s2 = random_point(rng, 2.0);
    const Response2D fwd = response2d(q, p, s1, s2);
    const Response2D rev = response2d(p, q, s1, s2);
    const double sum = fwd.phase + rev.phase;
    const double wrapped = std::remainder(sum, 2.0 * std::numbers::pi);
    CAPTURE(trial);
    CHECK(std::fabs(wrapped) <= 1e-9);
    CHECK(oracles::close(fwd.magnitude * rev.magnitude, 1.0));
  }
}

TEST_CASE("2D coefficient matrix validation") {
  CHECK_THROWS_AS(Poly2DSpec(0, 1, {}), SpecError);
  CHECK_THROWS_AS(Poly2DSpec(2, 2, {1.0, 2.0}), SpecError);
  CHECK_THROWS_AS(Poly2DSpec::from_rows({{1.0}, {1.0, 2.0}}), SpecError);
}
