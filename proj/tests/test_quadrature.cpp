#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>

#include "bergman/quadrature.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("gauss-legendre nodes on [0,1]") {
  std::vector<double> x, w;
  gauss_legendre_01(16, x, w);
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // exact for t^k, k <= 31
  for (int k = 0; k <= 31; ++k) {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += w[i] * std::pow(x[i], k);
    CHECK(s == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("rule construction rejects bad counts") {
  CHECK_THROWS_AS(QuadratureRule::build(0, 64), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureRule::build(8, 1), std::invalid_argument);
}

TEST_CASE("total mass is one") {
  QuadratureRule rule = QuadratureRule::build(16, 64);
  double total = std::accumulate(rule.radial_weights().begin(),
                                 rule.radial_weights().end(), 0.0);
  CHECK(std::abs(total - 1.0) <= 1e-13);
  CHECK(std::abs(integrate([](Complex) { return Complex(1.0); }, rule) - 1.0) <=
        1e-13);
}

TEST_CASE("monomial exactness up to degree 12 under build(16,64)") {
  QuadratureRule rule = QuadratureRule::build(16, 64);
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      Complex v = integrate(
          [&](Complex z) { return std::pow(z, a) * std::pow(std::conj(z), b); },
          rule);
      Complex want = (a == b) ? Complex(1.0 / (a + 1.0)) : Complex(0.0);
      CHECK(std::abs(v - want) <= 1e-12);
    }
  }
}

TEST_CASE("basic integrals") {
  QuadratureRule rule = QuadratureRule::build(16, 64);
  CHECK(std::abs(integrate([](Complex z) { return z; }, rule)) <= 1e-14);
  CHECK(integrate([](Complex z) { return Complex(std::norm(z)); }, rule).real() ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(integrate([](Complex z) { return Complex(std::norm(z) * std::norm(z)); },
                  rule)
            .real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(std::abs(integrate(
            [](Complex z) { return z * std::conj(z) * std::conj(z); }, rule)) <=
        1e-14);
}

TEST_CASE("normalized kernel mass for |w| <= 0.8") {
  QuadratureRule rule = QuadratureRule::build(64, 256);
  for (double wr : {0.0, 0.3, 0.6, 0.8}) {
    Complex w(wr, 0.0);
    double scale = (1.0 - std::norm(w)) * (1.0 - std::norm(w));
    Complex mass = integrate(
        [&](Complex z) {
          Complex d = 1.0 - std::conj(w) * z;
          Complex k = 1.0 / (d * d);
          return k * std::conj(k) * scale;
        },
        rule);
    CHECK(std::abs(mass - 1.0) <= 1e-8);
  }
}

TEST_CASE("conjugation: integrate(conj(f)) = conj(integrate(f))") {
  QuadratureRule rule = QuadratureRule::build(16, 64);
  auto f = [](Complex z) { return z * z + Complex(0.0, 1.0) * std::conj(z); };
  Complex a = integrate([&](Complex z) { return std::conj(f(z)); }, rule);
  Complex b = std::conj(integrate(f, rule));
  CHECK(std::abs(a - b) <= 1e-14);
}

TEST_CASE("non-finite integrand reports the node") {
  QuadratureRule rule = QuadratureRule::build(4, 8);
  CHECK_THROWS_WITH_AS(
      integrate([](Complex) { return Complex(std::nan("")); }, rule),
      doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("sub-disk integration") {
  QuadratureRule rule = QuadratureRule::build(16, 64);
  CHECK(integrate_subdisk(0.0, 0.3, [](Complex) { return Complex(1.0); }, rule)
            .real() == doctest::Approx(0.09).epsilon(1e-14));
  for (double r : {0.2, 0.5, 0.8}) {
    CHECK(integrate_subdisk(0.0, r,
                            [](Complex z) { return Complex(std::norm(z)); },
                            rule)
              .real() == doctest::Approx(r * r * r * r / 2.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(
      integrate_subdisk(Complex(0.8, 0.0), 0.3,
                        [](Complex) { return Complex(1.0); }, rule),
      std::invalid_argument);
}

TEST_CASE("lemma-1 measure over a sub-disk: self-convergence oracle") {
  // mu integrand at z=0, eps=1/8: (1-|v|^2)^(-1/4); refined rule at 4x nodes
  auto f = [](Complex v) {
    return Complex(std::pow(1.0 - std::norm(v), -0.25));
  };
  QuadratureRule coarse = QuadratureRule::build(16, 32);
  QuadratureRule fine = QuadratureRule::build(64, 128);
  double a = integrate_subdisk(0.0, std::tanh(0.25), f, coarse).real();
  double b = integrate_subdisk(0.0, std::tanh(0.25), f, fine).real();
  CHECK(std::abs(a - b) / std::abs(b) <= 1e-6);
}

TEST_CASE("refinement stability for a near-boundary kernel integrand") {
  Complex w(0.9, 0.0);
  auto f = [&](Complex z) {
    Complex d = 1.0 - std::conj(w) * z;
    return 1.0 / (d * d * std::conj(d) * std::conj(d));
  };
  double a = integrate(f, QuadratureRule::build(64, 256)).real();
  double b = integrate(f, QuadratureRule::build(128, 512)).real();
  CHECK(std::abs(a - b) / std::abs(b) <= 1e-6);
}

TEST_CASE("graded rule keeps total mass and handles boundary singularities") {
  QuadratureRule graded = QuadratureRule::build_graded(128, 16, 3.0);
  CHECK(std::abs(integrate([](Complex) { return Complex(1.0); }, graded) - 1.0) <=
        1e-12);
  // int (1-|v|^2)^(-1/2) d lambda = int_0^1 (1-t)^(-1/2) dt = 2
  double v = integrate(
                 [](Complex z) {
                   return Complex(1.0 / std::sqrt(1.0 - std::norm(z)));
                 },
                 graded)
                 .real();
  // Gauss-Legendre on the graded image of the sqrt singularity converges
  // like n^-3; 1e-6 relative is the realistic level at n = 128.
  CHECK(v == doctest::Approx(2.0).epsilon(1e-6));
}
