#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "bergman/schur.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

QuadratureRule boundary_rule() {
  return QuadratureRule::build_graded(256, 256, 3.0);
}

std::mt19937 rng(424242);

DiskPoint random_point(double rmax) {
  std::uniform_real_distribution<double> radial(0.0, rmax);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double r = radial(rng), th = angle(rng);
  return DiskPoint(r * std::cos(th), r * std::sin(th));
}

}  // namespace

TEST_CASE("parameter gate") {
  CHECK_NOTHROW(SchurParameters(0.125));
  CHECK_NOTHROW(SchurParameters(0.24, 2.0));
  CHECK_THROWS_AS(SchurParameters(0.25, 2.0), std::invalid_argument);  // = 1/(2p')
  CHECK_THROWS_AS(SchurParameters(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SchurParameters(0.125, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SchurParameters(0.125, 2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(SchurParameters(0.125, 2.0, 0.25, 1.0),
                  std::invalid_argument);
  // p = 4: p' = 4/3, bound 3/8
  CHECK_NOTHROW(SchurParameters(0.37, 4.0));
  CHECK_THROWS_AS(SchurParameters(0.38, 4.0), std::invalid_argument);
}

TEST_CASE("s_operator closed form at the origin") {
  QuadratureRule rule = boundary_rule();
  SchurParameters params(0.125);
  Symbol one = Symbol::polynomial({1.0});
  Symbol zero = Symbol::polynomial({0.0});
  // f=1, z=0: integrand reduces to (1-|v|^2)^(-2 eps); integral 1/(1-2 eps)
  CHECK(s_operator(one, DiskPoint(0.0, 0.0), params, rule) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-7));
  CHECK(s_operator(zero, DiskPoint(0.3, 0.0), params, rule) ==
        doctest::Approx(0.0));
}

TEST_CASE("s_operator self-convergence away from the origin") {
  SchurParameters params(0.125);
  Symbol one = Symbol::polynomial({1.0});
  DiskPoint z(0.5, 0.0);
  double coarse = s_operator(one, z, params, boundary_rule());
  double fine =
      s_operator(one, z, params, QuadratureRule::build_graded(512, 512, 3.0));
  CHECK(std::abs(coarse - fine) / fine <= 1e-4);
}

TEST_CASE("lemma 1 ratio: value at origin and boundedness along a schedule") {
  QuadratureRule rule = boundary_rule();
  SchurParameters params(0.125);
  Symbol one = Symbol::polynomial({1.0});
  CHECK(lemma1_ratio(one, DiskPoint(0.0, 0.0), params, rule) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-7));
  CHECK_THROWS_AS(
      lemma1_ratio(Symbol::polynomial({0.0}), DiskPoint(0.0, 0.0), params, rule),
      std::invalid_argument);

  Symbol z = Symbol::polynomial({0.0, 1.0});
  for (const Symbol& s : {one, z}) {
    double max_ratio = 0.0;
    for (double r : {0.0, 0.5, 0.8, 0.9, 0.95}) {
      max_ratio = std::max(
          max_ratio, lemma1_ratio(s, DiskPoint(r, 0.0), params, rule));
    }
    CHECK(max_ratio < 10.0);  // uniform bound; the lemma's claim is finiteness
  }
}

TEST_CASE("lemma 1 ratio maxima stable under rule refinement") {
  SchurParameters params(0.125);
  Symbol z = Symbol::polynomial({0.0, 1.0});
  auto max_over_grid = [&](const QuadratureRule& rule) {
    double m = 0.0;
    for (double r : {0.0, 0.4, 0.7, 0.9})
      m = std::max(m, lemma1_ratio(z, DiskPoint(r, 0.0), params, rule));
    return m;
  };
  double a = max_over_grid(boundary_rule());
  double b = max_over_grid(QuadratureRule::build_graded(512, 512, 3.0));
  CHECK(std::abs(a - b) / b <= 0.10);
}

TEST_CASE("remark 1: two routes to I(u)") {
  QuadratureRule rule = boundary_rule();
  SchurParameters params(0.125);
  Symbol zero = Symbol::polynomial({0.0});
  auto [z0l, z0r] = remark1_check(zero, DiskPoint(0.4, 0.0), params, rule);
  CHECK(z0l == doctest::Approx(0.0));
  CHECK(z0r == doctest::Approx(0.0));

  Symbol one = Symbol::polynomial({1.0});
  auto [ol, orr] = remark1_check(one, DiskPoint(0.0, 0.0), params, rule);
  CHECK(ol == doctest::Approx(4.0 / 3.0).epsilon(1e-7));
  CHECK(orr == doctest::Approx(4.0 / 3.0).epsilon(1e-7));

  Symbol z = Symbol::polynomial({0.0, 1.0});
  auto [l, r] = remark1_check(z, DiskPoint(0.4, 0.0), params, rule);
  CHECK(std::abs(l - r) / r <= 1e-4);
}

TEST_CASE("remark 1 identity on 50 random triples") {
  QuadratureRule rule = boundary_rule();
  std::vector<Symbol> corpus = {
      Symbol::polynomial({1.0}),
      Symbol::polynomial({0.0, 1.0}),
      Symbol::polynomial({1.0, 1.0}),
      Symbol::polynomial({0.5, Complex(0.0, 1.0), 0.25}),
      Symbol::kernel_combo({{Complex(1.0), DiskPoint(0.4, 0.0)}}),
  };
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  std::uniform_real_distribution<double> eps_dist(0.03, 0.22);
  for (int i = 0; i < 50; ++i) {
    const Symbol& f = corpus[pick(rng)];
    DiskPoint u = random_point(0.8);
    SchurParameters params(eps_dist(rng));
    auto [lhs, rhs] = remark1_check(f, u, params, rule);
    CHECK(std::abs(lhs - rhs) / std::max(rhs, 1e-12) <= 1e-4);
  }
}

TEST_CASE("projection identity P(gbar K_z)(u) = conj(g(z)) K_z(u)") {
  QuadratureRule rule = QuadratureRule::build(64, 256);
  Symbol one = Symbol::polynomial({1.0});
  DiskPoint z(0.5, 0.1), u(0.3, -0.2);
  auto [l1, r1] = projection_identity(one, z, u, rule);
  CHECK(std::abs(l1 - r1) <= 1e-10);
  CHECK(std::abs(r1 - bergman_kernel(z, u)) <= 1e-14);

  Symbol zs = Symbol::polynomial({0.0, 1.0});
  auto [l2, r2] = projection_identity(zs, DiskPoint(0.0, 0.0), u, rule);
  CHECK(std::abs(l2) <= 1e-12);
  CHECK(std::abs(r2) <= 1e-15);

  Symbol z2 = Symbol::polynomial({0.0, 0.0, 1.0});
  auto [l3, r3] =
      projection_identity(z2, DiskPoint(0.5, 0.0), DiskPoint(0.3, 0.0), rule);
  CHECK(std::abs(l3 - r3) <= 1e-8);
}

TEST_CASE("schur ratio: trivial values and tail indicator") {
  QuadratureRule rule = boundary_rule();
  SchurParameters params(0.125);
  Symbol one = Symbol::polynomial({1.0});
  Symbol zero = Symbol::polynomial({0.0});
  CHECK(schur_ratio({one, zero}, DiskPoint(0.3, 0.0), params, rule) == 0.0);
  CHECK(schur_ratio({one, one}, DiskPoint(0.0, 0.0), params, rule) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-7));

  SchurParameters tail(0.125, 2.0, 0.25, 0.5);
  CHECK(schur_ratio({one, one}, DiskPoint(0.3, 0.0), tail, rule) == 0.0);
  CHECK(schur_ratio({one, one}, DiskPoint(0.7, 0.0), tail, rule) > 0.0);
}

TEST_CASE("schur dual ratio swaps the pair") {
  QuadratureRule rule = boundary_rule();
  SchurParameters params(0.125);
  SymbolPair pair{Symbol::polynomial({0.0, 1.0}),
                  Symbol::polynomial({1.0, 0.5})};
  for (double r : {0.0, 0.4, 0.8}) {
    DiskPoint u(r, 0.1);
    CHECK(schur_dual_ratio(pair, u, params, rule) ==
          schur_ratio({pair.g, pair.f}, u, params, rule));
  }
}

TEST_CASE("schur ratio stable under refinement for f=g=z") {
  SchurParameters params(0.125);
  SymbolPair pair{Symbol::polynomial({0.0, 1.0}),
                  Symbol::polynomial({0.0, 1.0})};
  auto max_over_grid = [&](const QuadratureRule& rule) {
    double m = 0.0;
    for (double r : {0.0, 0.5, 0.8, 0.95})
      m = std::max(m, schur_ratio(pair, DiskPoint(r, 0.0), params, rule));
    return m;
  };
  double a = max_over_grid(boundary_rule());
  double b = max_over_grid(QuadratureRule::build_graded(512, 512, 3.0));
  CHECK(std::abs(a - b) / b <= 1e-3);
}

TEST_CASE("tail constant") {
  QuadratureRule rule = QuadratureRule::build(64, 256);
  RadiusSchedule sched = RadiusSchedule::dyadic(8, 16);
  Symbol one = Symbol::polynomial({1.0});
  Symbol z = Symbol::polynomial({0.0, 1.0});
  Symbol zero = Symbol::polynomial({0.0});

  CHECK(tail_constant({one, one}, 0.3, sched, rule) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(tail_constant({z, zero}, 0.3, sched, rule) == doctest::Approx(0.0));

  double prev = 2.0;
  for (double r : {0.0, 0.6, 0.9}) {
    double c1 = tail_constant({z, z}, r, sched, rule);
    CHECK(c1 <= prev + 1e-12);
    CHECK(c1 <= 1.0 + 1e-9);
    prev = c1;
  }
  CHECK_THROWS_AS(tail_constant({one, one}, 0.999, sched, rule),
                  std::invalid_argument);
}

TEST_CASE("luecking k: closed-form oracle at the origin") {
  QuadratureRule rule = QuadratureRule::build(64, 128);
  SchurParameters params(0.125);
  // z = 0: mu integrand is (1-|v|^2)^(-1/4); over D(0,delta) with
  // s = tanh(delta): mu = (1 - (1-s^2)^(3/4)) / (3/4), lambda = s^2
  double s = std::tanh(params.delta);
  double mu = (1.0 - std::pow(1.0 - s * s, 0.75)) / 0.75;
  double want = mu / (s * s);
  LueckingResult res =
      luecking_k(DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.0), params, rule);
  CHECK(res.k == doctest::Approx(want).epsilon(1e-9));
  CHECK(res.bound_ratio == doctest::Approx(want).epsilon(1e-9));  // w=z=0
}

TEST_CASE("luecking bound ratio bounded and refinement-stable") {
  for (double eps : {1.0 / 16, 1.0 / 8, 3.0 / 16}) {
    SchurParameters params(eps);
    auto max_ratio = [&](const QuadratureRule& rule) {
      double m = 0.0;
      for (double zr : {0.0, 0.5, 0.8}) {
        for (double wr : {0.0, 0.3, 0.6, 0.85}) {
          LueckingResult res = luecking_k(DiskPoint(wr, 0.0),
                                          DiskPoint(zr, 0.0), params, rule);
          m = std::max(m, res.bound_ratio);
        }
      }
      return m;
    };
    double a = max_ratio(QuadratureRule::build(32, 64));
    double b = max_ratio(QuadratureRule::build(64, 128));
    CHECK(a < 100.0);
    CHECK(std::abs(a - b) / b <= 0.10);
  }
}

TEST_CASE("luecking k shrinking-disk limit recovers the integrand") {
  QuadratureRule rule = QuadratureRule::build(64, 128);
  DiskPoint w(0.4, 0.1), z(0.3, 0.0);
  double eps = 0.125;
  double inv_z = 1.0 / (1.0 - z.abs2());
  double phi2 = std::norm(mobius(z, w));
  double integrand = inv_z / (1.0 - w.abs2()) *
                     std::pow(1.0 - phi2, 1.0 - 2.0 * eps);
  double prev_err = 1e9;
  for (double delta : {0.1, 0.05, 0.025}) {
    SchurParameters params(eps, 2.0, delta);
    LueckingResult res = luecking_k(w, z, params, rule);
    double err = std::abs(res.k - integrand) / integrand;
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err <= 5e-3);
}
