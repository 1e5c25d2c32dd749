#include "bergman/quadrature.hpp"
#include <algorithm>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bergman {

void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double eps = 1e-15;
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (x * p1 - p2) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < eps) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    // Map [-1,1] -> [0,1].
    nodes[i] = 0.5 * (1.0 - x);
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[i] = 0.5 * w;
    weights[n - 1 - i] = 0.5 * w;
  }
}

namespace {

std::vector<Complex> circle_samples(int n_angular) {
  std::vector<Complex> c(n_angular);
  for (int k = 0; k < n_angular; ++k) {
    double th = 2.0 * std::numbers::pi * k / n_angular;
    c[k] = Complex(std::cos(th), std::sin(th));
  }
  return c;
}

}  // namespace

QuadratureRule QuadratureRule::build(int n_radial, int n_angular) {
  if (n_radial < 1 || n_angular < 2) {
    throw std::invalid_argument("QuadratureRule: need n_radial>=1, n_angular>=2");
  }
  std::vector<double> t, wt;
  gauss_legendre_01(n_radial, t, wt);
  QuadratureRule rule;
  rule.r_.resize(n_radial);
  for (int i = 0; i < n_radial; ++i) rule.r_[i] = std::sqrt(t[i]);
  rule.w_ = std::move(wt);
  rule.circle_ = circle_samples(n_angular);
  rule.n_angular_ = n_angular;
  return rule;
}

QuadratureRule QuadratureRule::build_graded(int n_radial, int n_angular,
                                            double grading) {
  if (n_radial < 1 || n_angular < 2 || !(grading >= 1.0)) {
    throw std::invalid_argument("QuadratureRule: bad graded-rule parameters");
  }
  std::vector<double> x, wx;
  gauss_legendre_01(n_radial, x, wx);
  QuadratureRule rule;
  rule.r_.resize(n_radial);
  rule.w_.resize(n_radial);
  // Nodes whose graded image rounds to t = 1 would land on the unit circle;
  // clamp them so r stays below 1 - 1e-13 (inside the DiskPoint margin).
  // The clamped nodes carry negligible weight, so the perturbation is below
  // 1e-6 for any integrable boundary singularity.
  const double t_max = 1.0 - 2e-13;
  for (int i = 0; i < n_radial; ++i) {
    double om = 1.0 - x[i];
    double t = std::min(1.0 - std::pow(om, grading), t_max);
    rule.r_[i] = std::sqrt(t);
    rule.w_[i] = wx[i] * grading * std::pow(om, grading - 1.0);
  }
  rule.circle_ = circle_samples(n_angular);
  rule.n_angular_ = n_angular;
  return rule;
}

Complex integrate(const Integrand& f, const QuadratureRule& rule) {
  const auto& r = rule.radial_nodes();
  const auto& w = rule.radial_weights();
  int na = rule.angular_count();
  Complex total = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    Complex ring = 0.0;
    for (int k = 0; k < na; ++k) {
      Complex z = r[j] * rule.angle(k);
      Complex v = f(z);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "integrate: non-finite integrand at node z = (" << z.real()
            << ", " << z.imag() << ")";
        throw std::runtime_error(msg.str());
      }
      ring += v;
    }
    total += w[j] * (ring / static_cast<double>(na));
  }
  return total;
}

Complex integrate_subdisk(Complex center, double radius, const Integrand& f,
                          const QuadratureRule& rule) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("integrate_subdisk: radius must be positive");
  }
  if (!(std::abs(center) + radius < 1.0)) {
    throw std::invalid_argument("integrate_subdisk: sub-disk escapes the disk");
  }
  double scale = radius * radius;  // normalized area of the sub-disk
  Complex avg = integrate(
      [&](Complex u) { return f(center + radius * u); }, rule);
  return scale * avg;
}

}  // namespace bergman
