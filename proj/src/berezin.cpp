#include "bergman/berezin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

RadiusSchedule RadiusSchedule::dyadic(int levels, int angular_samples) {
  RadiusSchedule s;
  s.angular_samples = angular_samples;
  for (int j = 1; j <= levels; ++j) {
    double r = 1.0 - std::pow(2.0, -j);
    if (r > 1.0 - 1e-6) break;
    if (r > 0.0) s.radii.push_back(r);
  }
  s.validate();
  return s;
}

void RadiusSchedule::validate() const {
  if (radii.empty() || angular_samples < 1) {
    throw std::invalid_argument("RadiusSchedule: empty grid");
  }
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev)) {
      throw std::invalid_argument("RadiusSchedule: radii must be increasing");
    }
    prev = r;
  }
  if (radii.back() > 1.0 - 1e-6) {
    throw std::invalid_argument("RadiusSchedule: last radius exceeds 1 - 1e-6");
  }
}

Complex berezin_transform(const Integrand& u, const DiskPoint& w,
                          const QuadratureRule& rule) {
  return integrate(
      [&](Complex z) {
        return u(z) * std::norm(normalized_kernel(w, DiskPoint(z)));
      },
      rule);
}

double berezin_mod_squared(const Symbol& s, const DiskPoint& w,
                           const QuadratureRule& rule) {
  Complex v = integrate(
      [&](Complex z) {
        return Complex(std::norm(s.eval(mobius(w, DiskPoint(z)))));
      },
      rule);
  return v.real();
}

double sarason_quantity(const SymbolPair& pair, const DiskPoint& w,
                        const QuadratureRule& rule) {
  return berezin_mod_squared(pair.f, w, rule) *
         berezin_mod_squared(pair.g, w, rule);
}

SarasonReport sarason_sup(const SymbolPair& pair, const RadiusSchedule& schedule,
                          const QuadratureRule& rule) {
  schedule.validate();
  SarasonReport report;
  for (double r : schedule.radii) {
    double radius_max = 0.0;
    for (int k = 0; k < schedule.angular_samples; ++k) {
      double th = 2.0 * std::numbers::pi * k / schedule.angular_samples;
      DiskPoint w(r * std::cos(th), r * std::sin(th));
      double bf = berezin_mod_squared(pair.f, w, rule);
      double bg = berezin_mod_squared(pair.g, w, rule);
      double product = bf * bg;
      report.grid.push_back({w.value(), bf, bg, product});
      if (product > radius_max) radius_max = product;
      if (product > report.sup_estimate) report.sup_estimate = product;
    }
    report.boundary_trend.emplace_back(r, radius_max);
  }
  return report;
}

bool compact_predicate(const SarasonReport& report) {
  const auto& trend = report.boundary_trend;
  if (trend.size() < 3) return false;
  std::size_t n = trend.size();
  double a = trend[n - 3].second;
  double b = trend[n - 2].second;
  double c = trend[n - 1].second;
  return a < kCompactTrendThreshold && b < kCompactTrendThreshold &&
         c < kCompactTrendThreshold && b <= a && c <= b;
}

}  // namespace bergman
