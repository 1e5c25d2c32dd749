#pragma once

// Closed-form geometry of the open unit disk: Mobius involutions, Bergman
// reproducing kernels, the Bergman (hyperbolic) metric, and the Euclidean
// realization of Bergman-metric balls.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace bergman {

using Complex = std::complex<double>;

/// A point strictly inside the open unit disk. Construction rejects
/// points with |z| >= 1 - 1e-14; kernel and metric formulas blow up there.
class DiskPoint {
 public:
  static constexpr double kBoundaryMargin = 1e-14;

  explicit DiskPoint(Complex z) : z_(z) {
    if (!(std::norm(z) < (1.0 - kBoundaryMargin) * (1.0 - kBoundaryMargin))) {
      throw std::invalid_argument("DiskPoint: |z| must be < 1 - 1e-14");
    }
  }
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return z_; }
  double abs2() const { return std::norm(z_); }
  double abs() const { return std::abs(z_); }

 private:
  Complex z_;
};

/// phi_w(z) = (w - z) / (1 - conj(w) z), the involutive disk automorphism.
inline Complex mobius(const DiskPoint& w, const DiskPoint& z) {
  return (w.value() - z.value()) / (1.0 - std::conj(w.value()) * z.value());
}

/// d/dz phi_w(z) = (|w|^2 - 1) / (1 - conj(w) z)^2.
inline Complex mobius_derivative(const DiskPoint& w, const DiskPoint& z) {
  Complex d = 1.0 - std::conj(w.value()) * z.value();
  return (w.abs2() - 1.0) / (d * d);
}

/// K_z(w) = 1 / (1 - conj(z) w)^2.
inline Complex bergman_kernel(const DiskPoint& z, const DiskPoint& w) {
  Complex d = 1.0 - std::conj(z.value()) * w.value();
  return 1.0 / (d * d);
}

/// k_z(w) = (1 - |z|^2) / (1 - conj(z) w)^2, the unit-norm kernel.
inline Complex normalized_kernel(const DiskPoint& z, const DiskPoint& w) {
  Complex d = 1.0 - std::conj(z.value()) * w.value();
  return (1.0 - z.abs2()) / (d * d);
}

/// B(z,w) = (1/2) log[(1+|phi_z(w)|)/(1-|phi_z(w)|)] = atanh|phi_z(w)|.
inline double bergman_metric(const DiskPoint& z, const DiskPoint& w) {
  return std::atanh(std::abs(mobius(z, w)));
}

/// The Bergman-metric ball D(z,delta) realized as a Euclidean disk.
struct HyperbolicDisk {
  Complex center;             // Euclidean center C
  double radius;              // Euclidean radius R
  DiskPoint hyperbolic_center;
  double hyperbolic_radius;   // delta
};

/// D(z,delta) has Euclidean center C = (1-s^2) z / (1 - s^2 |z|^2) and
/// radius R = (1-|z|^2) s / (1 - s^2 |z|^2) with s = tanh(delta).
inline HyperbolicDisk hyperbolic_disk(const DiskPoint& z, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("hyperbolic_disk: delta must be positive");
  }
  double s = std::tanh(delta);
  double s2 = s * s;
  double denom = 1.0 - s2 * z.abs2();
  HyperbolicDisk d{(1.0 - s2) * z.value() / denom,
                   (1.0 - z.abs2()) * s / denom, z, delta};
  if (!(std::abs(d.center) + d.radius < 1.0)) {
    throw std::invalid_argument("hyperbolic_disk: ball escapes the unit disk");
  }
  return d;
}

}  // namespace bergman
