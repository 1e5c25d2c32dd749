#pragma once

// Quadrature on the unit disk against the normalized area measure
// d(lambda) = dA / pi.  Product rules: Gauss-Legendre in t = r^2 composed
// with a uniform (trapezoid) angular grid, which is spectrally exact for
// trigonometric polynomials.  An optional boundary grading absorbs
// (1-|z|^2)^(-a) endpoint singularities.

#include <complex>
#include <functional>
#include <vector>

#include "bergman/disk_geometry.hpp"

namespace bergman {

using Integrand = std::function<Complex(Complex)>;

class QuadratureRule {
 public:
  /// Gauss-Legendre nodes in t = r^2 on [0,1] times n_angular uniform angles.
  /// Integrates z^a conj(z)^b exactly for a+b <= 2*(2*n_radial-1) and
  /// |a-b| < n_angular.
  static QuadratureRule build(int n_radial, int n_angular);

  /// Same layout with the radial variable graded toward t = 1 via
  /// t = 1 - (1-x)^grading.  Trades polynomial exactness for accuracy on
  /// integrands with an integrable boundary singularity.
  static QuadratureRule build_graded(int n_radial, int n_angular,
                                     double grading);

  const std::vector<double>& radial_nodes() const { return r_; }
  const std::vector<double>& radial_weights() const { return w_; }
  int angular_count() const { return n_angular_; }
  std::size_t node_count() const { return r_.size() * n_angular_; }

  /// k-th unit-circle sample e^{2 pi i k / n_angular}, precomputed.
  Complex angle(int k) const { return circle_[k]; }

 private:
  QuadratureRule() = default;
  std::vector<double> r_;       // radii, in (0,1)
  std::vector<double> w_;       // radial weights, sum to 1
  std::vector<Complex> circle_; // unit-circle samples
  int n_angular_ = 0;
};

/// Weighted sum of f over the rule's nodes; throws if f returns a
/// non-finite value, naming the offending node.
Complex integrate(const Integrand& f, const QuadratureRule& rule);

/// Integral over the Euclidean disk {|z - center| <= radius} against the
/// normalized measure (so f = 1 gives radius^2).  The closed sub-disk must
/// lie inside the unit disk.
Complex integrate_subdisk(Complex center, double radius, const Integrand& f,
                          const QuadratureRule& rule);

/// Gauss-Legendre nodes and weights on [0,1] (used by the rule builders;
/// exposed for tests).
void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights);

}  // namespace bergman
