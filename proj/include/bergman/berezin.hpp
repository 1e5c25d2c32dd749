#pragma once

// Berezin transforms and the product quantity sup_w |f|^2~(w) |g|^2~(w),
// estimated on polar grids that march toward the boundary.

#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

/// Polar sampling grid realizing "sup over the disk" and "limit toward the
/// boundary" at desk scale: strictly increasing radii, uniform angles.
struct RadiusSchedule {
  std::vector<double> radii;
  int angular_samples = 64;

  /// Radii 1 - 2^(-j), j = 1..levels.
  static RadiusSchedule dyadic(int levels, int angular_samples);
  void validate() const;
};

struct SarasonReport {
  struct Row {
    Complex w;
    double bf;       // |f|^2~(w)
    double bg;       // |g|^2~(w)
    double product;  // bf * bg
  };
  std::vector<Row> grid;
  double sup_estimate = 0.0;
  // (radius, max over angles of the product) per schedule radius.
  std::vector<std::pair<double, double>> boundary_trend;
};

/// Threshold for the finite boundary-limit proxy: the last three trend
/// maxima must each fall below this and be decreasing.
inline constexpr double kCompactTrendThreshold = 1e-3;

/// u~(w) = integral of u(z) |k_w(z)|^2 d lambda(z); reproduces analytic u.
Complex berezin_transform(const Integrand& u, const DiskPoint& w,
                          const QuadratureRule& rule);

/// |f|^2~(w) computed as ||f o phi_w||_2^2 (change-of-variable route; the
/// |k_w|^2-weighted route above is the cross-check).
double berezin_mod_squared(const Symbol& s, const DiskPoint& w,
                           const QuadratureRule& rule);

/// |f|^2~(w) * |g|^2~(w).
double sarason_quantity(const SymbolPair& pair, const DiskPoint& w,
                        const QuadratureRule& rule);

SarasonReport sarason_sup(const SymbolPair& pair, const RadiusSchedule& schedule,
                          const QuadratureRule& rule);

/// Finite proxy for lim_{|w|->1} of the product being zero.
bool compact_predicate(const SarasonReport& report);

}  // namespace bergman
