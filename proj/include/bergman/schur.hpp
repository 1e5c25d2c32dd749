#pragma once

// The Schur-test verification apparatus: the weighted integral operator S,
// its growth-bound ratio, the change-of-variable identity, the projection
// identity, Schur ratios with the K_v(v)^epsilon test function, boundary
// tail constants, and the local measure-ratio k(w).

#include <functional>
#include <utility>
#include <vector>

#include "bergman/berezin.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

/// Validated parameter block: epsilon in (0, 1/(2p')) with 1/p + 1/p' = 1,
/// delta in (0, 1/2), r_cut in [0, 1).
struct SchurParameters {
  double epsilon;
  double p;
  double delta;
  double r_cut;

  SchurParameters(double epsilon_, double p_ = 2.0, double delta_ = 0.25,
                  double r_cut_ = 0.0);
  double conjugate_exponent() const { return p / (p - 1.0); }
};

struct SchurRatioReport {
  std::vector<std::pair<Complex, double>> grid;  // (u, ratio)
  double max_ratio = 0.0;
  SchurParameters parameters;
};

/// (S f)(z) with |f| sampled from a pointwise callback.
double s_operator_fn(const std::function<double(Complex)>& abs_f,
                     const DiskPoint& z, const SchurParameters& params,
                     const QuadratureRule& rule);

/// (S f)(z) = int |f(v)| (1-|z|^2)^-1 (1-|v|^2)^-1 (1-|phi_z(v)|^2)^(1-2 eps)
///            d lambda(v).
double s_operator(const Symbol& s, const DiskPoint& z,
                  const SchurParameters& params, const QuadratureRule& rule);

/// Sf(z) / (K_z(z)^eps ||f||_p); bounded uniformly in z when eps < 1/(2p').
double lemma1_ratio(const Symbol& s, const DiskPoint& z,
                    const SchurParameters& params, const QuadratureRule& rule);

/// Two routes to I(u) = int |f(v)| |K_v(u)| K_v(v)^eps d lambda(v):
/// lhs direct, rhs = S(f o phi_u)(u).
std::pair<double, double> remark1_check(const Symbol& s, const DiskPoint& u,
                                        const SchurParameters& params,
                                        const QuadratureRule& rule);

/// lhs = int conj(g(w)) K_z(w) K_w(u) d lambda(w) by quadrature,
/// rhs = conj(g(z)) K_z(u).
std::pair<Complex, Complex> projection_identity(const Symbol& g,
                                                const DiskPoint& z,
                                                const DiskPoint& u,
                                                const QuadratureRule& rule);

/// |g(u)| int |f(v)| |K_v(u)| K_v(v)^eps d lambda(v) / K_u(u)^eps, gated by
/// the tail indicator when params.r_cut > 0 (returns 0 for |u| <= r_cut).
double schur_ratio(const SymbolPair& pair, const DiskPoint& u,
                   const SchurParameters& params, const QuadratureRule& rule);

/// Same bound with the roles of f and g swapped (second Schur inequality).
double schur_dual_ratio(const SymbolPair& pair, const DiskPoint& v,
                        const SchurParameters& params,
                        const QuadratureRule& rule);

/// c1(r): max over schedule points with |u| > r of
/// sqrt(|f|^2~(u) |g|^2~(u)); nonincreasing in r.
double tail_constant(const SymbolPair& pair, double r,
                     const RadiusSchedule& schedule, const QuadratureRule& rule);

struct LueckingResult {
  double k;            // mu(D(w,delta)) / lambda(D(w,delta))
  double bound_ratio;  // k * (1-|w|^2)^(2 eps) / K_z(z)^eps
};

/// Local measure ratio for d mu(v) =
/// (1-|z|^2)^-1 (1-|v|^2)^-1 (1-|phi_z(v)|^2)^(1-2 eps) d lambda(v) on the
/// Bergman ball D(w, delta).
LueckingResult luecking_k(const DiskPoint& w, const DiskPoint& z,
                          const SchurParameters& params,
                          const QuadratureRule& rule);

}  // namespace bergman
