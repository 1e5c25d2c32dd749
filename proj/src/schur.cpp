#include "bergman/schur.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

SchurParameters::SchurParameters(double epsilon_, double p_, double delta_,
                                 double r_cut_)
    : epsilon(epsilon_), p(p_), delta(delta_), r_cut(r_cut_) {
  if (!(p > 1.0)) throw std::invalid_argument("SchurParameters: p must be > 1");
  double pprime = p / (p - 1.0);
  if (!(epsilon > 0.0 && epsilon < 1.0 / (2.0 * pprime))) {
    throw std::invalid_argument("SchurParameters: need 0 < epsilon < 1/(2p')");
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("SchurParameters: need 0 < delta < 1/2");
  }
  if (!(r_cut >= 0.0 && r_cut < 1.0)) {
    throw std::invalid_argument("SchurParameters: need 0 <= r_cut < 1");
  }
}

namespace {

// 1 - |phi_z(v)|^2 = (1-|z|^2)(1-|v|^2) / |1 - conj(z) v|^2
double one_minus_mobius_sq(const DiskPoint& z, Complex v) {
  double num = (1.0 - z.abs2()) * (1.0 - std::norm(v));
  return num / std::norm(1.0 - std::conj(z.value()) * v);
}

double kernel_diag_pow(Complex v, double eps) {
  // K_v(v)^eps = (1-|v|^2)^(-2 eps)
  return std::pow(1.0 - std::norm(v), -2.0 * eps);
}

}  // namespace

double s_operator_fn(const std::function<double(Complex)>& abs_f,
                     const DiskPoint& z, const SchurParameters& params,
                     const QuadratureRule& rule) {
  double inv_z = 1.0 / (1.0 - z.abs2());
  double expo = 1.0 - 2.0 * params.epsilon;
  Complex v = integrate(
      [&](Complex u) {
        double val = abs_f(u) * inv_z / (1.0 - std::norm(u)) *
                     std::pow(one_minus_mobius_sq(z, u), expo);
        return Complex(val);
      },
      rule);
  return v.real();
}

double s_operator(const Symbol& s, const DiskPoint& z,
                  const SchurParameters& params, const QuadratureRule& rule) {
  return s_operator_fn([&](Complex u) { return std::abs(s.eval(u)); }, z,
                       params, rule);
}

double lemma1_ratio(const Symbol& s, const DiskPoint& z,
                    const SchurParameters& params, const QuadratureRule& rule) {
  if (s.is_zero()) {
    throw std::invalid_argument("lemma1_ratio: zero symbol has no ratio");
  }
  double sf = s_operator(s, z, params, rule);
  double kzz_eps = std::pow(1.0 - z.abs2(), -2.0 * params.epsilon);
  double norm_p = lp_norm(s, params.p, rule);
  return sf / (kzz_eps * norm_p);
}

std::pair<double, double> remark1_check(const Symbol& s, const DiskPoint& u,
                                        const SchurParameters& params,
                                        const QuadratureRule& rule) {
  double lhs = integrate(
                   [&](Complex v) {
                     DiskPoint pv(v);
                     double val = std::abs(s.eval(v)) *
                                  std::abs(bergman_kernel(pv, u)) *
                                  kernel_diag_pow(v, params.epsilon);
                     return Complex(val);
                   },
                   rule)
                   .real();
  double rhs = s_operator_fn(
      [&](Complex v) { return std::abs(s.eval(mobius(u, DiskPoint(v)))); }, u,
      params, rule);
  return {lhs, rhs};
}

std::pair<Complex, Complex> projection_identity(const Symbol& g,
                                                const DiskPoint& z,
                                                const DiskPoint& u,
                                                const QuadratureRule& rule) {
  Complex lhs = integrate(
      [&](Complex w) {
        DiskPoint pw(w);
        return std::conj(g.eval(w)) * bergman_kernel(z, pw) *
               bergman_kernel(pw, u);
      },
      rule);
  Complex rhs = std::conj(g.eval(z)) * bergman_kernel(z, u);
  return {lhs, rhs};
}

double schur_ratio(const SymbolPair& pair, const DiskPoint& u,
                   const SchurParameters& params, const QuadratureRule& rule) {
  if (params.r_cut > 0.0 && u.abs() <= params.r_cut) return 0.0;
  if (pair.g.is_zero()) return 0.0;
  double integral = integrate(
                        [&](Complex v) {
                          DiskPoint pv(v);
                          double val = std::abs(pair.f.eval(v)) *
                                       std::abs(bergman_kernel(pv, u)) *
                                       kernel_diag_pow(v, params.epsilon);
                          return Complex(val);
                        },
                        rule)
                        .real();
  return std::abs(pair.g.eval(u)) * integral /
         kernel_diag_pow(u.value(), params.epsilon);
}

double schur_dual_ratio(const SymbolPair& pair, const DiskPoint& v,
                        const SchurParameters& params,
                        const QuadratureRule& rule) {
  return schur_ratio({pair.g, pair.f}, v, params, rule);
}

double tail_constant(const SymbolPair& pair, double r,
                     const RadiusSchedule& schedule,
                     const QuadratureRule& rule) {
  schedule.validate();
  if (!(r < schedule.radii.back())) {
    throw std::invalid_argument("tail_constant: no schedule radii beyond r");
  }
  double best = 0.0;
  bool any = false;
  for (double rho : schedule.radii) {
    if (!(rho > r)) continue;
    for (int k = 0; k < schedule.angular_samples; ++k) {
      double th = 2.0 * std::numbers::pi * k / schedule.angular_samples;
      DiskPoint u(rho * std::cos(th), rho * std::sin(th));
      double val = std::sqrt(berezin_mod_squared(pair.f, u, rule) *
                             berezin_mod_squared(pair.g, u, rule));
      if (val > best) best = val;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("tail_constant: empty grid beyond r");
  return best;
}

LueckingResult luecking_k(const DiskPoint& w, const DiskPoint& z,
                          const SchurParameters& params,
                          const QuadratureRule& rule) {
  HyperbolicDisk d = hyperbolic_disk(w, params.delta);  // throws if it escapes
  double expo = 1.0 - 2.0 * params.epsilon;
  double inv_z = 1.0 / (1.0 - z.abs2());
  Complex mu = integrate_subdisk(
      d.center, d.radius,
      [&](Complex v) {
        double val = inv_z / (1.0 - std::norm(v)) *
                     std::pow(one_minus_mobius_sq(z, v), expo);
        return Complex(val);
      },
      rule);
  double lambda_d = d.radius * d.radius;
  double k = mu.real() / lambda_d;
  double kzz_eps = std::pow(1.0 - z.abs2(), -2.0 * params.epsilon);
  double bound_ratio =
      k * std::pow(1.0 - w.abs2(), 2.0 * params.epsilon) / kzz_eps;
  return {k, bound_ratio};
}

}  // namespace bergman
