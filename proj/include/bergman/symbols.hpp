#pragma once

// Analytic symbols f, g on the disk: polynomials, finite combinations of
// reproducing kernels, and fractional binomial powers (1 - conj(eta) z)^(-beta).
// All three variants evaluate by closed form and are square-integrable.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "bergman/disk_geometry.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

struct Polynomial {
  std::vector<Complex> coeffs;  // a0 + a1 z + ... + ad z^d
};

struct KernelCombo {
  struct Term {
    Complex weight;
    DiskPoint pole;  // sum of weight * K_pole
  };
  std::vector<Term> terms;
};

struct BinomialPower {
  Complex eta;  // unimodular direction
  double beta;  // exponent in (1 - conj(eta) z)^(-beta); beta < 1
};

class Symbol {
 public:
  /// Degree cap keeps Toeplitz bands inside reasonable truncation sizes.
  static constexpr int kMaxDegree = 64;

  static Symbol polynomial(std::vector<Complex> coeffs);
  static Symbol kernel_combo(std::vector<KernelCombo::Term> terms);
  static Symbol binomial_power(Complex eta, double beta);

  /// Parse the JSON symbol spec:
  ///   {"type":"poly","coeffs":[[re,im],...]}
  ///   {"type":"kernel_combo","terms":[{"w":[re,im],"a":[re,im]},...]}
  ///   {"type":"binomial","eta":[re,im],"beta":0.5}
  static Symbol from_json(const std::string& text);

  Complex eval(Complex z) const;
  Complex eval(const DiskPoint& z) const { return eval(z.value()); }

  bool is_polynomial() const;
  /// Polynomial degree; throws for the other variants.
  int degree() const;
  const std::vector<Complex>& coefficients() const;

  /// Taylor coefficient of z^k at the origin (closed form for every variant).
  Complex taylor_coefficient(int k) const;

  bool is_zero() const;

  const std::variant<Polynomial, KernelCombo, BinomialPower>& variant() const {
    return v_;
  }

 private:
  explicit Symbol(std::variant<Polynomial, KernelCombo, BinomialPower> v)
      : v_(std::move(v)) {}
  std::variant<Polynomial, KernelCombo, BinomialPower> v_;
};

struct SymbolPair {
  Symbol f;
  Symbol g;
};

/// L^2 norm against the normalized area measure.  Polynomials use the
/// closed form sqrt(sum |a_k|^2 / (k+1)); other variants go through
/// quadrature.
double l2_norm(const Symbol& s, const QuadratureRule& rule);

/// (integral of |f|^p d lambda)^(1/p) by quadrature.
double lp_norm(const Symbol& s, double p, const QuadratureRule& rule);

/// f(phi_w(z)).
Complex compose_with_mobius(const Symbol& s, const DiskPoint& w,
                            const DiskPoint& z);

}  // namespace bergman
