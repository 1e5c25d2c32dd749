#pragma once

// Finite compressions of Toeplitz operators to the span of the first N
// orthonormal monomials e_n(z) = sqrt(n+1) z^n, plus the largest singular
// value, reproducing-kernel actions, and Hilbert-Schmidt tail norms.

#include <utility>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/symbols.hpp"

namespace bergman {

class TruncatedOperator {
 public:
  explicit TruncatedOperator(int n)
      : n_(n), a_(static_cast<std::size_t>(n) * n, Complex(0.0)) {
    if (n < 1) throw std::invalid_argument("TruncatedOperator: dimension >= 1");
  }

  static TruncatedOperator identity(int n);

  int dimension() const { return n_; }
  Complex& at(int row, int col) { return a_[static_cast<std::size_t>(row) * n_ + col]; }
  Complex at(int row, int col) const {
    return a_[static_cast<std::size_t>(row) * n_ + col];
  }

  TruncatedOperator adjoint() const;
  std::vector<Complex> apply(const std::vector<Complex>& v) const;
  std::vector<Complex> apply_adjoint(const std::vector<Complex>& v) const;

  /// Top-left n x n block.
  TruncatedOperator principal_submatrix(int n) const;

 private:
  int n_;
  std::vector<Complex> a_;  // row-major
};

TruncatedOperator operator+(const TruncatedOperator& a,
                            const TruncatedOperator& b);
TruncatedOperator operator-(const TruncatedOperator& a,
                            const TruncatedOperator& b);

/// Matrix product; the compression of an operator product only up to
/// truncation error, which the convergence-in-N tests cover.
TruncatedOperator product(const TruncatedOperator& a, const TruncatedOperator& b);

/// Compression of T_f for polynomial f: entry (n,m) = a_{n-m} sqrt((m+1)/(n+1))
/// on the band 0 <= n-m <= deg(f), zero elsewhere.
TruncatedOperator toeplitz_matrix(const Symbol& s, int n);

/// Compression of multiplication by an arbitrary pointwise function:
/// entry (n,m) = <fn * e_m, e_n> by quadrature.
TruncatedOperator matrix_from_multiplier(const Integrand& fn, int n,
                                         const QuadratureRule& rule);

/// Compression of T_s for any symbol variant, via quadrature.
TruncatedOperator quadrature_matrix(const Symbol& s, int n,
                                    const QuadratureRule& rule);

/// Largest singular value by power iteration on A* A, deterministic
/// all-ones start.  Throws after max_iterations without convergence.
double operator_norm(const TruncatedOperator& a, double tol = 1e-10,
                     int max_iterations = 200000);

/// Coefficients of the truncated kernel K_z: c_n = conj(z)^n sqrt(n+1).
std::vector<Complex> kernel_vector(const DiskPoint& z, int n);

/// Lemma-style kernel action: lhs synthesizes (T_f T_gbar K_z)(w) through the
/// N-truncation, rhs is the closed form f(w) conj(g(z)) K_z(w).
std::pair<Complex, Complex> kernel_action(const SymbolPair& pair,
                                          const DiskPoint& z, const DiskPoint& w,
                                          int n, const QuadratureRule& rule);

/// Hilbert-Schmidt norm of the tail operator with kernel
/// chi_{|u|<=r}(u) (T_f T_gbar K_u)(v): reduces to
/// sqrt( integral_{|u|<=r} |g(u)|^2 |f|^2~(u) K_u(u) d lambda(u) ).
double hs_tail_norm(const SymbolPair& pair, double r,
                    const QuadratureRule& rule);

}  // namespace bergman
