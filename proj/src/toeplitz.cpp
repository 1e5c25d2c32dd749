#include "bergman/toeplitz.hpp"

#include "bergman/berezin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

TruncatedOperator TruncatedOperator::identity(int n) {
  TruncatedOperator id(n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1.0;
  return id;
}

TruncatedOperator TruncatedOperator::adjoint() const {
  TruncatedOperator out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.at(j, i) = std::conj(at(i, j));
  }
  return out;
}

std::vector<Complex> TruncatedOperator::apply(
    const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw std::invalid_argument("TruncatedOperator: vector dimension mismatch");
  }
  std::vector<Complex> out(n_, Complex(0.0));
  for (int i = 0; i < n_; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

std::vector<Complex> TruncatedOperator::apply_adjoint(
    const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw std::invalid_argument("TruncatedOperator: vector dimension mismatch");
  }
  std::vector<Complex> out(n_, Complex(0.0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[j] += std::conj(at(i, j)) * v[i];
  }
  return out;
}

TruncatedOperator TruncatedOperator::principal_submatrix(int n) const {
  if (n < 1 || n > n_) {
    throw std::invalid_argument("TruncatedOperator: bad submatrix size");
  }
  TruncatedOperator out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = at(i, j);
  }
  return out;
}

TruncatedOperator operator+(const TruncatedOperator& a,
                            const TruncatedOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("TruncatedOperator: dimension mismatch");
  }
  TruncatedOperator out(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) {
      out.at(i, j) = a.at(i, j) + b.at(i, j);
    }
  }
  return out;
}

TruncatedOperator operator-(const TruncatedOperator& a,
                            const TruncatedOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("TruncatedOperator: dimension mismatch");
  }
  TruncatedOperator out(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < a.dimension(); ++j) {
      out.at(i, j) = a.at(i, j) - b.at(i, j);
    }
  }
  return out;
}

TruncatedOperator product(const TruncatedOperator& a,
                          const TruncatedOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("product: dimension mismatch");
  }
  int n = a.dimension();
  TruncatedOperator out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Complex aik = a.at(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

TruncatedOperator toeplitz_matrix(const Symbol& s, int n) {
  if (!s.is_polynomial()) {
    throw std::invalid_argument(
        "toeplitz_matrix: closed form requires a polynomial symbol");
  }
  int d = s.degree();
  if (d >= n) {
    throw std::invalid_argument("toeplitz_matrix: need degree < dimension");
  }
  const auto& c = s.coefficients();
  TruncatedOperator out(n);
  // <z^k e_m, e_n> = delta_{n, m+k} / sqrt((n+1)(m+1)) * (m+1)
  for (int row = 0; row < n; ++row) {
    for (int col = std::max(0, row - d); col <= row; ++col) {
      int k = row - col;
      if (k < static_cast<int>(c.size())) {
        out.at(row, col) = c[k] * std::sqrt((col + 1.0) / (row + 1.0));
      }
    }
  }
  return out;
}

TruncatedOperator matrix_from_multiplier(const Integrand& fn, int n,
                                         const QuadratureRule& rule) {
  const auto& r = rule.radial_nodes();
  const auto& w = rule.radial_weights();
  int na = rule.angular_count();
  int nr = static_cast<int>(r.size());

  // Angular transform per radial ring: ring_modes[j][q + n - 1] =
  // (1/na) sum_k fn(r_j e^{i th_k}) e^{-i q th_k}, q = row - col.
  // Entry (row,col) is then sqrt((row+1)(col+1)) sum_j w_j r_j^{row+col}
  // ring_modes[j][row-col]; a pure reordering of the node sum.
  std::vector<std::vector<Complex>> ring_modes(
      nr, std::vector<Complex>(2 * n - 1, Complex(0.0)));
  std::vector<Complex> samples(na);
  for (int j = 0; j < nr; ++j) {
    for (int k = 0; k < na; ++k) {
      Complex z = r[j] * rule.angle(k);
      Complex v = fn(z);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "matrix_from_multiplier: non-finite value at node z = ("
            << z.real() << ", " << z.imag() << ")";
        throw std::runtime_error(msg.str());
      }
      samples[k] = v;
    }
    for (int q = -(n - 1); q <= n - 1; ++q) {
      Complex acc = 0.0;
      for (int k = 0; k < na; ++k) {
        acc += samples[k] * std::conj(rule.angle((q * k % na + na) % na));
      }
      ring_modes[j][q + n - 1] = acc / static_cast<double>(na);
    }
  }

  TruncatedOperator out(n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      Complex acc = 0.0;
      for (int j = 0; j < nr; ++j) {
        acc += w[j] * std::pow(r[j], row + col) *
               ring_modes[j][(row - col) + n - 1];
      }
      out.at(row, col) = std::sqrt((row + 1.0) * (col + 1.0)) * acc;
    }
  }
  return out;
}

TruncatedOperator quadrature_matrix(const Symbol& s, int n,
                                    const QuadratureRule& rule) {
  return matrix_from_multiplier([&](Complex z) { return s.eval(z); }, n, rule);
}

double operator_norm(const TruncatedOperator& a, double tol,
                     int max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("operator_norm: tol > 0");
  int n = a.dimension();
  std::vector<Complex> v(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
  double lambda = 0.0;
  double gap = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    std::vector<Complex> av = a.apply(v);
    std::vector<Complex> mv = a.apply_adjoint(av);  // A* A v
    double norm_mv = 0.0;
    double rayleigh = 0.0;
    for (int i = 0; i < n; ++i) {
      norm_mv += std::norm(mv[i]);
      rayleigh += (std::conj(v[i]) * mv[i]).real();
    }
    norm_mv = std::sqrt(norm_mv);
    if (norm_mv == 0.0) return 0.0;  // v in the kernel of A and start is fixed
    gap = std::abs(rayleigh - lambda);
    lambda = rayleigh;
    if (it > 0 && gap <= tol * std::max(lambda, 1e-300)) {
      return std::sqrt(lambda);
    }
    for (int i = 0; i < n; ++i) v[i] = mv[i] / norm_mv;
  }
  std::ostringstream msg;
  msg << "operator_norm: no convergence after " << max_iterations
      << " iterations; last gap " << gap;
  throw std::runtime_error(msg.str());
}

std::vector<Complex> kernel_vector(const DiskPoint& z, int n) {
  // K_z = sum_n conj(z)^n sqrt(n+1) e_n; finite-section norm approaches
  // K_z(z) with a geometric tail.
  std::vector<Complex> c(n);
  Complex zbar = std::conj(z.value());
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) {
    c[k] = p * std::sqrt(k + 1.0);
    p *= zbar;
  }
  return c;
}

std::pair<Complex, Complex> kernel_action(const SymbolPair& pair,
                                          const DiskPoint& z, const DiskPoint& w,
                                          int n, const QuadratureRule& rule) {
  auto matrix = [&](const Symbol& s) {
    return (s.is_polynomial() && s.degree() < n) ? toeplitz_matrix(s, n)
                                                 : quadrature_matrix(s, n, rule);
  };
  TruncatedOperator tf = matrix(pair.f);
  TruncatedOperator tg = matrix(pair.g);
  std::vector<Complex> v = kernel_vector(z, n);
  std::vector<Complex> out = tf.apply(tg.apply_adjoint(v));
  Complex lhs = 0.0;
  Complex wp = 1.0;
  for (int k = 0; k < n; ++k) {
    lhs += out[k] * std::sqrt(k + 1.0) * wp;  // e_k(w) = sqrt(k+1) w^k
    wp *= w.value();
  }
  Complex rhs = pair.f.eval(w) * std::conj(pair.g.eval(z)) * bergman_kernel(z, w);
  return {lhs, rhs};
}

double hs_tail_norm(const SymbolPair& pair, double r,
                    const QuadratureRule& rule) {
  if (!(r > 0.0 && r < 1.0 - 1e-6)) {
    throw std::invalid_argument("hs_tail_norm: need 0 < r < 1 - 1e-6");
  }
  if (pair.g.is_zero()) return 0.0;
  // HS^2 = int_{|u|<=r} |g(u)|^2 |f|^2~(u) K_u(u) d lambda(u), using
  // int |K_u(v)|^2 |f(v)|^2 d lambda(v) = K_u(u) |f|^2~(u).
  bool f_constant = pair.f.is_polynomial() && pair.f.degree() == 0;
  double f_const_sq =
      f_constant ? std::norm(pair.f.coefficients()[0]) : 0.0;
  QuadratureRule inner = QuadratureRule::build(16, 64);
  Complex hs2 = integrate_subdisk(
      0.0, r,
      [&](Complex u) {
        DiskPoint pu(u);
        double bf = f_constant ? f_const_sq
                               : berezin_mod_squared(pair.f, pu, inner);
        double kuu = 1.0 / ((1.0 - std::norm(u)) * (1.0 - std::norm(u)));
        return Complex(std::norm(pair.g.eval(u)) * bf * kuu);
      },
      rule);
  return std::sqrt(hs2.real());
}

}  // namespace bergman
