#include "bergman/symbols.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace bergman {

Symbol Symbol::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  if (static_cast<int>(coeffs.size()) - 1 > kMaxDegree) {
    throw std::invalid_argument("Symbol: polynomial degree exceeds cap");
  }
  return Symbol(Polynomial{std::move(coeffs)});
}

Symbol Symbol::kernel_combo(std::vector<KernelCombo::Term> terms) {
  return Symbol(KernelCombo{std::move(terms)});
}

Symbol Symbol::binomial_power(Complex eta, double beta) {
  if (std::abs(std::abs(eta) - 1.0) > 1e-12) {
    throw std::invalid_argument("Symbol: binomial direction must be unimodular");
  }
  if (!(beta < 1.0)) {
    throw std::invalid_argument("Symbol: binomial exponent must be < 1");
  }
  return Symbol(BinomialPower{eta, beta});
}

namespace {

Complex parse_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("Symbol: complex values are [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Symbol Symbol::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string type = j.at("type").get<std::string>();
  if (type == "poly") {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_complex(c));
    return polynomial(std::move(coeffs));
  }
  if (type == "kernel_combo") {
    std::vector<KernelCombo::Term> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back(
          {parse_complex(t.at("w")), DiskPoint(parse_complex(t.at("a")))});
    }
    return kernel_combo(std::move(terms));
  }
  if (type == "binomial") {
    return binomial_power(parse_complex(j.at("eta")), j.at("beta").get<double>());
  }
  throw std::invalid_argument("Symbol: unknown type \"" + type + "\"");
}

Complex Symbol::eval(Complex z) const {
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          Complex acc = 0.0;
          for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
            acc = acc * z + *it;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, KernelCombo>) {
          Complex acc = 0.0;
          for (const auto& t : s.terms) {
            Complex d = 1.0 - std::conj(t.pole.value()) * z;
            acc += t.weight / (d * d);
          }
          return acc;
        } else {
          // Principal branch; 1 - conj(eta) z has positive real part on the
          // disk, so the power is single-valued and analytic.
          Complex w = 1.0 - std::conj(s.eta) * z;
          return std::exp(-s.beta * std::log(w));
        }
      },
      v_);
}

bool Symbol::is_polynomial() const {
  return std::holds_alternative<Polynomial>(v_);
}

int Symbol::degree() const {
  const auto* p = std::get_if<Polynomial>(&v_);
  if (!p) throw std::logic_error("Symbol: degree() requires polynomial variant");
  int d = 0;
  for (int k = 0; k < static_cast<int>(p->coeffs.size()); ++k) {
    if (p->coeffs[k] != Complex(0.0)) d = k;
  }
  return d;
}

const std::vector<Complex>& Symbol::coefficients() const {
  const auto* p = std::get_if<Polynomial>(&v_);
  if (!p) {
    throw std::logic_error("Symbol: coefficients() requires polynomial variant");
  }
  return p->coeffs;
}

Complex Symbol::taylor_coefficient(int k) const {
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return k < static_cast<int>(s.coeffs.size()) ? s.coeffs[k]
                                                       : Complex(0.0);
        } else if constexpr (std::is_same_v<T, KernelCombo>) {
          // K_a(z) = sum (k+1) conj(a)^k z^k
          Complex acc = 0.0;
          for (const auto& t : s.terms) {
            acc += t.weight * (k + 1.0) * std::pow(std::conj(t.pole.value()),
                                                   static_cast<double>(k));
          }
          return acc;
        } else {
          // (1 - x)^(-beta) = sum_k [prod_{j<k} (beta+j)/(j+1)] x^k
          Complex c = 1.0;
          for (int j = 0; j < k; ++j) {
            c *= std::conj(s.eta) * ((s.beta + j) / (j + 1.0));
          }
          return c;
        }
      },
      v_);
}

bool Symbol::is_zero() const {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          for (const auto& c : s.coeffs) {
            if (c != Complex(0.0)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, KernelCombo>) {
          for (const auto& t : s.terms) {
            if (t.weight != Complex(0.0)) return false;
          }
          return true;
        } else {
          return false;
        }
      },
      v_);
}

double l2_norm(const Symbol& s, const QuadratureRule& rule) {
  if (s.is_polynomial()) {
    double acc = 0.0;
    const auto& c = s.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      acc += std::norm(c[k]) / (k + 1.0);
    }
    return std::sqrt(acc);
  }
  Complex v = integrate([&](Complex z) { return Complex(std::norm(s.eval(z))); },
                        rule);
  return std::sqrt(v.real());
}

double lp_norm(const Symbol& s, double p, const QuadratureRule& rule) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  Complex v = integrate(
      [&](Complex z) { return Complex(std::pow(std::abs(s.eval(z)), p)); },
      rule);
  return std::pow(v.real(), 1.0 / p);
}

Complex compose_with_mobius(const Symbol& s, const DiskPoint& w,
                            const DiskPoint& z) {
  return s.eval(mobius(w, z));
}

}  // namespace bergman
