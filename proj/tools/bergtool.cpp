// Batch diagnostics for Toeplitz-product boundedness and compactness on the
// Bergman space of the unit disk.
//
//   bergtool boundedness <scenario.json>...   norm vs Berezin-criterion table
//   bergtool compactness <scenario.json>...   boundary trend, tail constants
//   bergtool corollary   <scenario.json>...   g = 1 specialization
//   bergtool selftest                         quick invariant suites
//
// Exit codes: 0 all stages ran, 2 invalid scenario, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bergman/scenario.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read scenario file " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_mode(const std::vector<std::string>& files, const std::string& out_dir,
             bergman::DiagnosticReport (*pipeline)(const bergman::Scenario&)) {
  for (const auto& path : files) {
    bergman::Scenario scenario = bergman::Scenario::from_json(slurp(path));
    bergman::DiagnosticReport report = pipeline(scenario);
    report.write(out_dir);
    std::cout << scenario.name << ": " << report.mode << " report written\n";
  }
  return 0;
}

int selftest() {
  using namespace bergman;
  int failures = 0;
  auto check = [&](const char* what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> radial(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto random_point = [&] {
    double r = radial(rng), th = angle(rng);
    return DiskPoint(r * std::cos(th), r * std::sin(th));
  };

  bool involution = true, jacobian = true, symmetry = true;
  for (int i = 0; i < 1000; ++i) {
    DiskPoint w = random_point(), z = random_point();
    Complex once = mobius(w, z);
    involution &= std::abs(mobius(w, DiskPoint(once)) - z.value()) <= 1e-12;
    jacobian &= std::abs(std::norm(mobius_derivative(w, z)) -
                         std::norm(normalized_kernel(w, z))) <= 1e-12;
    symmetry &= std::abs(bergman_metric(z, w) - bergman_metric(w, z)) <= 1e-12;
  }
  check("mobius involution", involution);
  check("jacobian identity", jacobian);
  check("metric symmetry", symmetry);

  QuadratureRule rule = QuadratureRule::build(64, 256);
  bool exact = true;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      Complex v = integrate(
          [&](Complex zz) {
            return std::pow(zz, a) * std::pow(std::conj(zz), b);
          },
          rule);
      Complex want = (a == b) ? Complex(1.0 / (a + 1.0)) : Complex(0.0);
      exact &= std::abs(v - want) <= 1e-12;
    }
  }
  check("quadrature monomial exactness", exact);

  Symbol f = Symbol::polynomial({0.0, 1.0});
  bool reproducing = true;
  for (int i = 0; i < 20; ++i) {
    DiskPoint w = random_point();
    Complex bt = berezin_transform([&](Complex zz) { return f.eval(zz); }, w, rule);
    reproducing &= std::abs(bt - f.eval(w)) <= 1e-8;
  }
  check("berezin reproducing property", reproducing);

  TruncatedOperator closed = toeplitz_matrix(f, 16);
  TruncatedOperator quad = quadrature_matrix(f, 16, rule);
  double dev = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      dev = std::max(dev, std::abs(closed.at(i, j) - quad.at(i, j)));
    }
  }
  check("toeplitz closed form vs quadrature", dev <= 1e-12);

  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman-space Toeplitz product diagnostics"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string out_dir = ".";

  auto add_mode = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("scenario", files, "scenario JSON file(s)")->required();
    sub->add_option("-o,--output", out_dir, "output directory");
    return sub;
  };
  CLI::App* bounded = add_mode("boundedness", "norm vs Berezin-criterion table");
  CLI::App* compact = add_mode("compactness", "boundary-limit diagnostics");
  CLI::App* corollary = add_mode("corollary", "g = 1 specialization");
  CLI::App* self = app.add_subcommand("selftest", "run quick invariant suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (self->parsed()) return selftest();
    if (bounded->parsed()) return run_mode(files, out_dir, bergman::run_boundedness);
    if (compact->parsed()) return run_mode(files, out_dir, bergman::run_compactness);
    if (corollary->parsed()) return run_mode(files, out_dir, bergman::run_corollary_mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical stage failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
