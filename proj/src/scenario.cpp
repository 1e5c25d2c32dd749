#include "bergman/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bergman {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

Symbol symbol_from(const nlohmann::json& j) {
  return Symbol::from_json(j.dump());
}

// Minimal ordered JSON writer; keys are emitted in insertion order and all
// numbers at 17 significant digits, so identical inputs give identical bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object() { sep(); out_ << '{'; first_ = true; return *this; }
  JsonWriter& end_object() { out_ << '}'; first_ = false; return *this; }
  JsonWriter& begin_array() { sep(); out_ << '['; first_ = true; return *this; }
  JsonWriter& end_array() { out_ << ']'; first_ = false; return *this; }
  JsonWriter& key(const std::string& k) {
    sep();
    out_ << '"' << k << "\":";
    first_ = true;  // suppress comma before the value
    return *this;
  }
  JsonWriter& value(double v) { sep(); out_ << format_double(v); return *this; }
  JsonWriter& value(int v) { sep(); out_ << v; return *this; }
  JsonWriter& value(bool v) { sep(); out_ << (v ? "true" : "false"); return *this; }
  JsonWriter& value(const std::string& v) {
    sep();
    out_ << nlohmann::json(v).dump();  // proper string escaping
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  void sep() {
    if (!first_) out_ << ',';
    first_ = false;
  }
  std::ostringstream out_;
  bool first_ = true;
};

void write_params(JsonWriter& w, const Scenario& s) {
  w.key("parameters").begin_object();
  w.key("epsilon").value(s.params.epsilon);
  w.key("p").value(s.params.p);
  w.key("delta").value(s.params.delta);
  w.key("rule").begin_array().value(s.rule_radial).value(s.rule_angular).end_array();
  w.key("angles").value(s.schedule.angular_samples);
  w.key("radii").begin_array();
  for (double r : s.schedule.radii) w.value(r);
  w.end_array();
  w.end_object();
}

// Graded rule for the boundary-singular Schur integrands.
QuadratureRule schur_rule() { return QuadratureRule::build_graded(256, 256, 3.0); }

}  // namespace

Scenario Scenario::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Scenario: bad JSON: ") + e.what());
  }
  try {
    double epsilon = j.value("epsilon", 0.125);
    double p = j.value("p", 2.0);
    double delta = j.value("delta", 0.25);
    RadiusSchedule schedule;
    schedule.angular_samples = j.value("angles", 64);
    if (j.contains("radii")) {
      for (const auto& r : j.at("radii")) schedule.radii.push_back(r.get<double>());
    } else {
      schedule = RadiusSchedule::dyadic(12, schedule.angular_samples);
    }
    schedule.validate();
    Scenario s{j.at("name").get<std::string>(),
               SymbolPair{symbol_from(j.at("f")), symbol_from(j.at("g"))},
               SchurParameters(epsilon, p, delta),
               schedule,
               {},
               64,
               256};
    if (j.contains("truncations")) {
      for (const auto& n : j.at("truncations")) s.truncations.push_back(n.get<int>());
    } else {
      s.truncations = {8, 16, 32, 64};
    }
    int prev = 0;
    for (int n : s.truncations) {
      if (n <= prev) {
        throw std::invalid_argument("Scenario: truncations must be increasing");
      }
      prev = n;
    }
    if (j.contains("rule")) {
      s.rule_radial = j.at("rule").at(0).get<int>();
      s.rule_angular = j.at("rule").at(1).get<int>();
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Scenario: ") + e.what());
  }
}

QuadratureRule Scenario::make_rule() const {
  return QuadratureRule::build(rule_radial, rule_angular);
}

std::string sarason_report_csv(const SarasonReport& report) {
  std::ostringstream out;
  out << "re_w,im_w,bf,bg,product\n";
  for (const auto& row : report.grid) {
    out << format_double(row.w.real()) << ',' << format_double(row.w.imag())
        << ',' << format_double(row.bf) << ',' << format_double(row.bg) << ','
        << format_double(row.product) << '\n';
  }
  return out.str();
}

void DiagnosticReport::write(const std::string& out_dir) const {
  auto open = [&](const std::string& file) {
    std::ofstream f(out_dir + "/" + file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_dir + "/" + file);
    return f;
  };
  open(name + ".report.json") << json << '\n';
  for (const auto& curve : curves) {
    auto f = open(name + "." + curve.suffix + ".csv");
    f << curve.header << '\n';
    for (const auto& row : curve.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) f << ',';
        f << format_double(row[i]);
      }
      f << '\n';
    }
  }
}

namespace {

TruncatedOperator symbol_matrix(const Symbol& s, int n,
                                const QuadratureRule& rule) {
  // The closed-form band needs degree < N; high-degree polynomials at small
  // truncations go through the quadrature route instead.
  bool closed_form = s.is_polynomial() && s.degree() < n;
  return closed_form ? toeplitz_matrix(s, n) : quadrature_matrix(s, n, rule);
}

CurveFile sarason_curve(const SarasonReport& rep) {
  CurveFile c{"sarason", "re_w,im_w,bf,bg,product", {}};
  for (const auto& row : rep.grid) {
    c.rows.push_back({row.w.real(), row.w.imag(), row.bf, row.bg, row.product});
  }
  return c;
}

CurveFile trend_curve(const SarasonReport& rep) {
  CurveFile c{"boundary_trend", "radius,max_product", {}};
  for (const auto& [r, m] : rep.boundary_trend) c.rows.push_back({r, m});
  return c;
}

}  // namespace

DiagnosticReport run_boundedness(const Scenario& scenario) {
  QuadratureRule rule = scenario.make_rule();
  SarasonReport sar = sarason_sup(scenario.pair, scenario.schedule, rule);
  double sqrt_sup = std::sqrt(sar.sup_estimate);

  std::vector<std::pair<int, double>> norms;
  for (int n : scenario.truncations) {
    TruncatedOperator tf = symbol_matrix(scenario.pair.f, n, rule);
    TruncatedOperator tgbar = symbol_matrix(scenario.pair.g, n, rule).adjoint();
    norms.emplace_back(n, operator_norm(product(tf, tgbar)));
  }

  // Schur ratios go on a coarser sub-grid: the graded rule resolves the
  // boundary singularity but not the angular peaking past |u| ~ 0.95.
  QuadratureRule srule = schur_rule();
  double ratio_max = 0.0, dual_max = 0.0;
  CurveFile schur_curve{"schur_ratio", "re_u,im_u,ratio,dual_ratio", {}};
  int schur_angles = std::min(scenario.schedule.angular_samples, 16);
  for (double r : scenario.schedule.radii) {
    if (r > 0.95) continue;
    for (int k = 0; k < schur_angles; ++k) {
      double th = 2.0 * std::numbers::pi * k / schur_angles;
      DiskPoint u(r * std::cos(th), r * std::sin(th));
      double ratio = schur_ratio(scenario.pair, u, scenario.params, srule);
      double dual = schur_dual_ratio(scenario.pair, u, scenario.params, srule);
      schur_curve.rows.push_back({u.value().real(), u.value().imag(), ratio, dual});
      if (ratio > ratio_max) ratio_max = ratio;
      if (dual > dual_max) dual_max = dual;
    }
  }

  double norm_top = norms.back().second;
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(std::string("1"));
  w.key("name").value(scenario.name);
  w.key("mode").value(std::string("boundedness"));
  w.key("sup_estimate").value(sar.sup_estimate);
  w.key("sqrt_sup_estimate").value(sqrt_sup);
  w.key("schur_ratio_max").value(ratio_max);
  w.key("schur_dual_ratio_max").value(dual_max);
  w.key("norms").begin_array();
  for (const auto& [n, nrm] : norms) {
    w.begin_object().key("N").value(n).key("norm").value(nrm).end_object();
  }
  w.end_array();
  w.key("comparison").begin_object();
  w.key("norm_at_largest_N").value(norm_top);
  w.key("sqrt_sup").value(sqrt_sup);
  w.key("sup").value(sar.sup_estimate);
  w.key("ratio_norm_over_sqrt_sup")
      .value(sqrt_sup > 0.0 ? norm_top / sqrt_sup : 0.0);
  w.end_object();
  write_params(w, scenario);
  w.end_object();

  DiagnosticReport rep;
  rep.name = scenario.name;
  rep.mode = "boundedness";
  rep.json = w.str();
  rep.curves.push_back(sarason_curve(sar));
  rep.curves.push_back(trend_curve(sar));
  CurveFile norms_curve{"norms", "N,norm", {}};
  for (const auto& [n, nrm] : norms) norms_curve.rows.push_back({double(n), nrm});
  rep.curves.push_back(norms_curve);
  rep.curves.push_back(schur_curve);
  return rep;
}

DiagnosticReport run_compactness(const Scenario& scenario) {
  QuadratureRule rule = scenario.make_rule();
  SarasonReport sar = sarason_sup(scenario.pair, scenario.schedule, rule);
  bool compact = compact_predicate(sar);

  // c1(r) over the already-computed grid: sqrt(bf*bg) maximized over |w| > r.
  CurveFile c1_curve{"tail_constant", "r,c1", {}};
  std::vector<double> cut_radii = {0.0};
  for (std::size_t i = 0; i + 1 < scenario.schedule.radii.size(); ++i) {
    cut_radii.push_back(scenario.schedule.radii[i]);
  }
  for (double r : cut_radii) {
    double c1 = 0.0;
    for (const auto& row : sar.grid) {
      if (std::abs(row.w) > r) c1 = std::max(c1, std::sqrt(row.product));
    }
    c1_curve.rows.push_back({r, c1});
  }

  CurveFile hs_curve{"hs_tail", "r,hs_norm", {}};
  for (double r : {0.3, 0.5, 0.7, 0.9}) {
    hs_curve.rows.push_back({r, hs_tail_norm(scenario.pair, r, rule)});
  }

  JsonWriter w;
  w.begin_object();
  w.key("schema").value(std::string("1"));
  w.key("name").value(scenario.name);
  w.key("mode").value(std::string("compactness"));
  w.key("compact_predicate").value(compact);
  w.key("trend_threshold").value(kCompactTrendThreshold);
  w.key("boundary_trend").begin_array();
  for (const auto& [r, m] : sar.boundary_trend) {
    w.begin_object().key("radius").value(r).key("max_product").value(m).end_object();
  }
  w.end_array();
  w.key("tail_constant").begin_array();
  for (const auto& row : c1_curve.rows) {
    w.begin_object().key("r").value(row[0]).key("c1").value(row[1]).end_object();
  }
  w.end_array();
  w.key("hs_tail").begin_array();
  for (const auto& row : hs_curve.rows) {
    w.begin_object().key("r").value(row[0]).key("hs_norm").value(row[1]).end_object();
  }
  w.end_array();
  write_params(w, scenario);
  w.end_object();

  DiagnosticReport rep;
  rep.name = scenario.name;
  rep.mode = "compactness";
  rep.json = w.str();
  rep.curves.push_back(trend_curve(sar));
  rep.curves.push_back(c1_curve);
  rep.curves.push_back(hs_curve);
  return rep;
}

DiagnosticReport run_corollary_mode(const Scenario& scenario) {
  const Symbol& g = scenario.pair.g;
  bool g_is_one = g.is_polynomial() && g.degree() == 0 &&
                  g.coefficients()[0] == Complex(1.0);
  if (!g_is_one) {
    throw std::invalid_argument("corollary mode requires g identically 1");
  }
  QuadratureRule rule = scenario.make_rule();
  const Symbol& f = scenario.pair.f;

  CurveFile curve{"corollary", "radius,max_norm_f_circ_phi,max_abs_f", {}};
  double sup_norm = 0.0, sup_abs = 0.0;
  for (double r : scenario.schedule.radii) {
    double radius_norm = 0.0, radius_abs = 0.0;
    for (int k = 0; k < scenario.schedule.angular_samples; ++k) {
      double th = 2.0 * std::numbers::pi * k / scenario.schedule.angular_samples;
      DiskPoint v(r * std::cos(th), r * std::sin(th));
      double nrm = std::sqrt(berezin_mod_squared(f, v, rule));
      double av = std::abs(f.eval(v));
      if (nrm > radius_norm) radius_norm = nrm;
      if (av > radius_abs) radius_abs = av;
    }
    curve.rows.push_back({r, radius_norm, radius_abs});
    if (radius_norm > sup_norm) sup_norm = radius_norm;
    if (radius_abs > sup_abs) sup_abs = radius_abs;
  }

  JsonWriter w;
  w.begin_object();
  w.key("schema").value(std::string("1"));
  w.key("name").value(scenario.name);
  w.key("mode").value(std::string("corollary"));
  w.key("sup_norm_f_circ_phi").value(sup_norm);
  w.key("sup_abs_f").value(sup_abs);
  w.key("per_radius").begin_array();
  for (const auto& row : curve.rows) {
    w.begin_object()
        .key("radius").value(row[0])
        .key("max_norm_f_circ_phi").value(row[1])
        .key("max_abs_f").value(row[2])
        .end_object();
  }
  w.end_array();
  write_params(w, scenario);
  w.end_object();

  DiagnosticReport rep;
  rep.name = scenario.name;
  rep.mode = "corollary";
  rep.json = w.str();
  rep.curves.push_back(curve);
  return rep;
}

}  // namespace bergman
