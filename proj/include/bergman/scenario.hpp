#pragma once

// Batch pipelines: scenario files in, machine-readable diagnostic reports
// out.  All floating-point serialization uses 17 significant digits and
// fixed iteration orders so identical scenarios produce identical bytes.

#include <map>
#include <string>
#include <vector>

#include "bergman/berezin.hpp"
#include "bergman/schur.hpp"
#include "bergman/symbols.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman {

struct Scenario {
  std::string name;
  SymbolPair pair;
  SchurParameters params;
  RadiusSchedule schedule;
  std::vector<int> truncations;  // strictly increasing
  int rule_radial = 64;
  int rule_angular = 256;

  static Scenario from_json(const std::string& text);
  QuadratureRule make_rule() const;
};

struct CurveFile {
  std::string suffix;  // file name is <scenario>.<suffix>.csv
  std::string header;
  std::vector<std::vector<double>> rows;
};

struct DiagnosticReport {
  std::string name;
  std::string mode;            // boundedness | compactness | corollary
  std::string json;            // full report body, serialized
  std::vector<CurveFile> curves;

  /// Writes <name>.report.json and one CSV per curve into out_dir.
  void write(const std::string& out_dir) const;
};

DiagnosticReport run_boundedness(const Scenario& scenario);
DiagnosticReport run_compactness(const Scenario& scenario);
DiagnosticReport run_corollary_mode(const Scenario& scenario);

/// Repeatable 17-significant-digit rendering used by every writer.
std::string format_double(double v);

std::string sarason_report_csv(const SarasonReport& report);

}  // namespace bergman
