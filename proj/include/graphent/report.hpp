#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/entropy.hpp"
#include "graphent/measures.hpp"
#include "graphent/verifier.hpp"

namespace graphent {

/// Entropies of one kind's spectral distribution at one alpha.
struct AlphaEntropies {
  double alpha = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
};

struct KindReport {
  std::string kind;
  std::string error;  // set when the kind is undefined on this graph
  std::vector<double> spectrum;
  double spectral_sum = 0.0;  // sum of |values|: trace sum or energy
  double i1 = 0.0;
  std::vector<AlphaEntropies> entropies;
};

struct MeasureReport {
  std::string graph;  // graph6 plus orientation tag
  std::size_t order = 0;
  std::size_t size = 0;
  double log_base = kLogBase2;
  std::vector<IndexValue> indices;
  std::vector<KindReport> kinds;
};

struct ComputeRequest {
  std::vector<MatrixKind> kinds;
  std::vector<double> alphas;
  double log_base = kLogBase2;
  std::vector<std::string> measures;
  bool strict = true;  // rethrow undefined kinds / measures instead of recording them
};

/// Spectrum-route measures for one graph.
MeasureReport compute_measures(const OrientedGraph& g, std::string graph_label,
                               const ComputeRequest& request);

/// Rounds to 15 significant digits so reports are stable across platforms
/// that differ in the last bits.
double round15(double x);

void write_json(std::ostream& out, const MeasureReport& report);
void write_json(std::ostream& out, const VerificationReport& report);
void write_json(std::ostream& out, const AuditReport& report);
void write_json(std::ostream& out, const ScanResult& report);

void write_csv(std::ostream& out, const MeasureReport& report);
void write_csv(std::ostream& out, const VerificationReport& report);
void write_csv(std::ostream& out, const AuditReport& report);
void write_csv(std::ostream& out, const ScanResult& report);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

}  // namespace graphent
