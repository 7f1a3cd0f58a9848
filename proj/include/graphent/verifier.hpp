#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/corpus.hpp"
#include "graphent/entropy.hpp"
#include "graphent/graph.hpp"
#include "graphent/matrix_zoo.hpp"

namespace graphent {

/// |a - b| <= absolute + relative * max(|a|, |b|). Inequalities whose two
/// sides differ by at most equality_band count as attained with equality.
struct Tolerance {
  double absolute = 1e-9;
  double relative = 1e-8;
  double equality_band = 1e-8;

  double allowed(double a, double b) const;
};

enum class ClaimStatus { Pass, Fail, NotApplicable, EqualityAttained };

std::string_view to_string(ClaimStatus status) noexcept;

struct Witness {
  std::string name;
  double value = 0.0;
};

struct ClaimResult {
  std::string id;
  std::string graph;  // graph6, with "@<orientation>" for oriented claims
  ClaimStatus status = ClaimStatus::Pass;
  double residual = 0.0;
  std::vector<Witness> witness;
};

struct EqualityOptions {
  std::vector<double> alphas{0.5, 2.0, 3.0};
  std::vector<double> betas{-1.0, -0.5, 1.0};  // general Randić exponents
  double log_base = kLogBase2;
  std::uint64_t seed = 0;
  Tolerance tolerance;
};

/// Spectrum route versus index closed form for every kind, for I1 and for
/// I2, I3 at each alpha. Claim ids look like "thm1/q/I1" or
/// "thm8/general-randic:-1/I3(a=2)". Unmet theorem hypotheses give
/// not-applicable; numerical failures give fail with the error text.
/// Plain graphs get the canonical and one seeded random orientation for the
/// skew kinds; an oriented input is used as given.
std::vector<ClaimResult> check_equalities(const Graph& g, const EqualityOptions& options = {});
std::vector<ClaimResult> check_equalities(const OrientedGraph& g,
                                          const EqualityOptions& options = {});

struct BoundOptions {
  std::uint64_t seed = 0;
  Tolerance tolerance;
};

/// Corollary bounds plus bidirectional checks of the stated equality
/// characterizations. Characterization claims ("...eq") pass when attained
/// equality and the structural condition agree, and report
/// equality-attained when both hold.
std::vector<ClaimResult> check_bounds(const Graph& g, const BoundOptions& options = {});
std::vector<ClaimResult> check_bounds(const OrientedGraph& g, const BoundOptions& options = {});

/// Orientation seed for a graph: depends only on (seed, graph6 encoding).
std::uint64_t orientation_seed(const Graph& g, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Corpus runs

struct ClaimSummary {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t equality = 0;
  double max_residual = 0.0;  // over applicable evaluations

  std::uint64_t total() const noexcept { return pass + fail + not_applicable + equality; }
};

struct VerificationReport {
  std::string corpus;
  Tolerance tolerance;
  std::uint64_t graphs = 0;
  std::map<std::string, ClaimSummary> summary;  // ordered by claim id
  std::vector<ClaimResult> claims;              // retained records, corpus order

  std::uint64_t failures() const;
  std::uint64_t evaluations() const;
};

enum class Suite { Equalities, Bounds };

struct VerifyOptions {
  std::vector<Suite> suites{Suite::Equalities, Suite::Bounds};
  EqualityOptions equality;
  BoundOptions bounds;
  unsigned workers = 1;
  bool keep_all = false;        // retain every record, not just fail / equality-attained
  std::size_t max_retained = 10000;  // per status, to bound report size
};

/// Evaluates the selected suites on every corpus member. The result is
/// independent of the worker count.
VerificationReport verify_corpus(const Corpus& corpus, const VerifyOptions& options);

// ---------------------------------------------------------------------------
// Inequality audit (I1, I2, I3 orderings)

enum class AuditOutcome { Holds, HoldsWithEquality, Violated };

std::string_view to_string(AuditOutcome outcome) noexcept;

struct AuditRecord {
  std::string claim;  // thm10.i, thm10.ii, thm10.iii
  std::string form;   // the inequality in the regime selected by alpha
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // > 0 when the stated strict inequality holds
  AuditOutcome outcome = AuditOutcome::Holds;
};

/// Evaluates the three parts of the inequality theorem at each alpha.
/// Nothing is asserted; each record is classified. ln 2 in the stated
/// constants is the natural logarithm of 2 whatever log_base I2 uses.
std::vector<AuditRecord> audit_theorem10(const ProbabilityVector& p,
                                         const std::vector<double>& alphas,
                                         double equality_band = 1e-12);

struct AuditSummary {
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  double worst_margin = 0.0;
  std::string worst_source;
  std::vector<double> worst_p;
};

struct AuditReport {
  std::string source;  // corpus descriptor or "explicit"
  double log_base = kLogBase2;
  std::vector<double> alphas;
  std::uint64_t vectors = 0;
  std::vector<AuditRecord> records;  // only for explicit vectors
  std::map<std::string, AuditSummary> summary;  // key "claim|form|alpha"
};

AuditReport audit_vector(const ProbabilityVector& p, const std::vector<double>& alphas,
                         double equality_band = 1e-12);

/// Audits every spectrum-derived probability vector of the corpus
/// (each kind, canonical orientation for skew kinds).
AuditReport audit_corpus(const Corpus& corpus, const std::vector<double>& alphas,
                         double log_base, unsigned workers = 1, double equality_band = 1e-12);

// ---------------------------------------------------------------------------
// Extremal scans

enum class ScanFamily { Trees, OrientedTrees, AllGraphs };

std::optional<ScanFamily> parse_scan_family(std::string_view name);
std::string_view to_string(ScanFamily family) noexcept;

enum class EntropyQuantity { I1, I2, I3 };

struct ScanMeasure {
  MatrixKind kind;
  EntropyQuantity quantity = EntropyQuantity::I1;
  double alpha = 2.0;  // I2 and I3 only
  double log_base = kLogBase2;
};

std::string to_string(const ScanMeasure& measure);

struct ScanMember {
  std::uint64_t index = 0;
  std::string graph6;
  double value = 0.0;
  bool star = false;
  bool path = false;
};

struct RankGroup {
  double value = 0.0;
  std::uint64_t count = 0;
  std::string representative;
};

struct ScanResult {
  ScanFamily family = ScanFamily::Trees;
  std::size_t order = 0;
  std::string measure;
  std::uint64_t members = 0;
  std::uint64_t skipped = 0;  // members where the measure is undefined
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<ScanMember> minimizers;  // every member within tie_tolerance of the min
  std::vector<ScanMember> maximizers;
  std::vector<RankGroup> ranking;      // ascending value, ties merged
  double orientation_spread = 0.0;     // oriented families: max over members of (max-min) across orientations
};

struct ScanOptions {
  double tie_tolerance = 1e-9;
  unsigned orientations = 1;  // per member, oriented families only
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// trees: 2 <= n <= 9, all-graphs: 1 <= n <= 7.
ScanResult scan_extremal(ScanFamily family, std::size_t order, const ScanMeasure& measure,
                         const ScanOptions& options = {});

}  // namespace graphent
