#include "graphent/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "graphent/error.hpp"
#include "graphent/generators.hpp"
#include "graphent/graph_io.hpp"
#include "graphent/measures.hpp"
#include "graphent/parallel.hpp"

namespace graphent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string describe(const Graph& g) {
  if (g.order() <= 62) return encode_graph6(g);
  std::string out = "n=" + std::to_string(g.order()) + ";";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  return out;
}

bool is_hypothesis_error(ErrorCode code) {
  return code == ErrorCode::EmptyEdgeSet || code == ErrorCode::DisconnectedGraph ||
         code == ErrorCode::HypothesisViolated || code == ErrorCode::ZeroSpectrum;
}

struct Orientation {
  OrientedGraph graph;
  std::string label;
};

std::vector<Orientation> orientations_for(const Graph& g, std::uint64_t seed) {
  const std::uint64_t s = orientation_seed(g, seed);
  std::vector<Orientation> out;
  out.push_back({OrientedGraph::canonical(g), "canonical"});
  out.push_back({random_orientation(g, s), "random:" + std::to_string(s)});
  return out;
}

// ---------------------------------------------------------------------------
// equalities

std::vector<MatrixKind> equality_kinds(const std::vector<double>& betas) {
  std::vector<MatrixKind> kinds = {
      {MatrixTag::SignlessLaplacian}, {MatrixTag::NormalizedLaplacian},
      {MatrixTag::NormalizedSignlessLaplacian}, {MatrixTag::Incidence},
      {MatrixTag::Distance}, {MatrixTag::SkewAdjacency},
      {MatrixTag::RandicAdjacency}, {MatrixTag::RandicIncidence},
  };
  for (double b : betas) kinds.push_back({MatrixTag::GeneralRandic, b});
  kinds.push_back({MatrixTag::SkewRandic});
  return kinds;
}

void compare(std::vector<ClaimResult>& out, std::string id, const std::string& graph,
             double spectral, double closed, const Tolerance& tol) {
  ClaimResult r{std::move(id), graph, ClaimStatus::Pass, std::abs(spectral - closed),
                {{"spectral", spectral}, {"closed_form", closed}}};
  if (!(r.residual <= tol.allowed(spectral, closed))) r.status = ClaimStatus::Fail;
  out.push_back(std::move(r));
}

void evaluate_kind(std::vector<ClaimResult>& out, const MatrixKind& kind, const OrientedGraph& og,
                   const std::string& graph, const EqualityOptions& opt) {
  const std::string prefix = "thm" + std::to_string(theorem_number(kind)) + "/" + to_string(kind) + "/";
  std::vector<std::string> ids{prefix + "I1"};
  for (double a : opt.alphas) {
    ids.push_back(prefix + "I2(a=" + format_real(a) + ")");
    ids.push_back(prefix + "I3(a=" + format_real(a) + ")");
  }
  try {
    const ClosedFormInputs in = closed_form_inputs(kind, og);
    const ProbabilityVector p = probabilities_from_spectrum(in.spectrum, opt.log_base);
    compare(out, ids[0], graph, entropy_I1(p), in.i1, opt.tolerance);
    for (std::size_t k = 0; k < opt.alphas.size(); ++k) {
      const double a = opt.alphas[k];
      const EntropyTriple c = closed_form(in, a, opt.log_base);
      compare(out, ids[1 + 2 * k], graph, entropy_I2(p, a), c.i2, opt.tolerance);
      compare(out, ids[2 + 2 * k], graph, entropy_I3(p, a), c.i3, opt.tolerance);
    }
  } catch (const Error& e) {
    const bool na = is_hypothesis_error(e.code());
    for (const std::string& id : ids) {
      ClaimResult r{id, graph, na ? ClaimStatus::NotApplicable : ClaimStatus::Fail,
                    na ? 0.0 : kNaN, {}};
      if (!na) r.witness.push_back({e.what(), kNaN});
      out.push_back(std::move(r));
    }
  }
}

void equalities_on(std::vector<ClaimResult>& out, const std::vector<Orientation>& orientations,
                   const EqualityOptions& opt) {
  const Graph& g = orientations.front().graph.underlying();
  const std::string base = describe(g);
  for (const MatrixKind& kind : equality_kinds(opt.betas)) {
    if (kind.needs_orientation()) {
      for (const Orientation& o : orientations) {
        evaluate_kind(out, kind, o.graph, base + "@" + o.label, opt);
      }
    } else {
      evaluate_kind(out, kind, orientations.front().graph, base, opt);
    }
  }
}

// ---------------------------------------------------------------------------
// bounds

std::optional<double> spectral_i1(const MatrixKind& kind, const OrientedGraph& og) {
  try {
    return entropy_I1(probabilities_from_spectrum(kind_spectrum(kind, og)));
  } catch (const Error& e) {
    if (is_hypothesis_error(e.code())) return std::nullopt;
    throw;
  }
}

class BoundRecorder {
 public:
  BoundRecorder(std::vector<ClaimResult>& out, const Tolerance& tol) : out_(out), tol_(tol) {}

  void upper(const std::string& id, const std::string& graph, double value, double bound) {
    slack(id, graph, value - bound, value, bound);
  }
  void lower(const std::string& id, const std::string& graph, double value, double bound) {
    slack(id, graph, bound - value, value, bound);
  }
  // attained <=> condition
  void characterize(const std::string& id, const std::string& graph, double value, double bound,
                    bool condition) {
    const double gap = std::abs(value - bound);
    const bool attained = gap <= tol_.equality_band;
    ClaimStatus s = attained == condition
                        ? (attained ? ClaimStatus::EqualityAttained : ClaimStatus::Pass)
                        : ClaimStatus::Fail;
    out_.push_back({id, graph, s, gap,
                    {{"value", value}, {"bound", bound}, {"attained", attained ? 1.0 : 0.0},
                     {"condition", condition ? 1.0 : 0.0}}});
  }
  void not_applicable(std::initializer_list<std::string> ids, const std::string& graph) {
    for (const auto& id : ids) out_.push_back({id, graph, ClaimStatus::NotApplicable, 0.0, {}});
  }
  void error(std::initializer_list<std::string> ids, const std::string& graph, const Error& e) {
    for (const auto& id : ids) {
      out_.push_back({id, graph, ClaimStatus::Fail, kNaN, {{e.what(), kNaN}}});
    }
  }

 private:
  // residual > 0 means the bound is violated by that amount
  void slack(const std::string& id, const std::string& graph, double residual, double value,
             double bound) {
    ClaimStatus s = ClaimStatus::Pass;
    if (!(residual <= tol_.allowed(value, bound))) {
      s = ClaimStatus::Fail;
    } else if (std::abs(residual) <= tol_.equality_band) {
      s = ClaimStatus::EqualityAttained;
    }
    out_.push_back({id, graph, s, residual, {{"value", value}, {"bound", bound}}});
  }

  std::vector<ClaimResult>& out_;
  const Tolerance& tol_;
};

// degrees take exactly two values D > d with (D+d) | d*n and the counts
// p = d*n/(d+D) of degree D, q = D*n/(d+D) of degree d
bool is_balanced_bidegreed(const Graph& g) {
  const std::size_t big = g.max_degree(), small = g.min_degree(), n = g.order();
  if (big == small || small == 0) return false;
  std::size_t count_big = 0, count_small = 0;
  for (std::size_t d : g.degrees()) {
    if (d == big) ++count_big;
    else if (d == small) ++count_small;
    else return false;
  }
  if ((small * n) % (big + small) != 0) return false;
  return count_big == small * n / (big + small) && count_small == big * n / (big + small);
}

void bounds_unoriented(BoundRecorder& rec, const Graph& g, const std::string& graph) {
  const double n = static_cast<double>(g.order());
  const double m = static_cast<double>(g.size());
  const double r = static_cast<double>(g.non_isolated_count());
  const OrientedGraph og = OrientedGraph::canonical(g);
  const auto k = [](MatrixTag t) { return MatrixKind{t}; };

  // signless Laplacian
  if (g.size() >= 1) {
    const double iq = *spectral_i1(k(MatrixTag::SignlessLaplacian), og);
    rec.upper("cor1.i/upper", graph, iq, 1.0 - 1.0 / (2.0 * m) - 1.0 / n);
    if (g.min_degree() >= 1) {
      const double big = static_cast<double>(g.max_degree());
      const double small = static_cast<double>(g.min_degree());
      const double lb = 1.0 - 1.0 / (2.0 * m) - 1.0 / (2.0 * n) -
                        (big * big + small * small) / (4.0 * n * big * small);
      rec.lower("cor1.ii/lower", graph, iq, lb);
      rec.characterize("cor1.ii/eq", graph, iq, lb, is_regular(g) || is_balanced_bidegreed(g));
    } else {
      rec.not_applicable({"cor1.ii/lower", "cor1.ii/eq"}, graph);
    }
  } else {
    rec.not_applicable({"cor1.i/upper", "cor1.ii/lower", "cor1.ii/eq"}, graph);
  }

  // normalized Laplacians: no isolated vertices
  for (MatrixTag tag : {MatrixTag::NormalizedLaplacian, MatrixTag::NormalizedSignlessLaplacian}) {
    const std::string suffix = "/" + to_string(k(tag));
    if (g.non_isolated_count() == g.order()) {
      const double il = *spectral_i1(k(tag), og);
      const bool odd = g.order() % 2 == 1;
      const double lo = 1.0 - 2.0 / n + (odd ? 1.0 / (n * n) : 0.0);
      const double hi = 1.0 - 1.0 / (n - 1.0);
      rec.lower("cor2.i/lower" + suffix, graph, il, lo);
      rec.upper("cor2.i/upper" + suffix, graph, il, hi);
      rec.characterize("cor2.i/lower-eq" + suffix, graph, il, lo,
                       odd ? is_matching_plus_p3(g) : is_perfect_matching(g));
      rec.characterize("cor2.i/upper-eq" + suffix, graph, il, hi, is_complete(g));

      const double big = static_cast<double>(g.max_degree());
      const double small = static_cast<double>(g.min_degree());
      const double lo2 = 1.0 - 1.0 / n - 1.0 / (n * small);
      const double hi2 = 1.0 - 1.0 / n - 1.0 / (n * big);
      rec.lower("cor2.ii/lower" + suffix, graph, il, lo2);
      rec.upper("cor2.ii/upper" + suffix, graph, il, hi2);
      rec.characterize("cor2.ii/lower-eq" + suffix, graph, il, lo2, is_regular(g));
      rec.characterize("cor2.ii/upper-eq" + suffix, graph, il, hi2, is_regular(g));
    } else {
      rec.not_applicable({"cor2.i/lower" + suffix, "cor2.i/upper" + suffix,
                          "cor2.i/lower-eq" + suffix, "cor2.i/upper-eq" + suffix,
                          "cor2.ii/lower" + suffix, "cor2.ii/upper" + suffix,
                          "cor2.ii/lower-eq" + suffix, "cor2.ii/upper-eq" + suffix},
                         graph);
    }
  }

  // incidence
  if (g.size() >= 1) {
    const double ii = *spectral_i1(k(MatrixTag::Incidence), og);
    rec.lower("cor3.i/lower", graph, ii, 0.0);
    rec.upper("cor3.i/upper", graph, ii, 1.0 - 1.0 / n);
    rec.characterize("cor3.i/lower-eq", graph, ii, 0.0, g.size() == 1);
    // stated right equality case m = 0 lies outside the hypothesis
    rec.characterize("cor3.i/upper-eq", graph, ii, 1.0 - 1.0 / n, false);
  } else {
    rec.not_applicable({"cor3.i/lower", "cor3.i/upper", "cor3.i/lower-eq", "cor3.i/upper-eq"},
                       graph);
  }

  // distance
  if (g.order() >= 2 && g.is_connected()) {
    const double id = *spectral_i1(k(MatrixTag::Distance), og);
    rec.lower("cor4/lower", graph, id, 0.0);
    rec.upper("cor4/upper", graph, id, 1.0 - 1.0 / n);
  } else {
    rec.not_applicable({"cor4/lower", "cor4/upper"}, graph);
  }

  // Randić adjacency; the edgeless case has no spectrum
  if (g.size() >= 1) {
    const double ir = *spectral_i1(k(MatrixTag::RandicAdjacency), og);
    rec.upper("cor6/upper", graph, ir, 1.0 - 1.0 / n);
    rec.characterize("cor6/eq", graph, ir, 1.0 - 1.0 / n, is_perfect_matching(g));
  } else {
    rec.not_applicable({"cor6/upper", "cor6/eq"}, graph);
  }

  // Randić incidence
  if (g.size() >= 1) {
    const double iir = *spectral_i1(k(MatrixTag::RandicIncidence), og);
    if (g.non_isolated_count() == g.order()) {
      rec.lower("cor7.i/lower", graph, iir, 1.0 - r / n);
      rec.characterize("cor7.i/eq", graph, iir, 1.0 - r / n, g.order() == 2 && g.size() == 1);
    } else {
      rec.not_applicable({"cor7.i/lower", "cor7.i/eq"}, graph);
    }
    const double x = n * n - 3.0 * n + 4.0 + 2.0 * std::sqrt(2.0 * (n - 1.0) * (n - 2.0));
    rec.upper("cor7.ii/upper", graph, iir, 1.0 - r / x);
    rec.characterize("cor7.ii/eq", graph, iir, 1.0 - r / x, is_complete(g));
  } else {
    rec.not_applicable({"cor7.i/lower", "cor7.i/eq", "cor7.ii/upper", "cor7.ii/eq"}, graph);
  }
}

void bounds_oriented(BoundRecorder& rec, const OrientedGraph& og, const std::string& graph) {
  const Graph& g = og.underlying();
  const double n = static_cast<double>(g.order());
  const double m = static_cast<double>(g.size());
  if (g.size() == 0) {
    rec.not_applicable({"cor5.i/lower", "cor5.i/upper", "cor5.i/chain", "cor9/upper"}, graph);
    return;
  }
  const MatrixKind skew{MatrixTag::SkewAdjacency};
  const double is = *spectral_i1(skew, og);
  const double det = std::abs(determinant(build(skew, og)));
  const double lower = 1.0 - 2.0 * m / (2.0 * m + n * (n - 1.0) * std::pow(det, 2.0 / n));
  rec.lower("cor5.i/lower", graph, is, lower);
  rec.upper("cor5.i/upper", graph, is, 1.0 - 1.0 / n);
  rec.upper("cor5.i/chain", graph, 1.0 - 1.0 / n,
            1.0 - 2.0 * m / (n * n * static_cast<double>(g.max_degree())));

  const double irs = *spectral_i1(MatrixKind{MatrixTag::SkewRandic}, og);
  rec.upper("cor9/upper", graph, irs, 1.0 - 1.0 / n);
}

// ---------------------------------------------------------------------------
// corpus aggregation

struct Partial {
  std::map<std::string, ClaimSummary> summary;
  std::vector<ClaimResult> retained;
};

void absorb(Partial& part, std::vector<ClaimResult>& results, bool keep_all) {
  for (ClaimResult& r : results) {
    ClaimSummary& s = part.summary[r.id];
    switch (r.status) {
      case ClaimStatus::Pass: ++s.pass; break;
      case ClaimStatus::Fail: ++s.fail; break;
      case ClaimStatus::NotApplicable: ++s.not_applicable; break;
      case ClaimStatus::EqualityAttained: ++s.equality; break;
    }
    if (r.status != ClaimStatus::NotApplicable && std::isfinite(r.residual)) {
      s.max_residual = s.total() - s.not_applicable == 1 ? r.residual
                                                         : std::max(s.max_residual, r.residual);
    }
    if (keep_all || r.status == ClaimStatus::Fail || r.status == ClaimStatus::EqualityAttained) {
      part.retained.push_back(std::move(r));
    }
  }
}

// ---------------------------------------------------------------------------
// audit

void add_audit(std::vector<AuditRecord>& out, std::string claim, std::string form, double alpha,
               double lhs, double rhs, double band) {
  AuditRecord r{std::move(claim), std::move(form), alpha, lhs, rhs, lhs - rhs, AuditOutcome::Holds};
  if (std::abs(r.margin) <= band) {
    r.outcome = AuditOutcome::HoldsWithEquality;
  } else if (r.margin < 0.0) {
    r.outcome = AuditOutcome::Violated;
  }
  out.push_back(std::move(r));
}

std::string audit_key(const AuditRecord& r) {
  return r.claim + "|" + r.form + "|" + format_real(r.alpha);
}

void summarize_audit(std::map<std::string, AuditSummary>& summary,
                     const std::vector<AuditRecord>& records, const std::string& source,
                     const std::vector<double>& p) {
  for (const AuditRecord& r : records) {
    AuditSummary& s = summary[audit_key(r)];
    const bool first = s.holds + s.equality + s.violated == 0;
    switch (r.outcome) {
      case AuditOutcome::Holds: ++s.holds; break;
      case AuditOutcome::HoldsWithEquality: ++s.equality; break;
      case AuditOutcome::Violated: ++s.violated; break;
    }
    if (first || r.margin < s.worst_margin) {
      s.worst_margin = r.margin;
      s.worst_source = source;
      s.worst_p = p;
    }
  }
}

void merge_audit(std::map<std::string, AuditSummary>& into,
                 const std::map<std::string, AuditSummary>& from) {
  for (const auto& [key, s] : from) {
    auto [it, inserted] = into.emplace(key, s);
    if (inserted) continue;
    AuditSummary& t = it->second;
    t.holds += s.holds;
    t.equality += s.equality;
    t.violated += s.violated;
    if (s.worst_margin < t.worst_margin) {
      t.worst_margin = s.worst_margin;
      t.worst_source = s.worst_source;
      t.worst_p = s.worst_p;
    }
  }
}

double evaluate_scan_measure(const ScanMeasure& measure, const OrientedGraph& og) {
  const ProbabilityVector p = probabilities_from_spectrum(kind_spectrum(measure.kind, og),
                                                          measure.log_base);
  switch (measure.quantity) {
    case EntropyQuantity::I1: return entropy_I1(p);
    case EntropyQuantity::I2: return entropy_I2(p, measure.alpha);
    case EntropyQuantity::I3: return entropy_I3(p, measure.alpha);
  }
  return kNaN;
}

}  // namespace

double Tolerance::allowed(double a, double b) const {
  return absolute + relative * std::max(std::abs(a), std::abs(b));
}

std::string_view to_string(ClaimStatus status) noexcept {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "not-applicable";
    case ClaimStatus::EqualityAttained: return "equality-attained";
  }
  return "unknown";
}

std::string_view to_string(AuditOutcome outcome) noexcept {
  switch (outcome) {
    case AuditOutcome::Holds: return "holds";
    case AuditOutcome::HoldsWithEquality: return "holds-with-equality";
    case AuditOutcome::Violated: return "violated";
  }
  return "unknown";
}

std::uint64_t orientation_seed(const Graph& g, std::uint64_t seed) {
  return mix_seed(seed, fnv1a(describe(g)));
}

std::vector<ClaimResult> check_equalities(const Graph& g, const EqualityOptions& options) {
  std::vector<ClaimResult> out;
  equalities_on(out, orientations_for(g, options.seed), options);
  return out;
}

std::vector<ClaimResult> check_equalities(const OrientedGraph& g, const EqualityOptions& options) {
  std::vector<ClaimResult> out;
  equalities_on(out, {{g, "given"}}, options);
  return out;
}

std::vector<ClaimResult> check_bounds(const Graph& g, const BoundOptions& options) {
  std::vector<ClaimResult> out;
  BoundRecorder rec(out, options.tolerance);
  const std::string graph = describe(g);
  try {
    bounds_unoriented(rec, g, graph);
  } catch (const Error& e) {
    rec.error({"bounds"}, graph, e);
  }
  for (const Orientation& o : orientations_for(g, options.seed)) {
    try {
      bounds_oriented(rec, o.graph, graph + "@" + o.label);
    } catch (const Error& e) {
      rec.error({"bounds-oriented"}, graph + "@" + o.label, e);
    }
  }
  return out;
}

std::vector<ClaimResult> check_bounds(const OrientedGraph& g, const BoundOptions& options) {
  std::vector<ClaimResult> out;
  BoundRecorder rec(out, options.tolerance);
  const std::string graph = describe(g.underlying());
  try {
    bounds_unoriented(rec, g.underlying(), graph);
    bounds_oriented(rec, g, graph + "@given");
  } catch (const Error& e) {
    rec.error({"bounds"}, graph, e);
  }
  return out;
}

std::uint64_t VerificationReport::failures() const {
  std::uint64_t f = 0;
  for (const auto& [id, s] : summary) f += s.fail;
  return f;
}

std::uint64_t VerificationReport::evaluations() const {
  std::uint64_t t = 0;
  for (const auto& [id, s] : summary) t += s.total();
  return t;
}

VerificationReport verify_corpus(const Corpus& corpus, const VerifyOptions& options) {
  const bool eq = std::find(options.suites.begin(), options.suites.end(), Suite::Equalities) !=
                  options.suites.end();
  const bool bd = std::find(options.suites.begin(), options.suites.end(), Suite::Bounds) !=
                  options.suites.end();

  std::vector<Partial> parts = parallel_chunks<Partial>(
      corpus.size(), options.workers, [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        std::vector<ClaimResult> results;
        for (std::uint64_t i = begin; i < end; ++i) {
          const Graph g = corpus.at(i);
          results.clear();
          if (eq) {
            auto r = check_equalities(g, options.equality);
            results.insert(results.end(), std::make_move_iterator(r.begin()),
                           std::make_move_iterator(r.end()));
          }
          if (bd) {
            auto r = check_bounds(g, options.bounds);
            results.insert(results.end(), std::make_move_iterator(r.begin()),
                           std::make_move_iterator(r.end()));
          }
          absorb(part, results, options.keep_all);
        }
        return part;
      });

  VerificationReport report;
  report.corpus = corpus.descriptor();
  report.tolerance = options.equality.tolerance;
  report.graphs = corpus.size();
  std::size_t kept_fail = 0, kept_other = 0;
  for (Partial& part : parts) {
    for (auto& [id, s] : part.summary) {
      auto [it, inserted] = report.summary.emplace(id, s);
      if (inserted) continue;
      ClaimSummary& t = it->second;
      const bool t_has = t.total() > t.not_applicable;
      const bool s_has = s.total() > s.not_applicable;
      t.pass += s.pass;
      t.fail += s.fail;
      t.not_applicable += s.not_applicable;
      t.equality += s.equality;
      if (s_has) t.max_residual = t_has ? std::max(t.max_residual, s.max_residual) : s.max_residual;
    }
    for (ClaimResult& r : part.retained) {
      std::size_t& kept = r.status == ClaimStatus::Fail ? kept_fail : kept_other;
      if (options.keep_all || kept < options.max_retained) {
        ++kept;
        report.claims.push_back(std::move(r));
      }
    }
  }
  return report;
}

std::vector<AuditRecord> audit_theorem10(const ProbabilityVector& p,
                                         const std::vector<double>& alphas, double band) {
  const double ln2 = std::numbers::ln2;
  std::vector<AuditRecord> out;
  const double i1 = entropy_I1(p);
  for (double a : alphas) {
    validate_alpha(a);
    const double i2 = entropy_I2(p, a);
    const double i3 = entropy_I3(p, a);
    const double shrink = 1.0 - std::pow(2.0, 1.0 - a);
    if (a < 1.0) {
      add_audit(out, "thm10.i", "I2 < I3*ln2", a, i3 * ln2, i2, band);
      add_audit(out, "thm10.ii", "I3 > I1", a, i3, i1, band);
      add_audit(out, "thm10.iii", "I2 > I1", a, i2, i1, band);
    } else {
      const double c = shrink * ln2 / (a - 1.0);
      add_audit(out, "thm10.i", "I2 > (1-2^(1-a))ln2/(a-1)*I3", a, i2, c * i3, band);
      if (a >= 2.0) {
        add_audit(out, "thm10.ii", "I3 > I1", a, i3, i1, band);
        add_audit(out, "thm10.iii", "I2 > (1-2^(1-a))ln2/(a-1)*I1", a, i2, c * i1, band);
      } else {
        add_audit(out, "thm10.ii", "I1 > (1-2^(1-a))*I3", a, i1, shrink * i3, band);
        add_audit(out, "thm10.iii", "I2 > (1-2^(1-a))^2 ln2/(a-1)*I1", a, i2, shrink * c * i1,
                  band);
      }
    }
  }
  return out;
}

AuditReport audit_vector(const ProbabilityVector& p, const std::vector<double>& alphas,
                         double band) {
  AuditReport report;
  report.source = "explicit";
  report.log_base = p.log_base;
  report.alphas = alphas;
  report.vectors = 1;
  report.records = audit_theorem10(p, alphas, band);
  summarize_audit(report.summary, report.records, "explicit", p.p);
  return report;
}

AuditReport audit_corpus(const Corpus& corpus, const std::vector<double>& alphas, double log_base,
                         unsigned workers, double band) {
  for (double a : alphas) validate_alpha(a);
  struct Chunk {
    std::map<std::string, AuditSummary> summary;
    std::uint64_t vectors = 0;
  };
  const std::vector<MatrixKind> kinds = all_matrix_kinds(1.0);
  auto parts = parallel_chunks<Chunk>(
      corpus.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
        Chunk chunk;
        for (std::uint64_t i = begin; i < end; ++i) {
          const Graph g = corpus.at(i);
          const OrientedGraph og = OrientedGraph::canonical(g);
          const std::string name = describe(g);
          for (const MatrixKind& kind : kinds) {
            std::optional<ProbabilityVector> p;
            try {
              p = probabilities_from_spectrum(kind_spectrum(kind, og), log_base);
            } catch (const Error& e) {
              if (is_hypothesis_error(e.code())) continue;
              throw;
            }
            ++chunk.vectors;
            summarize_audit(chunk.summary, audit_theorem10(*p, alphas, band),
                            name + "/" + to_string(kind), p->p);
          }
        }
        return chunk;
      });
  AuditReport report;
  report.source = corpus.descriptor();
  report.log_base = log_base;
  report.alphas = alphas;
  for (const Chunk& c : parts) {
    report.vectors += c.vectors;
    merge_audit(report.summary, c.summary);
  }
  return report;
}

std::optional<ScanFamily> parse_scan_family(std::string_view name) {
  if (name == "trees") return ScanFamily::Trees;
  if (name == "oriented-trees") return ScanFamily::OrientedTrees;
  if (name == "all-graphs" || name == "all") return ScanFamily::AllGraphs;
  return std::nullopt;
}

std::string_view to_string(ScanFamily family) noexcept {
  switch (family) {
    case ScanFamily::Trees: return "trees";
    case ScanFamily::OrientedTrees: return "oriented-trees";
    case ScanFamily::AllGraphs: return "all-graphs";
  }
  return "unknown";
}

std::string to_string(const ScanMeasure& measure) {
  switch (measure.quantity) {
    case EntropyQuantity::I1: return "I1:" + to_string(measure.kind);
    case EntropyQuantity::I2: return "I2(a=" + format_real(measure.alpha) + "):" + to_string(measure.kind);
    case EntropyQuantity::I3: return "I3(a=" + format_real(measure.alpha) + "):" + to_string(measure.kind);
  }
  return "unknown";
}

ScanResult scan_extremal(ScanFamily family, std::size_t order, const ScanMeasure& measure,
                         const ScanOptions& options) {
  std::function<Graph(std::uint64_t)> member;
  std::uint64_t count = 0;
  if (family == ScanFamily::AllGraphs) {
    LabeledGraphs all(order);
    count = all.count();
    member = [all](std::uint64_t i) { return all.at(i); };
  } else {
    LabeledTrees trees(order);
    count = trees.count();
    member = [trees](std::uint64_t i) { return trees.at(i); };
  }
  const bool oriented = family == ScanFamily::OrientedTrees;
  const unsigned orientations = oriented ? std::max(1U, options.orientations) : 1U;

  struct Chunk {
    std::vector<double> values;
    double spread = 0.0;
  };
  auto parts = parallel_chunks<Chunk>(count, options.workers, [&](std::uint64_t b, std::uint64_t e) {
    Chunk c;
    c.values.reserve(e - b);
    for (std::uint64_t i = b; i < e; ++i) {
      const Graph g = member(i);
      double first = kNaN, lo = kNaN, hi = kNaN;
      for (unsigned o = 0; o < orientations; ++o) {
        const OrientedGraph og = oriented ? random_orientation(g, mix_seed(options.seed, i * 64 + o))
                                          : OrientedGraph::canonical(g);
        double v = kNaN;
        try {
          v = evaluate_scan_measure(measure, og);
        } catch (const Error& err) {
          if (!is_hypothesis_error(err.code())) throw;
        }
        if (o == 0) {
          first = lo = hi = v;
        } else {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
      if (std::isfinite(first)) c.spread = std::max(c.spread, hi - lo);
      c.values.push_back(first);
    }
    return c;
  });

  ScanResult result;
  result.family = family;
  result.order = order;
  result.measure = to_string(measure);
  result.members = count;
  std::vector<std::pair<double, std::uint64_t>> ranked;
  ranked.reserve(count);
  std::uint64_t index = 0;
  for (const Chunk& c : parts) {
    result.orientation_spread = std::max(result.orientation_spread, c.spread);
    for (double v : c.values) {
      if (std::isfinite(v)) {
        ranked.emplace_back(v, index);
      } else {
        ++result.skipped;
      }
      ++index;
    }
  }
  if (ranked.empty()) return result;
  std::sort(ranked.begin(), ranked.end());
  result.min_value = ranked.front().first;
  result.max_value = ranked.back().first;

  const auto make_member = [&](std::uint64_t i, double v) {
    const Graph g = member(i);
    return ScanMember{i, describe(g), v, is_star(g), is_path(g)};
  };
  for (const auto& [v, i] : ranked) {
    if (v - result.min_value <= options.tie_tolerance) result.minimizers.push_back(make_member(i, v));
    if (result.max_value - v <= options.tie_tolerance) result.maximizers.push_back(make_member(i, v));
  }
  for (const auto& [v, i] : ranked) {
    if (result.ranking.empty() || v - result.ranking.back().value > options.tie_tolerance) {
      result.ranking.push_back({v, 0, describe(member(i))});
    }
    ++result.ranking.back().count;
  }
  return result;
}

}  // namespace graphent
