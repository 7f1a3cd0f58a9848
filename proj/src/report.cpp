#include "graphent/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

#include "graphent/error.hpp"

namespace graphent {
namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round15(x);
}

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

std::string fmt(double x) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void row(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << csv_field(f);
    first = false;
  }
  out << "\r\n";
}

Json tolerance_json(const Tolerance& t) {
  return {{"absolute", number(t.absolute)},
          {"relative", number(t.relative)},
          {"equality_band", number(t.equality_band)}};
}

std::string witness_text(const std::vector<Witness>& w) {
  std::string s;
  for (const auto& x : w) {
    if (!s.empty()) s += ';';
    s += x.name;
    if (std::isfinite(x.value)) s += "=" + fmt(x.value);
  }
  return s;
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

MeasureReport compute_measures(const OrientedGraph& g, std::string graph_label,
                               const ComputeRequest& request) {
  for (double a : request.alphas) validate_alpha(a);
  MeasureReport r;
  r.graph = std::move(graph_label);
  r.order = g.underlying().order();
  r.size = g.underlying().size();
  r.log_base = request.log_base;
  for (const auto& name : request.measures) {
    try {
      r.indices.push_back(evaluate_measure(name, g));
    } catch (const Error&) {
      if (request.strict) throw;
    }
  }
  for (const MatrixKind& kind : request.kinds) {
    KindReport k;
    k.kind = to_string(kind);
    try {
      const Spectrum s = kind_spectrum(kind, g);
      const ProbabilityVector p = probabilities_from_spectrum(s, request.log_base);
      k.spectrum = s.values;
      k.spectral_sum = s.sum_abs();
      k.i1 = entropy_I1(p);
      for (double a : request.alphas) k.entropies.push_back({a, entropy_I2(p, a), entropy_I3(p, a)});
    } catch (const Error& e) {
      if (request.strict) throw;
      k = KindReport{};
      k.kind = to_string(kind);
      k.error = e.what();
    }
    r.kinds.push_back(std::move(k));
  }
  return r;
}

void write_json(std::ostream& out, const MeasureReport& r) {
  Json indices = Json::object();
  for (const auto& iv : r.indices) indices[iv.name] = number(iv.value);
  Json kinds = Json::array();
  for (const auto& k : r.kinds) {
    Json j = {{"kind", k.kind}};
    if (!k.error.empty()) {
      j["error"] = k.error;
    } else {
      j["spectrum"] = numbers(k.spectrum);
      j["spectral_sum"] = number(k.spectral_sum);
      j["I1"] = number(k.i1);
      Json by_alpha = Json::array();
      for (const auto& e : k.entropies) {
        by_alpha.push_back({{"alpha", number(e.alpha)}, {"I2", number(e.i2)}, {"I3", number(e.i3)}});
      }
      j["entropies"] = std::move(by_alpha);
    }
    kinds.push_back(std::move(j));
  }
  dump(out, {{"graph", r.graph},
             {"order", r.order},
             {"size", r.size},
             {"log_base", number(r.log_base)},
             {"indices", std::move(indices)},
             {"kinds", std::move(kinds)}});
}

void write_csv(std::ostream& out, const MeasureReport& r) {
  row(out, {"graph", "kind", "quantity", "alpha", "value"});
  for (const auto& iv : r.indices) row(out, {r.graph, "", iv.name, "", fmt(iv.value)});
  for (const auto& k : r.kinds) {
    if (!k.error.empty()) {
      row(out, {r.graph, k.kind, "error", "", k.error});
      continue;
    }
    row(out, {r.graph, k.kind, "spectral_sum", "", fmt(k.spectral_sum)});
    row(out, {r.graph, k.kind, "I1", "", fmt(k.i1)});
    for (const auto& e : k.entropies) {
      row(out, {r.graph, k.kind, "I2", fmt(e.alpha), fmt(e.i2)});
      row(out, {r.graph, k.kind, "I3", fmt(e.alpha), fmt(e.i3)});
    }
  }
}

void write_json(std::ostream& out, const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json w = Json::object();
    for (const auto& x : c.witness) w[x.name] = number(x.value);
    claims.push_back({{"id", c.id},
                      {"graph", c.graph},
                      {"status", to_string(c.status)},
                      {"residual", number(c.residual)},
                      {"witness", std::move(w)}});
  }
  Json per_claim = Json::object();
  for (const auto& [id, s] : r.summary) {
    per_claim[id] = {{"pass", s.pass},
                     {"fail", s.fail},
                     {"not_applicable", s.not_applicable},
                     {"equality_attained", s.equality},
                     {"max_residual", number(s.max_residual)}};
  }
  dump(out, {{"corpus", r.corpus},
             {"tolerance", tolerance_json(r.tolerance)},
             {"claims", std::move(claims)},
             {"summary",
              {{"graphs", r.graphs},
               {"evaluations", r.evaluations()},
               {"failures", r.failures()},
               {"claims", std::move(per_claim)}}}});
}

void write_csv(std::ostream& out, const VerificationReport& r) {
  row(out, {"record", "id", "graph", "status", "residual", "pass", "fail", "not_applicable",
            "equality_attained", "witness"});
  row(out, {"corpus", r.corpus, "", "", "", "", "", "", "", ""});
  for (const auto& c : r.claims) {
    row(out, {"claim", c.id, c.graph, std::string(to_string(c.status)), fmt(c.residual), "", "", "",
              "", witness_text(c.witness)});
  }
  for (const auto& [id, s] : r.summary) {
    row(out, {"summary", id, "", "", fmt(s.max_residual), std::to_string(s.pass),
              std::to_string(s.fail), std::to_string(s.not_applicable), std::to_string(s.equality),
              ""});
  }
}

void write_json(std::ostream& out, const AuditReport& r) {
  Json records = Json::array();
  for (const auto& a : r.records) {
    records.push_back({{"claim", a.claim},
                       {"form", a.form},
                       {"alpha", number(a.alpha)},
                       {"lhs", number(a.lhs)},
                       {"rhs", number(a.rhs)},
                       {"margin", number(a.margin)},
                       {"outcome", to_string(a.outcome)}});
  }
  Json summary = Json::array();
  for (const auto& [key, s] : r.summary) {
    summary.push_back({{"key", key},
                       {"holds", s.holds},
                       {"holds_with_equality", s.equality},
                       {"violated", s.violated},
                       {"worst_margin", number(s.worst_margin)},
                       {"worst_source", s.worst_source},
                       {"worst_p", numbers(s.worst_p)}});
  }
  dump(out, {{"source", r.source},
             {"log_base", number(r.log_base)},
             {"alphas", numbers(r.alphas)},
             {"vectors", r.vectors},
             {"records", std::move(records)},
             {"summary", std::move(summary)}});
}

void write_csv(std::ostream& out, const AuditReport& r) {
  row(out, {"record", "key", "alpha", "lhs", "rhs", "margin", "outcome", "holds",
            "holds_with_equality", "violated", "worst_source"});
  for (const auto& a : r.records) {
    row(out, {"record", a.claim + "|" + a.form, fmt(a.alpha), fmt(a.lhs), fmt(a.rhs), fmt(a.margin),
              std::string(to_string(a.outcome)), "", "", "", ""});
  }
  for (const auto& [key, s] : r.summary) {
    row(out, {"summary", key, "", "", "", fmt(s.worst_margin), "", std::to_string(s.holds),
              std::to_string(s.equality), std::to_string(s.violated), s.worst_source});
  }
}

void write_json(std::ostream& out, const ScanResult& r) {
  const auto members = [](const std::vector<ScanMember>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) {
      a.push_back({{"index", m.index},
                   {"graph", m.graph6},
                   {"value", number(m.value)},
                   {"star", m.star},
                   {"path", m.path}});
    }
    return a;
  };
  Json ranking = Json::array();
  for (const auto& g : r.ranking) {
    ranking.push_back({{"value", number(g.value)}, {"count", g.count}, {"representative", g.representative}});
  }
  dump(out, {{"family", to_string(r.family)},
             {"order", r.order},
             {"measure", r.measure},
             {"members", r.members},
             {"skipped", r.skipped},
             {"min", number(r.min_value)},
             {"max", number(r.max_value)},
             {"orientation_spread", number(r.orientation_spread)},
             {"minimizers", members(r.minimizers)},
             {"maximizers", members(r.maximizers)},
             {"ranking", std::move(ranking)}});
}

void write_csv(std::ostream& out, const ScanResult& r) {
  row(out, {"record", "graph", "value", "count", "star", "path"});
  for (const auto& m : r.minimizers) {
    row(out, {"min", m.graph6, fmt(m.value), "", m.star ? "1" : "0", m.path ? "1" : "0"});
  }
  for (const auto& m : r.maximizers) {
    row(out, {"max", m.graph6, fmt(m.value), "", m.star ? "1" : "0", m.path ? "1" : "0"});
  }
  for (const auto& g : r.ranking) {
    row(out, {"rank", g.representative, fmt(g.value), std::to_string(g.count), "", ""});
  }
}

}  // namespace graphent
