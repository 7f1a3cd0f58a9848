#include "graphent/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "graphent/error.hpp"
#include "graphent/graph_io.hpp"
#include "graphent/report.hpp"
#include "graphent/verifier.hpp"

namespace graphent::cli {
namespace {

struct Common {
  std::string input;
  std::string corpus;
  std::vector<std::string> matrices;
  std::vector<double> alphas;
  std::string log_base = "2";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;
  unsigned workers = 1;
  std::vector<std::string> measures;
  std::vector<double> probs;
  std::vector<double> betas{-1.0, -0.5, 1.0};
  std::string suite = "all";
  bool full = false;
  std::string family = "trees";
  std::size_t order = 0;
  unsigned orientations = 1;
};

struct LoadedGraph {
  OrientedGraph graph;
  std::string label;
};

double parse_log_base(const std::string& s) {
  if (s == "e") return kLogBaseE;
  double b = 0.0;
  try {
    std::size_t used = 0;
    b = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "log base must be 2, e or a positive real");
  }
  if (!(b > 0.0) || b == 1.0) throw Error(ErrorCode::InvalidArgument, "log base must be positive and not 1");
  return b;
}

MatrixKind kind_or_throw(const std::string& s) {
  auto k = parse_matrix_kind(s);
  if (!k) throw Error(ErrorCode::InvalidArgument, "unknown matrix kind '" + s + "'");
  return *k;
}

std::string read_all(std::istream& s) {
  return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()};
}

LoadedGraph load_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    text = read_all(f);
  }
  if (path.ends_with(".g6")) {
    const Graph g = parse_graph6(text);
    return {OrientedGraph::canonical(g), encode_graph6(g)};
  }
  if (path.ends_with(".arcs")) {
    OrientedGraph og = parse_arc_list(text);
    const Graph& g = og.underlying();
    return {og, (g.order() <= 62 ? encode_graph6(g) : std::string("graph")) + "@given"};
  }
  const Graph g = parse_edge_list(text);
  return {OrientedGraph::canonical(g), g.order() <= 62 ? encode_graph6(g) : std::string("graph")};
}

template <typename Report>
void emit(const Common& c, const Report& report, std::ostream& out) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + c.out_path + "'");
    target = &file;
  }
  if (c.format == "csv") {
    write_csv(*target, report);
  } else {
    write_json(*target, report);
  }
}

void validate_alphas(const std::vector<double>& alphas) {
  for (double a : alphas) validate_alpha(a);
}

int do_compute(const Common& c, std::istream& in, std::ostream& out) {
  if (c.input.empty()) throw Error(ErrorCode::InvalidArgument, "compute needs --input");
  const LoadedGraph g = load_graph(c.input, in);
  ComputeRequest req;
  req.alphas = c.alphas.empty() ? std::vector<double>{0.5, 2.0, 3.0} : c.alphas;
  req.log_base = parse_log_base(c.log_base);
  // explicit requests must succeed; defaults skip what the graph does not support
  req.strict = !c.matrices.empty() || !c.measures.empty();
  if (c.matrices.empty()) {
    req.kinds = all_matrix_kinds();
  } else {
    for (const auto& m : c.matrices) req.kinds.push_back(kind_or_throw(m));
  }
  req.measures = c.measures;
  if (c.measures.empty() && c.matrices.empty()) {
    req.measures = {"m1", "randic-index:-0.5", "wiener", "hyper-wiener"};
  }
  emit(c, compute_measures(g.graph, g.label, req), out);
  return kExitOk;
}

int do_verify(const Common& c, std::istream& in, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  if (c.suite == "equalities") {
    opt.suites = {Suite::Equalities};
  } else if (c.suite == "bounds") {
    opt.suites = {Suite::Bounds};
  }
  if (!c.alphas.empty()) opt.equality.alphas = c.alphas;
  validate_alphas(opt.equality.alphas);
  opt.equality.betas = c.betas;
  opt.equality.log_base = parse_log_base(c.log_base);
  opt.equality.seed = opt.bounds.seed = c.seed;
  opt.workers = c.workers;
  opt.keep_all = c.full;

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (!c.input.empty()) {
    if (!c.corpus.empty()) throw Error(ErrorCode::InvalidArgument, "use --input or --corpus, not both");
    const LoadedGraph g = load_graph(c.input, in);
    report = verify_corpus(Corpus::explicit_graphs({g.graph.underlying()}, g.label), opt);
  } else {
    report = verify_corpus(Corpus::parse(c.corpus.empty() ? "all:5" : c.corpus, c.seed), opt);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  emit(c, report, out);
  err << "verified " << report.graphs << " graphs, " << report.evaluations() << " evaluations, "
      << report.failures() << " failures in " << elapsed.count() << " s\n";
  return report.failures() == 0 ? kExitOk : kExitClaimFailure;
}

int do_audit(const Common& c, std::ostream& out) {
  const std::vector<double> alphas =
      c.alphas.empty() ? std::vector<double>{0.5, 1.5, 2.0, 3.0} : c.alphas;
  validate_alphas(alphas);
  const double base = parse_log_base(c.log_base);
  if (!c.probs.empty()) {
    if (!c.corpus.empty()) throw Error(ErrorCode::InvalidArgument, "use --probs or --corpus, not both");
    emit(c, audit_vector(normalize_weights(c.probs, "explicit", base), alphas), out);
  } else {
    emit(c, audit_corpus(Corpus::parse(c.corpus.empty() ? "all:5" : c.corpus, c.seed), alphas, base,
                         c.workers),
         out);
  }
  return kExitOk;
}

int do_scan(const Common& c, std::ostream& out) {
  const auto family = parse_scan_family(c.family);
  if (!family) throw Error(ErrorCode::InvalidArgument, "unknown scan family '" + c.family + "'");
  if (c.matrices.size() > 1) throw Error(ErrorCode::InvalidArgument, "scan takes one --matrix");
  ScanMeasure m{kind_or_throw(c.matrices.empty() ? "incidence" : c.matrices.front())};
  const std::string q = c.measures.empty() ? "I1" : c.measures.front();
  if (q == "I1") {
    m.quantity = EntropyQuantity::I1;
  } else if (q == "I2") {
    m.quantity = EntropyQuantity::I2;
  } else if (q == "I3") {
    m.quantity = EntropyQuantity::I3;
  } else {
    throw Error(ErrorCode::InvalidArgument, "scan --measure must be I1, I2 or I3");
  }
  if (c.alphas.size() > 1) throw Error(ErrorCode::InvalidArgument, "scan takes one --alpha");
  if (!c.alphas.empty()) m.alpha = c.alphas.front();
  if (m.quantity != EntropyQuantity::I1) validate_alpha(m.alpha);
  m.log_base = parse_log_base(c.log_base);
  ScanOptions opt;
  opt.orientations = c.orientations;
  opt.seed = c.seed;
  opt.workers = c.workers;
  emit(c, scan_extremal(*family, c.order, m, opt), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spectral graph entropies and verification of their identities", "graphent"};
  app.require_subcommand(1, 1);
  Common c;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_path, "write the report here instead of stdout");
  };
  const auto add_entropy = [&](CLI::App* sub) {
    sub->add_option("--alpha", c.alphas, "entropy orders, comma separated")->delimiter(',');
    sub->add_option("--log-base", c.log_base, "2, e or a positive real");
  };
  const auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "worker threads")
        ->envname("GRAPHENT_WORKERS")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for random orientations and corpora");
  };

  CLI::App* compute = app.add_subcommand("compute", "indices, energies and entropies of one graph");
  compute->add_option("--input", c.input, "graph file (.g6, .arcs or edge list); - for stdin");
  compute->add_option("--matrix", c.matrices, "matrix kinds")->delimiter(',');
  compute->add_option("--measure", c.measures, "index names, e.g. m1,wiener,energy:q")->delimiter(',');
  add_entropy(compute);
  add_output(compute);

  CLI::App* verify = app.add_subcommand("verify", "check the equalities and bounds over a corpus");
  verify->add_option("--corpus", c.corpus, "all:<n> | trees:<n> | gnp:<n>,<p>,<count>");
  verify->add_option("--input", c.input, "verify a single graph instead of a corpus");
  verify->add_option("--suite", c.suite, "all, equalities or bounds")
      ->check(CLI::IsMember({"all", "equalities", "bounds"}));
  verify->add_option("--beta", c.betas, "general Randic exponents")->delimiter(',');
  verify->add_flag("--full", c.full, "keep every claim record, not only failures and equalities");
  add_entropy(verify);
  add_workers(verify);
  add_output(verify);

  CLI::App* audit = app.add_subcommand("audit", "audit the inter-entropy inequalities");
  audit->add_option("--probs", c.probs, "explicit probability vector")->delimiter(',');
  audit->add_option("--corpus", c.corpus, "corpus of spectrum-derived vectors");
  add_entropy(audit);
  add_workers(audit);
  add_output(audit);

  CLI::App* scan = app.add_subcommand("scan", "extremal members of an enumerated family");
  scan->add_option("--family", c.family, "trees, oriented-trees or all-graphs");
  scan->add_option("--order", c.order, "vertex count")->required();
  scan->add_option("--matrix", c.matrices, "matrix kind");
  scan->add_option("--measure", c.measures, "I1, I2 or I3");
  scan->add_option("--orientations", c.orientations, "orientations per member (oriented-trees)")
      ->check(CLI::PositiveNumber);
  add_entropy(scan);
  add_workers(scan);
  add_output(scan);

  std::vector<std::string> argv_store{"graphent"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return do_compute(c, in, out);
    if (verify->parsed()) return do_verify(c, in, out, err);
    if (audit->parsed()) return do_audit(c, out);
    return do_scan(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace graphent::cli
