#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "bench.hpp"
#include "itree/admissible.hpp"
#include "itree/errors.hpp"
#include "itree/generators.hpp"
#include "itree/oracle.hpp"
#include "itree/tree_finder.hpp"
#include "json.hpp"

namespace itree::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

void init_logging() {
  static const bool done = [] {
    auto logger = spdlog::stderr_color_mt("itree");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    return true;
  }();
  (void)done;
  const char* env = std::getenv("INDUCED_TREE_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Instance files are JSON objects; edge lists start with a digit.
bool looks_like_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  char c = 0;
  while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
  }
  return c == '{';
}

Json certificate_json(const TreeCertificate& cert) { return Json::parse(certificate_to_json(cert)); }

Json selection_json(const AdmissibleSelection& sel) {
  Json j;
  j["a_chosen"] = sel.a_chosen;
  j["b_chosen"] = sel.b_chosen;
  j["value"] = sel.value;
  j["alpha"] = sel.alpha;
  return j;
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Options {
  std::optional<double> m, k, r, t, n, p, depth;
  std::uint64_t seed = 1;
  std::optional<int> root;
  double alpha = 0.5;
  int max_n = 20;
  double time_limit = 60.0;
  std::string out;
  bool no_timing = false;
  std::string target;
  std::string second;
};

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec{o.target, {}, o.seed};
  auto put = [&spec](const char* key, const std::optional<double>& x) {
    if (x) spec.params[key] = *x;
  };
  put("m", o.m), put("k", o.k), put("r", o.r), put("t", o.t), put("n", o.n), put("p", o.p);
  put("depth", o.depth);
  const Generated made = generate(spec);

  std::ostringstream counts;
  {
    Sink sink(o.out, out);
    if (const auto* g = std::get_if<Graph>(&made)) {
      write_edge_list(*sink, *g);
      counts << g->num_vertices() << " vertices, " << g->num_edges() << " edges";
    } else {
      const auto& inst = std::get<WeightedBipartiteInstance>(made);
      write_instance_json(*sink, inst);
      counts << "a_count " << inst.a_count << ", " << inst.b_items.size() << " B-items";
    }
  }
  (o.out.empty() ? err : out) << spec.name << ": " << counts.str() << "\n";
  return kOk;
}

int find_instance(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const auto inst = read_instance_file(o.target);
  const bool constructive = o.alpha == 0.5;
  const auto sel = constructive ? select_weighted(inst) : solve_exact(inst, o.alpha);
  const double required = std::pow(inst.total_weight(), o.alpha);

  Json report;
  report["instance"] = {{"path", o.target}};
  report["algorithm"] = constructive ? "select_weighted" : "solve_exact";
  report["selection"] = selection_json(sel);
  report["bound_required"] = required;
  report["bound_achieved"] = sel.value;
  const bool verified = is_admissible(inst, sel) && sel.value >= required - kBoundSlack;
  report["verified"] = verified;
  report["wall_time_ms"] = o.no_timing ? 0 : elapsed_ms(start);
  Sink sink(o.out, out);
  *sink << report.dump() << "\n";
  return verified ? kOk : kVerificationFailed;
}

int cmd_find(const Options& o, std::ostream& out) {
  if (looks_like_instance(o.target)) return find_instance(o, out);
  const auto start = Clock::now();
  const Graph g = read_edge_list_file(o.target);
  const Vertex root = o.root.value_or(0);
  if (!g.contains(root)) throw PreconditionError("root " + std::to_string(root) + " is not a vertex");

  int r = 3;
  if (o.r) {
    r = static_cast<int>(*o.r);
    if (r != *o.r || r < 3) throw CLI::ValidationError("--r", "must be an integer >= 3");
  } else {
    while (has_clique(g, r)) ++r;
  }
  spdlog::info("{}: {} vertices, {} edges, r = {}", o.target, g.num_vertices(), g.num_edges(), r);

  const TreeCertificate cert = r == 3 ? find_tree_triangle_free(g, root) : find_tree_kr_free(g, root, r);
  const int n = g.num_vertices();
  const double required = r == 3 ? std::sqrt(static_cast<double>(n))
                                 : std::log(static_cast<double>(n)) / (4.0 * std::log(static_cast<double>(r)));
  // Re-verified here, independently of the finder.
  const CertificateStatus status = verify_certificate(g, cert);
  const bool verified = status == CertificateStatus::kValid &&
                        static_cast<double>(cert.vertices.size()) >= required;
  spdlog::debug("strategy {}, size {}, status {}", cert.strategy, cert.vertices.size(), to_string(status));

  Json report;
  report["instance"] = {{"path", o.target}};
  report["algorithm"] = cert.strategy;
  report["r"] = r;
  report["certificate"] = certificate_json(cert);
  report["bound_required"] = required;
  report["bound_achieved"] = cert.vertices.size();
  report["verified"] = verified;
  report["status"] = to_string(status);
  report["wall_time_ms"] = o.no_timing ? 0 : elapsed_ms(start);
  Sink sink(o.out, out);
  *sink << report.dump() << "\n";
  return verified ? kOk : kVerificationFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  OracleBudget budget;
  budget.max_vertices = o.max_n;
  budget.max_a_side = o.max_n;
  budget.time_limit_seconds = o.time_limit;

  Json report;
  report["instance"] = {{"path", o.target}};
  if (looks_like_instance(o.target)) {
    const auto inst = read_instance_file(o.target);
    report["algorithm"] = "oracle/admissible-naive";
    report["selection"] = selection_json(admissible_naive(inst, o.alpha, budget));
  } else {
    const Graph g = read_edge_list_file(o.target);
    const TreeOptimum opt = o.root ? max_tree_through_vertex_exact(g, *o.root, budget)
                                   : max_induced_tree_exact(g, budget);
    report["algorithm"] = o.root ? "oracle/through-vertex" : "oracle/max-induced-tree";
    if (o.root) report["root"] = *o.root;
    report["size"] = opt.size;
    report["witness"] = opt.witness;
  }
  report["wall_time_ms"] = o.no_timing ? 0 : elapsed_ms(start);
  Sink sink(o.out, out);
  *sink << report.dump() << "\n";
  return kOk;
}

// Accepts a bare certificate or a find report wrapping one.
TreeCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid certificate: ") + e.what());
  }
  std::istringstream body(doc.contains("certificate") ? doc["certificate"].dump() : doc.dump());
  return certificate_from_json(body);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.target);
  const TreeCertificate cert = load_certificate(o.second);
  const CertificateStatus status = verify_certificate(g, cert);
  out << to_string(status) << "\n";
  return status == CertificateStatus::kValid ? kOk : kVerificationFailed;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string number(double x) { return Json(x).dump(); }

int cmd_bench(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  std::vector<BenchRow> rows = run_suite(o.target, o.seed);
  const long long total_ms = o.no_timing ? 0 : elapsed_ms(start);

  std::size_t verified = 0;
  double min_slack = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (o.no_timing) rows[i].time_ms = 0;
    verified += rows[i].verified;
    min_slack = i == 0 ? slack(rows[i]) : std::min(min_slack, slack(rows[i]));
  }
  const bool all = verified == rows.size();

  Json summary;
  summary["summary"] = true;
  summary["suite"] = o.target;
  summary["seed"] = o.seed;
  summary["rows"] = rows.size();
  summary["verified_rows"] = verified;
  summary["all_verified"] = all;
  summary["min_slack"] = min_slack;
  summary["wall_time_ms"] = total_ms;

  {
    Sink sink(o.out, out);
    for (const auto& row : rows) {
      Json j;
      j["suite"] = o.target;
      j["instance"] = row.instance;
      j["algorithm"] = row.algorithm;
      j["n"] = row.n;
      j["r"] = row.r;
      j["bound_required"] = row.bound_required;
      j["bound_achieved"] = row.bound_achieved;
      j["sense"] = row.sense;
      j["verified"] = row.verified;
      j["slack"] = slack(row);
      j["time_ms"] = row.time_ms;
      *sink << j.dump() << "\n";
    }
    *sink << summary.dump() << "\n";
  }

  if (!o.out.empty()) {
    std::filesystem::path csv_path(o.out);
    csv_path.replace_extension(".csv");
    if (csv_path == std::filesystem::path(o.out)) csv_path += ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
    csv << "instance,algorithm,n,r,bound_required,bound_achieved,sense,verified,slack,time_ms\n";
    for (const auto& row : rows) {
      csv << csv_field(row.instance) << ',' << csv_field(row.algorithm) << ',' << row.n << ','
          << row.r << ',' << number(row.bound_required) << ',' << number(row.bound_achieved) << ','
          << row.sense << ',' << (row.verified ? "true" : "false") << ',' << number(slack(row))
          << ',' << row.time_ms << '\n';
    }
    csv << "summary," << csv_field(o.target) << ',' << rows.size() << ",,,,," << (all ? "true" : "false")
        << ',' << number(min_slack) << ',' << total_ms << '\n';
    out << summary.dump() << "\n";
  }
  spdlog::info("bench {}: {}/{} rows verified", o.target, verified, rows.size());
  return all ? kOk : kVerificationFailed;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  init_logging();
  CLI::App app{"Induced trees in K_r-free graphs: generators, finders, oracles, certificates."};
  app.name("itree");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated graph (edge list) or instance (JSON)");
  gen->add_option("generator", o.target, join_names(generator_names()))->required();
  gen->add_option("--m", o.m, "construction size");
  gen->add_option("--k", o.k, "dyadic exponent");
  gen->add_option("--r", o.r, "clique size to exclude");
  gen->add_option("--t", o.t, "counterexample size");
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--p", o.p, "edge probability");
  gen->add_option("--depth", o.depth, "tree depth for line-graph");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output path (default stdout)");

  auto* find = app.add_subcommand("find", "Find a large induced tree and print a verified report");
  find->add_option("input", o.target, "edge list, or instance JSON")->required();
  find->add_option("--root", o.root, "vertex the tree must contain (default 0)");
  find->add_option("--r", o.r, "clique size the graph avoids (default: smallest absent)");
  find->add_option("--alpha", o.alpha, "exponent for instance inputs");
  find->add_option("--out", o.out, "report path (default stdout)");
  find->add_flag("--no-timing", o.no_timing, "report wall_time_ms as 0");

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  oracle->add_option("input", o.target, "edge list, or instance JSON")->required();
  oracle->add_option("--root", o.root, "largest tree through this vertex");
  oracle->add_option("--alpha", o.alpha, "exponent for instance inputs");
  oracle->add_option("--max-n", o.max_n, "vertex (or A-side) budget");
  oracle->add_option("--time-limit", o.time_limit, "seconds");
  oracle->add_option("--out", o.out, "report path (default stdout)");
  oracle->add_flag("--no-timing", o.no_timing, "report wall_time_ms as 0");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", o.target, "edge list")->required();
  verify->add_option("certificate", o.second, "certificate or find report")->required();

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("suite", o.target, join_names(suite_names()))->required();
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--out", o.out, "JSON-lines path; a .csv mirror is written beside it");
  bench->add_flag("--no-timing", o.no_timing, "report all times as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*gen) return cmd_gen(o, out, err);
    if (*find) return cmd_find(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_bench(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const WitnessError& e) {
    err << "error: " << e.what() << "\nwitness: " << Json(e.witness()).dump() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kUsageError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n" << e.dump() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace itree::cli
