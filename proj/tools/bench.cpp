#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "itree/admissible.hpp"
#include "itree/errors.hpp"
#include "itree/generators.hpp"
#include "itree/oracle.hpp"
#include "itree/tree_finder.hpp"

namespace itree::cli {

namespace {

using Clock = std::chrono::steady_clock;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Times `body`, which fills in everything but time_ms.
BenchRow timed(const std::function<BenchRow()>& body) {
  const auto start = Clock::now();
  BenchRow row = body();
  row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return row;
}

BenchRow tree_row(const Graph& g, const TreeCertificate& cert, std::string instance, int r,
                  double required) {
  BenchRow row;
  row.instance = std::move(instance);
  row.algorithm = cert.strategy;
  row.n = g.num_vertices();
  row.r = r;
  row.bound_required = required;
  row.bound_achieved = static_cast<double>(cert.vertices.size());
  row.verified = verify_certificate(g, cert) == CertificateStatus::kValid &&
                 row.bound_achieved >= row.bound_required;
  return row;
}

void ms_layered_suite(std::vector<BenchRow>& rows, std::uint64_t) {
  for (int m = 3; m <= 30; ++m) {
    const Graph g = ms_layered(m);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      rows.push_back(timed([&] {
        return tree_row(g, find_tree_triangle_free(g, v),
                        "ms-layered m=" + std::to_string(m) + " v=" + std::to_string(v), 3, m);
      }));
    }
  }
}

void triangle_free_suite(std::vector<BenchRow>& rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i) {
    const int n = uniform_int(rng, 2, 60);
    const double p = 0.02 + 0.28 * unit(rng);
    const std::uint64_t graph_seed = rng();
    const Graph g = random_triangle_free(n, p, graph_seed);
    const double required = std::ceil(std::sqrt(static_cast<double>(n)) - 1e-12);
    for (Vertex v : {0, n / 2, n - 1}) {
      rows.push_back(timed([&] {
        return tree_row(g, find_tree_triangle_free(g, v),
                        "random-triangle-free#" + std::to_string(i) + " v=" + std::to_string(v), 3,
                        required);
      }));
    }
  }
}

void kr_free_suite(std::vector<BenchRow>& rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int r : {4, 5}) {
    auto required = [r](int n) { return std::log(static_cast<double>(n)) / (4.0 * std::log(r)); };
    for (int i = 0; i < 200; ++i) {
      const int n = uniform_int(rng, 2, 200);
      const double p = 0.02 + 0.28 * unit(rng);
      const std::uint64_t graph_seed = rng();
      const Graph g = random_kr_free(n, r, p, graph_seed);
      const Vertex v = uniform_int(rng, 0, n - 1);
      rows.push_back(timed([&] {
        return tree_row(g, find_tree_kr_free(g, v, r),
                        "random-kr-free#" + std::to_string(i) + " v=" + std::to_string(v), r,
                        required(n));
      }));
    }
    for (int depth = 2; depth <= 4; ++depth) {
      const Graph g = line_graph_balanced_tree(r, depth);
      const int n = g.num_vertices();
      for (Vertex v : {0, n / 2, n - 1}) {
        rows.push_back(timed([&] {
          return tree_row(g, find_tree_kr_free(g, v, r),
                          "line-graph depth=" + std::to_string(depth) + " v=" + std::to_string(v), r,
                          required(n));
        }));
      }
    }
  }
}

void oracle_suite(std::vector<BenchRow>& rows, std::uint64_t) {
  OracleBudget budget;
  budget.max_vertices = 25;
  budget.time_limit_seconds = 120.0;
  for (int m = 2; m <= 5; ++m) {
    rows.push_back(timed([&] {
      const Graph g = ms_layered(m);
      BenchRow row;
      row.instance = "ms-layered m=" + std::to_string(m);
      row.algorithm = "oracle/max-induced-tree";
      row.n = g.num_vertices();
      row.r = 3;
      row.sense = "<=";
      row.bound_required = 2 * m - 1;
      const TreeOptimum opt = max_induced_tree_exact(g, budget);
      row.bound_achieved = opt.size;
      row.verified = is_induced_tree(g, opt.witness) && opt.size <= 2 * m - 1;
      return row;
    }));
  }
  for (int m = 2; m <= 5; ++m) {
    rows.push_back(timed([&] {
      const auto [g, v] = ms_through_vertex(m);
      BenchRow row;
      row.instance = "ms-through m=" + std::to_string(m);
      row.algorithm = "oracle/through-vertex";
      row.n = g.num_vertices();
      row.r = 3;
      row.sense = "<=";
      row.bound_required = m;
      const TreeOptimum opt = max_tree_through_vertex_exact(g, v, budget);
      row.bound_achieved = opt.size;
      row.verified = is_induced_tree(g, opt.witness) && opt.size <= m;
      return row;
    }));
  }
}

BenchRow selection_row(const WeightedBipartiteInstance& inst, const AdmissibleSelection& sel,
                       std::string instance, std::string algorithm, double required) {
  BenchRow row;
  row.instance = std::move(instance);
  row.algorithm = std::move(algorithm);
  row.n = inst.a_count + static_cast<int>(inst.b_items.size());
  row.bound_required = required;
  row.bound_achieved = sel.value;
  row.verified = is_admissible(inst, sel) && sel.value >= required;
  return row;
}

void admissible_suite(std::vector<BenchRow>& rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_instance(10, 20, rng());
    const std::string id = "random-instance#" + std::to_string(i);
    const double required = std::sqrt(inst.total_weight()) - kBoundSlack;
    rows.push_back(timed([&] {
      return selection_row(inst, solve_exact(inst, 0.5), id, "solve_exact", required);
    }));
    rows.push_back(timed([&] {
      return selection_row(inst, select_weighted(inst), id, "select_weighted", required);
    }));
    rows.push_back(timed([&] {
      const auto sel = select_uniform(inst);
      BenchRow row;
      row.instance = id;
      row.algorithm = "select_uniform";
      row.n = inst.a_count + static_cast<int>(inst.b_items.size());
      row.bound_required = std::ceil(std::sqrt(static_cast<double>(inst.b_items.size())) - 1e-12);
      row.bound_achieved = static_cast<double>(sel.b_chosen.size());
      row.verified = is_admissible(inst, sel) && row.bound_achieved >= row.bound_required;
      return row;
    }));
  }
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(12, 20, rng());
    const double alpha = i % 2 == 0 ? 0.5 : 1.0;
    rows.push_back(timed([&] {
      BenchRow row;
      row.instance = "random-instance-a12#" + std::to_string(i);
      row.algorithm = alpha == 0.5 ? "solve_exact-vs-naive alpha=0.5" : "solve_exact-vs-naive alpha=1";
      row.n = inst.a_count + static_cast<int>(inst.b_items.size());
      row.sense = "==";
      row.bound_required = admissible_naive(inst, alpha).value;
      row.bound_achieved = solve_exact(inst, alpha).value;
      row.verified = row.bound_achieved == row.bound_required ||
                     std::abs(row.bound_achieved - row.bound_required) <= 1e-12 * std::abs(row.bound_required);
      return row;
    }));
  }
  for (int k = 1; k <= 3; ++k) {
    rows.push_back(timed([&] {
      const auto inst = dyadic_bipartite(k);
      const auto sel = solve_exact(inst, 1.0);
      BenchRow row;
      row.instance = "dyadic k=" + std::to_string(k);
      row.algorithm = "solve_exact alpha=1";
      row.n = inst.a_count + static_cast<int>(inst.b_items.size());
      row.sense = "<";
      row.bound_required = 2 << k;
      row.bound_achieved = static_cast<double>(sel.b_chosen.size());
      row.verified = is_admissible(inst, sel) && sel.b_chosen.size() < (2u << k);
      return row;
    }));
  }
  rows.push_back(timed([&] {
    const auto inst = alpha_counterexample(50);
    ExactOptions opts;
    opts.exhaustion_limit = 64;
    const auto sel = solve_exact(inst, 0.6, opts);
    BenchRow row;
    row.instance = "alpha-counterexample t=50";
    row.algorithm = "solve_exact alpha=0.6";
    row.n = inst.a_count + static_cast<int>(inst.b_items.size());
    row.sense = "<";
    row.bound_required = inst.total_weight();
    row.bound_achieved = sel.value;
    row.verified = sel.value < 1.0;
    return row;
  }));
}

void randomized_suite(std::vector<BenchRow>& rows, std::uint64_t seed) {
  const auto inst = dyadic_bipartite(6);
  rows.push_back(timed([&] {
    int reached = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto out = select_randomized_dyadic(inst, seed * 1000 + s);
      if (out.reached_threshold && is_admissible(inst, out.selection)) ++reached;
    }
    BenchRow row;
    row.instance = "dyadic k=6, 100 runs";
    row.algorithm = "select_randomized_dyadic";
    row.n = inst.a_count + static_cast<int>(inst.b_items.size());
    row.bound_required = 95;
    row.bound_achieved = reached;
    row.verified = reached >= 95;
    return row;
  }));
}

void reroute_suite(std::vector<BenchRow>& rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const int n = uniform_int(rng, 2, 14);
    const double p = 0.1 + 0.4 * unit(rng);
    const Graph g = random_connected(n, p, rng());
    const TreeOptimum best = max_induced_tree_exact(g);
    const TreeCertificate given{best.witness, best.witness.front(), 0.0, "oracle"};
    for (Vertex v = 0; v < n; ++v) {
      rows.push_back(timed([&] {
        return tree_row(g, reroute_through_vertex(g, given, v),
                        "random-connected#" + std::to_string(i) + " v=" + std::to_string(v), 0,
                        1.0 + best.size / 2.0);
      }));
    }
  }
}

using Suite = void (*)(std::vector<BenchRow>&, std::uint64_t);

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"ms-layered", ms_layered_suite}, {"triangle-free", triangle_free_suite},
      {"kr-free", kr_free_suite},       {"oracle", oracle_suite},
      {"admissible", admissible_suite}, {"randomized", randomized_suite},
      {"reroute", reroute_suite}};
  return table;
}

}  // namespace

double slack(const BenchRow& row) {
  if (row.sense == ">=") return row.bound_achieved - row.bound_required;
  if (row.sense == "==") return 0.0 - std::abs(row.bound_achieved - row.bound_required);
  return row.bound_required - row.bound_achieved;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [key, fn] : suites()) out.push_back(key);
    return out;
  }();
  return names;
}

std::vector<BenchRow> run_suite(const std::string& suite, std::uint64_t seed) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw PreconditionError("unknown bench suite '" + suite + "'");
  std::vector<BenchRow> rows;
  it->second(rows, seed);
  return rows;
}

}  // namespace itree::cli
