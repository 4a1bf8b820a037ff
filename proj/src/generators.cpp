#include "itree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "itree/errors.hpp"

namespace itree {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Complete joins between consecutive parts given by their sizes.
Graph chain_of_parts(const std::vector<int>& sizes) {
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    for (int x = start[i]; x < start[i + 1]; ++x) {
      for (int y = start[i + 1]; y < start[i + 2]; ++y) edges.emplace_back(x, y);
    }
  }
  return Graph(start.back(), edges);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Adjacency matrix that edges are only ever removed from.
class EdgeMatrix {
 public:
  explicit EdgeMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}
  bool test(int u, int v) const { return bits_[index(u, v)]; }
  void set(int u, int v, bool on) { bits_[index(u, v)] = bits_[index(v, u)] = on; }
  int size() const { return n_; }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<char> bits_;
};

// Visits r-cliques in lexicographic order against the live matrix and drops
// the last edge of each one found. Edges only disappear, so a clique skipped
// earlier can't reappear and this matches "delete from the smallest clique
// until none remain".
class CliqueBreaker {
 public:
  CliqueBreaker(EdgeMatrix& adj, int r) : adj_(adj), r_(r) {}

  void run() {
    const int n = adj_.size();
    for (int v = 0; v < n; ++v) {
      std::vector<int> cands;
      for (int w = v + 1; w < n; ++w) {
        if (adj_.test(v, w)) cands.push_back(w);
      }
      chosen_ = {v};
      extend(cands, 0);
    }
  }

 private:
  void extend(const std::vector<int>& cands, std::size_t from) {
    for (std::size_t i = from; i < cands.size(); ++i) {
      const int w = cands[i];
      bool joined = true;
      for (int c : chosen_) joined = joined && adj_.test(c, w);
      if (!joined) continue;
      if (static_cast<int>(chosen_.size()) + 1 == r_) {
        adj_.set(chosen_.back(), w, false);
        continue;
      }
      chosen_.push_back(w);
      extend(cands, i + 1);
      chosen_.pop_back();
    }
  }

  EdgeMatrix& adj_;
  int r_;
  std::vector<int> chosen_;
};

// r <= 0 disables clique removal.
Graph sample_connected(int n, double p, std::uint64_t seed, int r) {
  require(n >= 1, "n must be at least 1");
  require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  EdgeMatrix adj(n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit_uniform(rng) < p) adj.set(u, v, true);
    }
  }
  if (r == 2) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) adj.set(u, v, false);
    }
  } else if (r >= 3) {
    CliqueBreaker(adj, r).run();
  }

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj.test(u, v)) edges.emplace_back(u, v);
    }
  }
  // An edge between two components has no common neighbors, so bridging
  // can't create a clique on 3 or more vertices.
  const auto comps = components_of(Graph(n, edges));
  for (std::size_t i = 1; i < comps.size(); ++i) {
    edges.emplace_back(comps[i - 1].front(), comps[i].front());
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

}  // namespace

Graph ms_layered(int m) {
  require(m >= 2, "ms_layered needs m >= 2");
  std::vector<int> sizes;
  for (int i = -m + 1; i <= m - 1; ++i) sizes.push_back(m - std::abs(i));
  return chain_of_parts(sizes);
}

std::pair<Graph, Vertex> ms_through_vertex(int m) {
  require(m >= 2, "ms_through_vertex needs m >= 2");
  std::vector<int> sizes{1};
  for (int i = 1; i <= m - 1; ++i) sizes.push_back(m - i);
  return {chain_of_parts(sizes), 0};
}

Graph line_graph_balanced_tree(int r, int depth) {
  require(r >= 4, "line_graph_balanced_tree needs r >= 4");
  require(depth >= 1, "line_graph_balanced_tree needs depth >= 1");
  // Tree nodes in BFS order; node x > 0 owns the edge to its parent.
  std::vector<std::vector<int>> children(1);
  std::size_t frontier_begin = 0;
  int node_count = 1;
  for (int d = 0; d < depth; ++d) {
    const std::size_t frontier_end = static_cast<std::size_t>(node_count);
    for (std::size_t x = frontier_begin; x < frontier_end; ++x) {
      const int kids = x == 0 ? r - 1 : r - 2;
      for (int c = 0; c < kids; ++c) {
        children[x].push_back(node_count++);
        children.emplace_back();
      }
    }
    frontier_begin = frontier_end;
  }

  // Edges meeting at a node are pairwise adjacent in the line graph.
  std::vector<Edge> edges;
  for (int x = 0; x < node_count; ++x) {
    std::vector<int> incident;
    if (x > 0) incident.push_back(x - 1);
    for (int c : children[x]) incident.push_back(c - 1);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) edges.emplace_back(incident[i], incident[j]);
    }
  }
  return Graph(node_count - 1, edges);
}

WeightedBipartiteInstance dyadic_bipartite(int k) {
  require(k >= 1, "dyadic_bipartite needs k >= 1");
  require(k <= 20, "dyadic_bipartite: k too large");
  const int m = 1 << k;
  WeightedBipartiteInstance inst;
  inst.a_count = m;
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i < m; ++i) {
      BItem item{1.0, {}};
      for (int s = 0; s < (1 << j); ++s) item.nbrs.push_back((i + s) % m);
      inst.b_items.push_back(std::move(item));
    }
  }
  inst.normalize_and_validate();
  return inst;
}

WeightedBipartiteInstance alpha_counterexample(int t) {
  require(t >= 2, "alpha_counterexample needs t >= 2");
  WeightedBipartiteInstance inst;
  inst.a_count = t;
  const double td = t;
  BItem hub{1.0 - 1.0 / td, {}};
  for (int a = 0; a < t; ++a) hub.nbrs.push_back(a);
  inst.b_items.push_back(std::move(hub));
  for (int a = 0; a < t; ++a) inst.b_items.push_back({1.0 / (td * td), {a}});
  return inst;
}

Graph random_kr_free(int n, int r, double p, std::uint64_t seed) {
  require(r >= 2, "random_kr_free needs r >= 2");
  require(r > 2 || n == 1, "no connected K_2-free graph has more than one vertex");
  return sample_connected(n, p, seed, r);
}

Graph random_triangle_free(int n, double p, std::uint64_t seed) {
  return random_kr_free(n, 3, p, seed);
}

Graph random_connected(int n, double p, std::uint64_t seed) { return sample_connected(n, p, seed, 0); }

WeightedBipartiteInstance random_instance(int max_a, int max_b, std::uint64_t seed) {
  require(max_a >= 1 && max_b >= 1, "random_instance needs positive sizes");
  std::mt19937_64 rng(seed);
  auto below = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  WeightedBipartiteInstance inst;
  inst.a_count = 1 + below(max_a);
  const int m = 1 + below(max_b);
  for (int i = 0; i < m; ++i) {
    std::vector<int> pool(inst.a_count);
    for (int a = 0; a < inst.a_count; ++a) pool[a] = a;
    const int degree = 1 + below(inst.a_count);
    for (int s = 0; s < degree; ++s) std::swap(pool[s], pool[s + below(inst.a_count - s)]);
    pool.resize(degree);
    inst.b_items.push_back({unit_uniform(rng), std::move(pool)});
  }
  inst.normalize_and_validate();
  return inst;
}

namespace {

double param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw PreconditionError(spec.name + " needs --" + key);
  }
  return it->second;
}

int int_param(const GeneratorSpec& spec, const std::string& key) {
  const double x = param(spec, key);
  if (x != std::floor(x) || std::abs(x) > 1e9) {
    throw PreconditionError("--" + key + " must be an integer, got " + std::to_string(x));
  }
  return static_cast<int>(x);
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{
      "ms-layered", "ms-through", "line-graph", "dyadic", "alpha-counterexample",
      "random-triangle-free", "random-kr-free", "random-connected"};
  return names;
}

Generated generate(const GeneratorSpec& spec) {
  const std::string& name = spec.name;
  if (name == "ms-layered") return ms_layered(int_param(spec, "m"));
  if (name == "ms-through") return ms_through_vertex(int_param(spec, "m")).first;
  if (name == "line-graph") return line_graph_balanced_tree(int_param(spec, "r"), int_param(spec, "depth"));
  if (name == "dyadic") return dyadic_bipartite(int_param(spec, "k"));
  if (name == "alpha-counterexample") return alpha_counterexample(int_param(spec, "t"));
  if (name == "random-triangle-free") {
    return random_triangle_free(int_param(spec, "n"), param(spec, "p"), spec.seed);
  }
  if (name == "random-kr-free") {
    return random_kr_free(int_param(spec, "n"), int_param(spec, "r"), param(spec, "p"), spec.seed);
  }
  if (name == "random-connected") return random_connected(int_param(spec, "n"), param(spec, "p"), spec.seed);
  throw PreconditionError("unknown generator '" + name + "'");
}

}  // namespace itree
