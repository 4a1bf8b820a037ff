#include "itree/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

#include "itree/errors.hpp"

namespace itree {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw PreconditionError("parallel edge (" + std::to_string(v) + ", " + std::to_string(*dup) +
                              ")");
    }
  }
  num_edges_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  return std::binary_search(a.begin(), a.end(), &a == &adj_[u] ? v : u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adj_[vertices[i]]) {
      int j = local[w];
      if (j > static_cast<int>(i)) sub.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("empty graph has no connectivity");
  return components_of(g).size() == 1;
}

std::vector<VertexSet> components_of(const Graph& g, std::span<const Vertex> excluded) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  for (Vertex x : excluded) {
    if (!g.contains(x)) throw PreconditionError("excluded vertex out of range");
    seen[x] = 1;
  }
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Extends `chosen` by candidates (all adjacent to every chosen vertex) in
// ascending order until it reaches size r.
bool extend_clique(const Graph& g, std::vector<Vertex>& chosen, const std::vector<Vertex>& candidates,
                   int r) {
  if (static_cast<int>(chosen.size()) == r) return true;
  if (static_cast<int>(chosen.size() + candidates.size()) < r) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (static_cast<int>(chosen.size() + candidates.size() - i) < r) return false;
    Vertex c = candidates[i];
    std::vector<Vertex> next;
    const auto& nb = g.neighbors(c);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                          nb.begin(), nb.end(), std::back_inserter(next));
    chosen.push_back(c);
    if (extend_clique(g, chosen, next, r)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("clique size must be positive");
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 < r) continue;
    std::vector<Vertex> higher;
    for (Vertex w : g.neighbors(v)) {
      if (w > v) higher.push_back(w);
    }
    std::vector<Vertex> chosen{v};
    if (extend_clique(g, chosen, higher, r)) return chosen;
  }
  return std::nullopt;
}

bool has_clique(const Graph& g, int r) { return find_clique(g, r).has_value(); }

std::optional<VertexSet> find_triangle(const Graph& g) { return find_clique(g, 3); }

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex x : s) in[x] = 1;
  std::size_t count = 0;
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && in[y]) ++count;
    }
  }
  return count;
}

bool is_induced_tree(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw PreconditionError("a tree has at least one vertex");
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex x : s) {
    if (!g.contains(x)) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
    if (in[x]) return false;
    in[x] = 1;
  }
  if (induced_edge_count(g, s) != s.size() - 1) return false;
  // |s| - 1 edges: connected iff acyclic.
  std::vector<Vertex> stack{s.front()};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[s.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex y : g.neighbors(x)) {
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached == s.size();
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, std::span<const Vertex> targets) {
  if (!g.contains(from)) throw PreconditionError("source vertex out of range");
  if (targets.empty()) throw PreconditionError("target set is empty");
  const int n = g.num_vertices();
  std::vector<char> is_target(n, 0);
  for (Vertex t : targets) {
    if (!g.contains(t)) throw PreconditionError("target vertex out of range");
    is_target[t] = 1;
  }
  if (is_target[from]) return {from};

  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnseen);
  dist[from] = 0;
  std::vector<Vertex> level{from};
  Vertex hit = -1;
  while (!level.empty() && hit < 0) {
    std::vector<Vertex> next;
    for (Vertex x : level) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] != kUnseen) continue;
        dist[y] = dist[x] + 1;
        next.push_back(y);
        if (is_target[y] && (hit < 0 || y < hit)) hit = y;
      }
    }
    level = std::move(next);
  }
  if (hit < 0) throw InternalError("target set unreachable from vertex " + std::to_string(from));

  std::vector<Vertex> path{hit};
  for (Vertex x = hit; x != from;) {
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == dist[x] - 1) {
        x = y;
        break;
      }
    }
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("missing header line \"<n> <m>\"", 1);
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string rest;
    if (!(hs >> n >> m) || (hs >> rest) || n < 0 || m < 0) {
      throw ParseError("header must be two nonnegative integers \"<n> <m>\"", lineno);
    }
  }
  if (n > std::numeric_limits<int>::max()) throw ParseError("vertex count too large", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::pair<Edge, int>> seen;  // normalized edge, line
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                       lineno + 1);
    }
    std::istringstream es(line);
    long long u, v;
    std::string rest;
    if (!(es >> u >> v) || (es >> rest)) throw ParseError("edge line must be \"<u> <v>\"", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("endpoint out of range 0.." + std::to_string(n - 1), lineno);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    seen.emplace_back(e, lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line, lineno)) {
    throw ParseError("unexpected content after " + std::to_string(m) + " edges", lineno);
  }
  std::stable_sort(seen.begin(), seen.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError("duplicate edge (" + std::to_string(seen[i].first.first) + ", " +
                           std::to_string(seen[i].first.second) + "), first seen on line " +
                           std::to_string(seen[i - 1].second),
                       seen[i].second);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace itree
