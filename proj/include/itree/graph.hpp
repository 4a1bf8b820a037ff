#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace itree {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// adjacency lists are kept sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on self-loops, parallel edges or endpoints >= n.
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; local id i corresponds to vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// True iff g has exactly one component. Throws PreconditionError when n = 0.
bool is_connected(const Graph& g);

/// Connected components of g - excluded, each sorted, ordered by smallest id.
std::vector<VertexSet> components_of(const Graph& g, std::span<const Vertex> excluded = {});

std::optional<VertexSet> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Some clique of size r (lexicographically first found), if one exists.
std::optional<VertexSet> find_clique(const Graph& g, int r);
bool has_clique(const Graph& g, int r);

/// True iff `s` induces a connected acyclic subgraph. Throws on empty s.
bool is_induced_tree(const Graph& g, std::span<const Vertex> s);

/// Number of edges of g with both endpoints in s.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> s);

/// Shortest path from `from` to the nearest member of `targets`, returned
/// as [from, ..., t]. Among equally near targets the smallest id wins; each
/// vertex's BFS parent is its smallest-id neighbor one level closer.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, std::span<const Vertex> targets);

/// Edge-list text: "<n> <m>" then m lines "<u> <v>".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace itree
