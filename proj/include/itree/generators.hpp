#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "itree/admissible.hpp"
#include "itree/graph.hpp"

namespace itree {

/// Layered graph with parts V_{-m+1}, ..., V_{m-1}, |V_i| = m - |i|, and
/// complete bipartite joins between consecutive parts. m^2 vertices; ids
/// are assigned part by part from V_{-m+1}.
Graph ms_layered(int m);

/// Parts V_0 = {v}, V_1, ..., V_{m-1} with |V_i| = m - i, consecutive parts
/// completely joined. 1 + m(m-1)/2 vertices; the distinguished v is id 0.
std::pair<Graph, Vertex> ms_through_vertex(int m);

/// Line graph of the rooted tree whose root has r-1 children, whose other
/// internal nodes have r-2 children, and whose leaves all sit at `depth`.
/// Vertex i is the tree edge above the (i+1)-th non-root node in BFS order.
Graph line_graph_balanced_tree(int r, int depth);

/// A = Z/2^k; B-item (i, j), i < 2^k, j <= k, sits at index j * 2^k + i with
/// unit weight and neighbors {i, ..., i + 2^j - 1} mod 2^k.
WeightedBipartiteInstance dyadic_bipartite(int k);

/// A = {a_1..a_t} (ids 0..t-1), B = {b_0..b_t}; a_i ~ b_0, b_i. b_0 weighs
/// 1 - 1/t, every other item 1/t^2.
WeightedBipartiteInstance alpha_counterexample(int t);

/// G(n, p), then the lexicographically first r-clique loses its
/// lexicographically largest edge until none is left, then consecutive
/// components are bridged through their smallest ids. Throws
/// PreconditionError for r = 2 with n >= 2 (no connected edgeless graph).
Graph random_kr_free(int n, int r, double p, std::uint64_t seed);

/// random_kr_free with r = 3.
Graph random_triangle_free(int n, double p, std::uint64_t seed);

/// G(n, p) with consecutive components bridged; no clique removal.
Graph random_connected(int n, double p, std::uint64_t seed);

/// Random instance for property tests: a_count in [1, max_a], |B| in
/// [1, max_b], each item with 1..a_count distinct random neighbors and a
/// weight uniform in [0, 1).
WeightedBipartiteInstance random_instance(int max_a, int max_b, std::uint64_t seed);

/// Named generator with integer/real parameters, as addressed from the CLI.
struct GeneratorSpec {
  std::string name;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

using Generated = std::variant<Graph, WeightedBipartiteInstance>;

/// ms-layered (m), ms-through (m), line-graph (r, depth), dyadic (k),
/// alpha-counterexample (t), random-triangle-free (n, p), random-kr-free
/// (n, r, p), random-connected (n, p). Unknown names and missing or
/// non-integral parameters raise PreconditionError.
Generated generate(const GeneratorSpec& spec);

const std::vector<std::string>& generator_names();

}  // namespace itree
