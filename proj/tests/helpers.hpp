#pragma once

#include <numeric>
#include <vector>

#include "itree/graph.hpp"

namespace itree::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

inline VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.num_vertices());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace itree::testing
