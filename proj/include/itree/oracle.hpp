#pragma once

#include "itree/admissible.hpp"
#include "itree/graph.hpp"

namespace itree {

/// Limits for the brute-force oracles. Exceeding any of them is a hard
/// BudgetExceeded error, never a truncated answer.
struct OracleBudget {
  int max_vertices = 20;
  int max_a_side = 20;
  double time_limit_seconds = 60.0;
};

struct TreeOptimum {
  int size = 0;
  VertexSet witness;
};

/// t(G): the largest vertex set inducing a tree, by growing induced trees
/// from their smallest vertex and branching include/exclude on frontier
/// vertices with exactly one neighbor in the tree.
TreeOptimum max_induced_tree_exact(const Graph& g, const OracleBudget& budget = {});

/// Largest induced tree containing v.
TreeOptimum max_tree_through_vertex_exact(const Graph& g, Vertex v, const OracleBudget& budget = {});

/// Optimum of sum w^alpha over closure_b(S), by enumerating every nonempty
/// S ⊆ A. First maximum in mask order wins.
AdmissibleSelection admissible_naive(const WeightedBipartiteInstance& inst, double alpha,
                                     const OracleBudget& budget = {});

}  // namespace itree
