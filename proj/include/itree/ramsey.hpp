#pragma once

#include <cstdint>
#include <span>

#include "itree/graph.hpp"

namespace itree {

struct CliqueOrIndependent {
  enum class Kind { kClique, kIndependent };
  Kind kind;
  VertexSet members;
};

/// C(a+b-2, a-1): the vertex count that forces a clique of size a or an
/// independent set of size b. Throws std::overflow_error past int64.
std::int64_t binomial_threshold(int a, int b);

/// Clique of size >= a or independent set of size >= b inside `within`
/// (all of g when empty), found by the classical neighborhood split: take
/// the smallest vertex v, recurse into N(v) with (a-1, b) when it holds at
/// least C(a+b-3, a-2) vertices, else into the non-neighborhood with
/// (a, b-1). Throws PreconditionError below the threshold.
CliqueOrIndependent clique_or_independent(const Graph& g, int a, int b,
                                          std::span<const Vertex> within = {});

/// Independent set of exactly b vertices inside `within`, for callers that
/// know the induced subgraph has no r-clique. If the search turns up an
/// r-clique anyway, throws WitnessError carrying it.
VertexSet independent_set_of_size(const Graph& g, int r, int b, std::span<const Vertex> within = {});

}  // namespace itree
