#include "itree/ramsey.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "itree/errors.hpp"

namespace itree {

std::int64_t binomial_threshold(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("Ramsey parameters must be positive");
  const std::int64_t n = static_cast<std::int64_t>(a) + b - 2;
  const std::int64_t k = std::min<std::int64_t>(a - 1, b - 1);
  // C(n, i) = C(n, i-1) * (n - i + 1) / i stays integral at every step.
  std::int64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    __int128 next = static_cast<__int128>(c) * (n - k + i);
    next /= i;
    if (next > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("binomial C(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
    }
    c = static_cast<std::int64_t>(next);
  }
  return c;
}

namespace {

CliqueOrIndependent split(const Graph& g, std::vector<Vertex> cands, int a, int b) {
  const Vertex v = cands.front();
  if (a == 1) return {CliqueOrIndependent::Kind::kClique, {v}};
  if (b == 1) return {CliqueOrIndependent::Kind::kIndependent, {v}};

  std::vector<Vertex> inside, outside;
  const auto& nb = g.neighbors(v);
  for (auto it = cands.begin() + 1; it != cands.end(); ++it) {
    (std::binary_search(nb.begin(), nb.end(), *it) ? inside : outside).push_back(*it);
  }
  cands.clear();

  CliqueOrIndependent found;
  CliqueOrIndependent::Kind extend;
  if (static_cast<std::int64_t>(inside.size()) >= binomial_threshold(a - 1, b)) {
    found = split(g, std::move(inside), a - 1, b);
    extend = CliqueOrIndependent::Kind::kClique;
  } else {
    found = split(g, std::move(outside), a, b - 1);
    extend = CliqueOrIndependent::Kind::kIndependent;
  }
  if (found.kind == extend) {
    found.members.insert(std::lower_bound(found.members.begin(), found.members.end(), v), v);
  }
  return found;
}

}  // namespace

CliqueOrIndependent clique_or_independent(const Graph& g, int a, int b,
                                          std::span<const Vertex> within) {
  std::vector<Vertex> cands;
  if (within.empty()) {
    cands.resize(g.num_vertices());
    std::iota(cands.begin(), cands.end(), 0);
  } else {
    cands.assign(within.begin(), within.end());
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  }
  const std::int64_t need = binomial_threshold(a, b);
  if (static_cast<std::int64_t>(cands.size()) < need) {
    throw PreconditionError("below Ramsey threshold: " + std::to_string(cands.size()) +
                            " vertices, need C(" + std::to_string(a + b - 2) + ", " +
                            std::to_string(a - 1) + ") = " + std::to_string(need));
  }
  return split(g, std::move(cands), a, b);
}

VertexSet independent_set_of_size(const Graph& g, int r, int b, std::span<const Vertex> within) {
  auto found = clique_or_independent(g, r, b, within);
  if (found.kind == CliqueOrIndependent::Kind::kClique) {
    throw WitnessError("caller's K_" + std::to_string(r) + "-free assertion violated",
                       std::move(found.members));
  }
  found.members.resize(b);
  return found.members;
}

}  // namespace itree
