#include "itree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <string>

#include "itree/errors.hpp"

namespace itree {

namespace {

using Clock = std::chrono::steady_clock;

class TreeSearch {
 public:
  TreeSearch(const Graph& g, const OracleBudget& budget)
      : g_(g),
        in_(g.num_vertices(), 0),
        count_(g.num_vertices(), 0),
        forbidden_(g.num_vertices(), 0),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.time_limit_seconds))) {}

  // Every induced tree that contains `seed` and otherwise uses only
  // vertices >= `lowest`.
  void grow_from(Vertex seed, Vertex lowest) {
    lowest_ = lowest;
    add(seed);
    grow();
    remove(seed);
  }

  int best_size() const { return static_cast<int>(best_.size()); }
  const VertexSet& best() const { return best_; }
  void set_cap(int cap) { cap_ = cap; }

 private:
  void add(Vertex x) {
    in_[x] = 1;
    tree_.push_back(x);
    for (Vertex y : g_.neighbors(x)) ++count_[y];
  }
  void remove(Vertex x) {
    in_[x] = 0;
    tree_.pop_back();
    for (Vertex y : g_.neighbors(x)) --count_[y];
  }
  bool usable(Vertex x) const { return x >= lowest_ && !in_[x] && !forbidden_[x]; }

  void grow() {
    if (++nodes_ % 4096 == 0 && Clock::now() > deadline_) {
      throw BudgetExceeded("oracle time limit exceeded after " + std::to_string(nodes_) + " nodes");
    }
    if (tree_.size() > best_.size()) {
      best_ = tree_;
      std::sort(best_.begin(), best_.end());
    }
    if (best_size() >= cap_) return;

    Vertex pick = -1;
    int room = 0;
    const int n = g_.num_vertices();
    for (Vertex x = lowest_; x < n; ++x) {
      if (!usable(x) || count_[x] > 1) continue;
      ++room;
      if (pick < 0 && count_[x] == 1) pick = x;
    }
    if (pick < 0 || static_cast<int>(tree_.size()) + room <= best_size()) return;

    add(pick);
    grow();
    remove(pick);
    if (best_size() >= cap_) return;
    forbidden_[pick] = 1;
    grow();
    forbidden_[pick] = 0;
  }

  const Graph& g_;
  std::vector<char> in_;
  std::vector<int> count_;
  std::vector<char> forbidden_;
  VertexSet tree_;
  VertexSet best_;
  Vertex lowest_ = 0;
  int cap_ = 0;
  std::uint64_t nodes_ = 0;
  Clock::time_point deadline_;
};

void check_vertex_budget(const Graph& g, const OracleBudget& budget) {
  if (g.num_vertices() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.num_vertices()) +
                         " vertices; oracle budget is " + std::to_string(budget.max_vertices));
  }
}

}  // namespace

TreeOptimum max_induced_tree_exact(const Graph& g, const OracleBudget& budget) {
  check_vertex_budget(g, budget);
  const int n = g.num_vertices();
  if (n == 0) return {};
  TreeSearch search(g, budget);
  search.set_cap(n);
  for (Vertex s = 0; s < n && search.best_size() < n - s; ++s) search.grow_from(s, s);
  return {search.best_size(), search.best()};
}

TreeOptimum max_tree_through_vertex_exact(const Graph& g, Vertex v, const OracleBudget& budget) {
  check_vertex_budget(g, budget);
  if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
  TreeSearch search(g, budget);
  search.set_cap(g.num_vertices());
  search.grow_from(v, 0);
  return {search.best_size(), search.best()};
}

AdmissibleSelection admissible_naive(const WeightedBipartiteInstance& inst, double alpha,
                                     const OracleBudget& budget) {
  if (inst.a_count > budget.max_a_side) {
    throw BudgetExceeded("a_count " + std::to_string(inst.a_count) + " exceeds the oracle budget " +
                         std::to_string(budget.max_a_side));
  }
  if (inst.a_count == 0) throw PreconditionError("side A is empty");
  std::vector<std::uint64_t> nbr_mask;
  std::vector<double> power;
  for (const auto& item : inst.b_items) {
    std::uint64_t mask = 0;
    for (int a : item.nbrs) mask |= std::uint64_t{1} << a;
    nbr_mask.push_back(mask);
    power.push_back(weight_power(item.w, alpha));
  }
  const std::uint64_t end = std::uint64_t{1} << inst.a_count;
  std::uint64_t best_mask = 0;
  double best = -1.0;
  for (std::uint64_t s = 1; s < end; ++s) {
    double value = 0.0;
    for (std::size_t i = 0; i < nbr_mask.size(); ++i) {
      if (std::popcount(s & nbr_mask[i]) == 1) value += power[i];
    }
    if (value > best) best = value, best_mask = s;
  }
  std::vector<int> chosen;
  for (int a = 0; a < inst.a_count; ++a) {
    if (best_mask >> a & 1) chosen.push_back(a);
  }
  return make_selection(inst, std::move(chosen), alpha);
}

}  // namespace itree
