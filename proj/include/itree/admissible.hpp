#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace itree {

/// One vertex of side B: a nonnegative weight and its (nonempty, sorted)
/// neighborhood in A.
struct BItem {
  double w = 0.0;
  std::vector<int> nbrs;
};

/// Bipartite structure with sides A = {0..a_count-1} and B = b_items.
struct WeightedBipartiteInstance {
  int a_count = 0;
  std::vector<BItem> b_items;

  /// Sorts/dedupes neighbor lists, then checks that every B-item has degree
  /// >= 1, weight >= 0 and neighbors < a_count. Throws PreconditionError
  /// naming the offending item.
  void normalize_and_validate();

  double total_weight() const;
  /// Neighborhood of each A-vertex as a list of B-ids.
  std::vector<std::vector<int>> a_neighborhoods() const;
};

/// A set S of A-vertices together with the B-items that have exactly one
/// neighbor in S. `value` is the sum of w^alpha over b_chosen.
struct AdmissibleSelection {
  std::vector<int> a_chosen;
  std::vector<int> b_chosen;
  double value = 0.0;
  double alpha = 0.5;
};

/// w^alpha with 0^alpha = 0; sqrt is used for alpha = 1/2.
double weight_power(double w, double alpha);

/// Sum of w^alpha over the listed B-items.
double objective(const WeightedBipartiteInstance& inst, std::span<const int> b_ids, double alpha);

/// { i : |nbrs(i) ∩ s| = 1 }. Throws PreconditionError on empty s.
std::vector<int> closure_b(const WeightedBipartiteInstance& inst, std::span<const int> s);

/// Builds the selection induced by s (b_chosen = closure_b(s)); empty s
/// yields the empty selection with value 0.
AdmissibleSelection make_selection(const WeightedBipartiteInstance& inst, std::vector<int> s,
                                   double alpha);

/// True iff every chosen B-item has exactly one chosen A-neighbor and ids
/// are in range.
bool is_admissible(const WeightedBipartiteInstance& inst, const AdmissibleSelection& sel);

struct ExactOptions {
  /// Largest a_count searched without a target.
  int exhaustion_limit = 24;
  /// Stop as soon as some selection reaches this value.
  std::optional<double> target;
};

/// Maximizes sum of w^alpha over closure_b(S) for nonempty S ⊆ A by
/// branch-and-bound over A-membership. A-vertices are branched in
/// decreasing order of their neighborhood mass; a node is cut when the
/// current value plus the mass of B-items that can still end up with exactly
/// one chosen neighbor doesn't beat the incumbent.
///
/// Throws PreconditionError if alpha is outside (0, 1] or a_count = 0, and
/// BudgetExceeded if a_count exceeds the exhaustion limit and no target is
/// set.
AdmissibleSelection solve_exact(const WeightedBipartiteInstance& inst, double alpha,
                                const ExactOptions& options = {});

struct Reduction {
  WeightedBipartiteInstance instance;
  /// reduced A-id -> original A-id.
  std::vector<int> a_map;
};

/// Repeatedly deletes the smallest-id A-vertex without a private (degree-1)
/// B-neighbor until every remaining A-vertex has one. B is kept as is,
/// with neighborhoods restricted to the surviving A-vertices.
Reduction reduce(const WeightedBipartiteInstance& inst);

/// Constructive selection with |b_chosen| >= ceil(sqrt(|B|)): after
/// reduction, the induced matching if it is large enough, otherwise the
/// largest star. `alpha` only sets the reported value.
AdmissibleSelection select_uniform(const WeightedBipartiteInstance& inst, double alpha = 0.5);

/// Selection with sum sqrt(w_i) >= sqrt(sum w) - 1e-9. Throws InternalError
/// ("lemma violation") if even the exhaustive fallback can't get there.
AdmissibleSelection select_weighted(const WeightedBipartiteInstance& inst);

struct DyadicOutcome {
  AdmissibleSelection selection;
  int k = 0;                 ///< chosen dyadic class [2^k, 2^(k+1)]
  std::size_t class_size = 0;  ///< |B_k|
  int attempts = 0;
  bool reached_threshold = false;  ///< 8 |b_chosen| >= |B_k|
};

/// Random sampling selector: pick the most populated degree class
/// [2^k, 2^(k+1)], keep each A-vertex with probability 2^(-k-1), retry up to
/// 64 times until |b_chosen| >= |B_k| / 8 and return the best attempt. The
/// instance is reduced first.
DyadicOutcome select_randomized_dyadic(const WeightedBipartiteInstance& inst, std::uint64_t seed);

inline constexpr double kBoundSlack = 1e-9;
inline constexpr int kDyadicRetries = 64;

/// JSON: {"a_count": int, "b_items": [{"w": number, "nbrs": [int, ...]}, ...]}
WeightedBipartiteInstance read_instance_json(std::istream& in);
WeightedBipartiteInstance read_instance_file(const std::string& path);
void write_instance_json(std::ostream& out, const WeightedBipartiteInstance& inst);

}  // namespace itree
