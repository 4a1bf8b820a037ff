#include "itree/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "itree/errors.hpp"
#include "json.hpp"

namespace itree {

void WeightedBipartiteInstance::normalize_and_validate() {
  if (a_count < 0) throw PreconditionError("a_count must be nonnegative");
  for (std::size_t i = 0; i < b_items.size(); ++i) {
    auto& item = b_items[i];
    const std::string where = "b_items[" + std::to_string(i) + "]: ";
    if (!(item.w >= 0.0) || !std::isfinite(item.w)) {
      throw PreconditionError(where + "weight must be a finite number >= 0");
    }
    std::sort(item.nbrs.begin(), item.nbrs.end());
    item.nbrs.erase(std::unique(item.nbrs.begin(), item.nbrs.end()), item.nbrs.end());
    if (item.nbrs.empty()) throw PreconditionError(where + "every B-item needs at least one neighbor");
    if (item.nbrs.front() < 0 || item.nbrs.back() >= a_count) {
      throw PreconditionError(where + "neighbor id outside 0.." + std::to_string(a_count - 1));
    }
  }
}

double WeightedBipartiteInstance::total_weight() const {
  double sum = 0.0;
  for (const auto& item : b_items) sum += item.w;
  return sum;
}

std::vector<std::vector<int>> WeightedBipartiteInstance::a_neighborhoods() const {
  std::vector<std::vector<int>> out(a_count);
  for (std::size_t i = 0; i < b_items.size(); ++i) {
    for (int a : b_items[i].nbrs) out[a].push_back(static_cast<int>(i));
  }
  return out;
}

double weight_power(double w, double alpha) {
  if (w <= 0.0) return 0.0;
  if (alpha == 0.5) return std::sqrt(w);
  if (alpha == 1.0) return w;
  return std::pow(w, alpha);
}

double objective(const WeightedBipartiteInstance& inst, std::span<const int> b_ids, double alpha) {
  double sum = 0.0;
  for (int i : b_ids) sum += weight_power(inst.b_items[i].w, alpha);
  return sum;
}

std::vector<int> closure_b(const WeightedBipartiteInstance& inst, std::span<const int> s) {
  if (s.empty()) throw PreconditionError("closure_b needs a nonempty A-subset");
  std::vector<char> in(inst.a_count, 0);
  for (int a : s) {
    if (a < 0 || a >= inst.a_count) throw PreconditionError("A-id out of range");
    in[a] = 1;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < inst.b_items.size(); ++i) {
    int hits = 0;
    for (int a : inst.b_items[i].nbrs) hits += in[a];
    if (hits == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

AdmissibleSelection make_selection(const WeightedBipartiteInstance& inst, std::vector<int> s,
                                   double alpha) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  AdmissibleSelection sel;
  sel.alpha = alpha;
  if (!s.empty()) sel.b_chosen = closure_b(inst, s);
  sel.a_chosen = std::move(s);
  sel.value = objective(inst, sel.b_chosen, alpha);
  return sel;
}

bool is_admissible(const WeightedBipartiteInstance& inst, const AdmissibleSelection& sel) {
  std::vector<char> in(inst.a_count, 0);
  for (int a : sel.a_chosen) {
    if (a < 0 || a >= inst.a_count) return false;
    in[a] = 1;
  }
  for (int i : sel.b_chosen) {
    if (i < 0 || i >= static_cast<int>(inst.b_items.size())) return false;
    int hits = 0;
    for (int a : inst.b_items[i].nbrs) hits += in[a];
    if (hits != 1) return false;
  }
  return true;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const WeightedBipartiteInstance& inst, double alpha, std::optional<double> target)
      : inst_(inst), alpha_(alpha), target_(target) {
    const int m = static_cast<int>(inst.b_items.size());
    power_.resize(m);
    for (int i = 0; i < m; ++i) power_[i] = weight_power(inst.b_items[i].w, alpha);
    a_nbrs_ = inst.a_neighborhoods();

    std::vector<double> mass(inst.a_count, 0.0);
    for (int a = 0; a < inst.a_count; ++a) {
      for (int i : a_nbrs_[a]) mass[a] += power_[i];
    }
    order_.resize(inst.a_count);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return mass[x] > mass[y]; });

    chosen_.assign(m, 0);
    undecided_.resize(m);
    for (int i = 0; i < m; ++i) {
      undecided_[i] = static_cast<int>(inst.b_items[i].nbrs.size());
      open_ += power_[i];
    }
  }

  std::vector<int> run() {
    search(0);
    return best_set_;
  }

 private:
  // Which running sum item i currently contributes to.
  enum class Slot { kNone, kCurrent, kOpen };

  Slot slot(int i) const {
    if (chosen_[i] == 1) return Slot::kCurrent;
    if (chosen_[i] == 0 && undecided_[i] > 0) return Slot::kOpen;
    return Slot::kNone;
  }

  void move(int i, Slot from, Slot to) {
    if (from == to) return;
    if (from == Slot::kCurrent) current_ -= power_[i];
    if (from == Slot::kOpen) open_ -= power_[i];
    if (to == Slot::kCurrent) current_ += power_[i];
    if (to == Slot::kOpen) open_ += power_[i];
  }

  void decide(int a, bool take) {
    for (int i : a_nbrs_[a]) {
      Slot before = slot(i);
      --undecided_[i];
      if (take) ++chosen_[i];
      move(i, before, slot(i));
    }
    if (take) set_.push_back(a);
  }

  void undo(int a, bool take) {
    for (int i : a_nbrs_[a]) {
      Slot before = slot(i);
      ++undecided_[i];
      if (take) --chosen_[i];
      move(i, before, slot(i));
    }
    if (take) set_.pop_back();
  }

  bool done() const { return target_ && have_best_ && best_ >= *target_; }

  void search(std::size_t depth) {
    if (!set_.empty() && (!have_best_ || current_ > best_)) {
      // Recompute exactly; the running sums only steer the search.
      std::vector<int> s = set_;
      double exact = objective(inst_, closure_b(inst_, s), alpha_);
      if (!have_best_ || exact > best_) {
        best_ = exact;
        best_set_ = std::move(s);
        have_best_ = true;
      }
    }
    if (done() || depth == order_.size()) return;
    if (have_best_ && current_ + open_ <= best_) return;

    const int a = order_[depth];
    decide(a, true);
    search(depth + 1);
    undo(a, true);
    if (done()) return;
    decide(a, false);
    search(depth + 1);
    undo(a, false);
  }

  const WeightedBipartiteInstance& inst_;
  double alpha_;
  std::optional<double> target_;
  std::vector<double> power_;
  std::vector<std::vector<int>> a_nbrs_;
  std::vector<int> order_;
  std::vector<int> chosen_;
  std::vector<int> undecided_;
  std::vector<int> set_;
  double current_ = 0.0;
  double open_ = 0.0;
  bool have_best_ = false;
  double best_ = 0.0;
  std::vector<int> best_set_;
};

}  // namespace

AdmissibleSelection solve_exact(const WeightedBipartiteInstance& inst, double alpha,
                                const ExactOptions& options) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw PreconditionError("alpha must lie in (0, 1]");
  if (inst.a_count == 0) throw PreconditionError("side A is empty; no admissible set is nonempty");
  if (!options.target && inst.a_count > options.exhaustion_limit) {
    throw BudgetExceeded("exact search infeasible: a_count " + std::to_string(inst.a_count) +
                         " exceeds the exhaustion limit " +
                         std::to_string(options.exhaustion_limit));
  }
  BranchAndBound bb(inst, alpha, options.target);
  return make_selection(inst, bb.run(), alpha);
}

Reduction reduce(const WeightedBipartiteInstance& inst) {
  const int m = static_cast<int>(inst.b_items.size());
  std::vector<char> alive(inst.a_count, 1);
  std::vector<int> degree(m);
  for (int i = 0; i < m; ++i) degree[i] = static_cast<int>(inst.b_items[i].nbrs.size());
  const auto a_nbrs = inst.a_neighborhoods();

  auto has_private = [&](int a) {
    return std::any_of(a_nbrs[a].begin(), a_nbrs[a].end(), [&](int i) { return degree[i] == 1; });
  };
  // A deletion can hand an earlier vertex a private neighbor, so rescan from
  // the smallest id after each one.
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < inst.a_count; ++a) {
      if (!alive[a] || has_private(a)) continue;
      alive[a] = 0;
      for (int i : a_nbrs[a]) --degree[i];
      changed = true;
      break;
    }
  }

  Reduction out;
  std::vector<int> local(inst.a_count, -1);
  for (int a = 0; a < inst.a_count; ++a) {
    if (alive[a]) {
      local[a] = static_cast<int>(out.a_map.size());
      out.a_map.push_back(a);
    }
  }
  out.instance.a_count = static_cast<int>(out.a_map.size());
  out.instance.b_items.reserve(m);
  for (const auto& item : inst.b_items) {
    BItem copy{item.w, {}};
    for (int a : item.nbrs) {
      if (local[a] >= 0) copy.nbrs.push_back(local[a]);
    }
    out.instance.b_items.push_back(std::move(copy));
  }
  return out;
}

namespace {

std::vector<int> map_back(const Reduction& red, std::span<const int> s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int a : s) out.push_back(red.a_map[a]);
  return out;
}

// Smallest-id A-vertex maximizing `score`.
template <typename Score>
int best_vertex(int a_count, Score score) {
  int best = 0;
  for (int a = 1; a < a_count; ++a) {
    if (score(a) > score(best)) best = a;
  }
  return best;
}

}  // namespace

AdmissibleSelection select_uniform(const WeightedBipartiteInstance& inst, double alpha) {
  const auto m = static_cast<long long>(inst.b_items.size());
  if (m == 0 || inst.a_count == 0) return make_selection(inst, {}, alpha);
  Reduction red = reduce(inst);
  const auto kept = static_cast<long long>(red.a_map.size());
  if (kept * kept >= m) return make_selection(inst, red.a_map, alpha);

  const auto a_nbrs = inst.a_neighborhoods();
  int star = best_vertex(inst.a_count, [&](int a) { return a_nbrs[a].size(); });
  return make_selection(inst, {star}, alpha);
}

AdmissibleSelection select_weighted(const WeightedBipartiteInstance& inst) {
  constexpr double kAlpha = 0.5;
  if (inst.a_count == 0) return make_selection(inst, {}, kAlpha);
  const double target = std::sqrt(inst.total_weight()) - kBoundSlack;

  const auto a_nbrs = inst.a_neighborhoods();
  auto star_value = [&](int a) { return objective(inst, a_nbrs[a], kAlpha); };
  AdmissibleSelection best = make_selection(inst, {best_vertex(inst.a_count, star_value)}, kAlpha);
  if (best.value >= target) return best;

  // Greedy ascent from the best star.
  for (bool improved = true; improved;) {
    improved = false;
    std::vector<char> in(inst.a_count, 0);
    for (int a : best.a_chosen) in[a] = 1;
    for (int a = 0; a < inst.a_count; ++a) {
      if (in[a]) continue;
      auto s = best.a_chosen;
      s.push_back(a);
      auto candidate = make_selection(inst, std::move(s), kAlpha);
      if (candidate.value > best.value) {
        best = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  if (best.value >= target) return best;

  Reduction red = reduce(inst);
  if (!red.a_map.empty()) {
    auto matching = make_selection(inst, red.a_map, kAlpha);
    if (matching.value > best.value) best = std::move(matching);
    if (best.value >= target) return best;

    ExactOptions options;
    options.target = target;
    auto exact = solve_exact(red.instance, kAlpha, options);
    auto mapped = make_selection(inst, map_back(red, exact.a_chosen), kAlpha);
    if (mapped.value > best.value) best = std::move(mapped);
  }
  if (best.value < target) {
    std::string dump = "a_count=" + std::to_string(inst.a_count) +
                       " |B|=" + std::to_string(inst.b_items.size()) +
                       " best=" + std::to_string(best.value) + " target=" + std::to_string(target);
    throw InternalError("lemma violation: no admissible set reaches sqrt(total weight)", dump);
  }
  return best;
}

DyadicOutcome select_randomized_dyadic(const WeightedBipartiteInstance& inst, std::uint64_t seed) {
  DyadicOutcome out;
  if (inst.b_items.empty() || inst.a_count == 0) {
    out.selection = make_selection(inst, {}, 0.5);
    out.reached_threshold = true;
    return out;
  }
  Reduction red = reduce(inst);
  const auto& items = red.instance.b_items;

  std::size_t max_degree = 0;
  for (const auto& item : items) max_degree = std::max(max_degree, item.nbrs.size());
  const int classes = static_cast<int>(std::floor(std::log2(static_cast<double>(max_degree)))) + 1;
  std::vector<std::size_t> counts(classes, 0);
  for (const auto& item : items) {
    const std::size_t d = item.nbrs.size();
    for (int k = 0; k < classes; ++k) {
      const std::size_t lo = std::size_t{1} << k;
      if (d >= lo && d <= 2 * lo) ++counts[k];
    }
  }
  out.k = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  out.class_size = counts[out.k];
  const double p = std::ldexp(1.0, -out.k - 1);

  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  bool have = false;
  for (int attempt = 1; attempt <= kDyadicRetries; ++attempt) {
    std::vector<int> sample;
    for (int a = 0; a < red.instance.a_count; ++a) {
      if (uniform() < p) sample.push_back(red.a_map[a]);
    }
    auto sel = make_selection(inst, std::move(sample), 0.5);
    out.attempts = attempt;
    if (!have || sel.b_chosen.size() > out.selection.b_chosen.size()) {
      out.selection = std::move(sel);
      have = true;
    }
    if (8 * out.selection.b_chosen.size() >= out.class_size) {
      out.reached_threshold = true;
      break;
    }
  }
  return out;
}

WeightedBipartiteInstance read_instance_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  WeightedBipartiteInstance inst;
  try {
    if (!doc.contains("a_count") || !doc["a_count"].is_number_integer()) {
      throw ParseError("\"a_count\" must be an integer");
    }
    if (!doc.contains("b_items") || !doc["b_items"].is_array()) {
      throw ParseError("\"b_items\" must be an array");
    }
    inst.a_count = doc["a_count"].get<int>();
    const auto& items = doc["b_items"];
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      const std::string where = "b_items[" + std::to_string(i) + "]: ";
      if (!item.is_object() || !item.contains("w") || !item["w"].is_number()) {
        throw ParseError(where + "\"w\" must be a number");
      }
      if (!item.contains("nbrs") || !item["nbrs"].is_array()) {
        throw ParseError(where + "\"nbrs\" must be an array of integers");
      }
      BItem b;
      b.w = item["w"].get<double>();
      for (const auto& nb : item["nbrs"]) {
        if (!nb.is_number_integer()) throw ParseError(where + "\"nbrs\" must be an array of integers");
        b.nbrs.push_back(nb.get<int>());
      }
      inst.b_items.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    inst.normalize_and_validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

WeightedBipartiteInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_instance_json(in);
}

void write_instance_json(std::ostream& out, const WeightedBipartiteInstance& inst) {
  nlohmann::json doc;
  doc["a_count"] = inst.a_count;
  doc["b_items"] = nlohmann::json::array();
  for (const auto& item : inst.b_items) {
    doc["b_items"].push_back({{"w", item.w}, {"nbrs", item.nbrs}});
  }
  out << doc.dump() << '\n';
}

}  // namespace itree
