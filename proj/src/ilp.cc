#include "conabs/ilp.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

#include "json.hpp"

namespace conabs {

namespace {

// Objectives closer than this are treated as equal and resolved by index.
constexpr double kTieTolerance = 1e-9;

// True if index set a precedes b (both ascending).
bool LexLess(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Fractional knapsack optimum over (value, length) items with capacity `cap`.
double FractionalKnapsack(std::vector<std::pair<double, int>>& items, int cap) {
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.first / a.second > b.first / b.second;
  });
  double total = 0.0;
  int left = cap;
  for (const auto& [value, length] : items) {
    if (left <= 0) break;
    if (length <= left) {
      total += value;
      left -= length;
    } else {
      total += value * static_cast<double>(left) / static_cast<double>(length);
      left = 0;
    }
  }
  return total;
}

// Fractional knapsack over (value, cost per unit value) pieces.
double FillByRate(std::vector<std::pair<double, double>>& pieces, double cap) {
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  double total = 0.0;
  for (const auto& [value, rate] : pieces) {
    const double cost = value * rate;
    if (cost <= cap) {
      total += value;
      cap -= cost;
    } else {
      total += cap / rate;
      break;
    }
  }
  return total;
}

class BranchAndBound {
 public:
  BranchAndBound(const IlpInstance& instance, const SolveOptions& options)
      : inst_(instance),
        options_(options),
        cover_count_(static_cast<std::size_t>(instance.num_words), 0),
        word_mark_(static_cast<std::size_t>(instance.num_words), 0),
        word_rate_(static_cast<std::size_t>(instance.num_words), 0.0),
        residual_(instance.budget) {
    const int n = instance.num_paths();
    std::vector<double> priority(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      if (instance.lengths[i] > instance.budget) continue;
      double weight = instance.gains[i];
      for (int j : instance.content[i]) weight += instance.WordWeight(j);
      priority[i] = weight / instance.lengths[i];
      order_.push_back(i);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return priority[a] > priority[b]; });
  }

  void SeedIncumbent(const IlpSolution& seed) {
    best_ = seed.objective;
    best_selected_ = seed.Selected();
  }

  IlpSolution Run() {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(options_.time_limit_seconds));
    Search(0);
    IlpSolution solution;
    solution.x.assign(static_cast<std::size_t>(inst_.num_paths()), false);
    for (int i : best_selected_) solution.x[i] = true;
    solution.y = DeriveCoverage(inst_, solution.x);
    solution.objective = EvaluateObjective(inst_, solution.x);
    solution.optimal = !aborted_;
    solution.nodes = nodes_;
    return solution;
  }

 private:
  bool OutOfBudget() {
    if (work_ > options_.work_limit) return true;
    if ((nodes_ & 255) == 0 && std::chrono::steady_clock::now() > deadline_) {
      return true;
    }
    return false;
  }

  void Consider() {
    if (value_ < best_ - kTieTolerance) return;
    std::vector<int> sorted = selected_;
    std::sort(sorted.begin(), sorted.end());
    if (value_ > best_ + kTieTolerance || LexLess(sorted, best_selected_)) {
      best_ = value_;
      best_selected_ = std::move(sorted);
    }
  }

  void Include(int item) {
    selected_.push_back(item);
    residual_ -= inst_.lengths[item];
    value_ += inst_.gains[item];
    for (int j : inst_.content[item]) {
      if (cover_count_[j]++ == 0) value_ += inst_.WordWeight(j);
    }
  }

  void Exclude(int item) {
    selected_.pop_back();
    residual_ += inst_.lengths[item];
    value_ -= inst_.gains[item];
    for (int j : inst_.content[item]) {
      if (--cover_count_[j] == 0) value_ -= inst_.WordWeight(j);
    }
  }

  // Upper bound on any completion that may add items order_[pos..]. Three
  // relaxations, each a fractional knapsack, and the smallest wins:
  //  - items valued at gain plus currently uncovered word weight;
  //  - items valued at gain alone, plus every reachable word for free;
  //  - item i costs Length(i) / value(i) per unit of value; each word is
  //    charged once, at the cheapest rate of any item covering it.
  double Bound(std::size_t pos) {
    with_words_.clear();
    gains_only_.clear();
    charged_.clear();
    double reachable = 0.0;
    touched_.clear();
    for (std::size_t k = pos; k < order_.size(); ++k) {
      const int item = order_[k];
      const int length = inst_.lengths[item];
      ++work_;
      if (length > residual_) continue;
      double fresh = 0.0;
      for (int j : inst_.content[item]) {
        ++work_;
        if (cover_count_[j] != 0) continue;
        const double w = inst_.WordWeight(j);
        fresh += w;
        if (!word_mark_[j]) {
          word_mark_[j] = 1;
          word_rate_[j] = std::numeric_limits<double>::infinity();
          touched_.push_back(j);
          reachable += w;
        }
      }
      const double gain = inst_.gains[item];
      with_words_.emplace_back(gain + fresh, length);
      gains_only_.emplace_back(gain, length);
      if (gain + fresh <= 0.0) continue;
      const double rate = length / (gain + fresh);
      if (gain > 0.0) charged_.emplace_back(gain, rate);
      for (int j : inst_.content[item]) {
        if (cover_count_[j] == 0) word_rate_[j] = std::min(word_rate_[j], rate);
      }
    }
    for (int j : touched_) {
      word_mark_[j] = 0;
      const double w = inst_.WordWeight(j);
      if (w > 0.0) charged_.emplace_back(w, word_rate_[j]);
    }
    // The three sorts dominate a bound's cost; charge them to the work meter.
    const std::size_t pieces = with_words_.size() + gains_only_.size() + charged_.size();
    work_ += static_cast<int64_t>(pieces * (std::bit_width(pieces) + 1));
    const double additive = FractionalKnapsack(with_words_, residual_);
    const double split = FractionalKnapsack(gains_only_, residual_) + reachable;
    const double shared = FillByRate(charged_, residual_);
    return value_ + std::min({additive, split, shared});
  }

  void Search(std::size_t pos) {
    ++nodes_;
    if (aborted_ || OutOfBudget()) {
      aborted_ = true;
      return;
    }
    Consider();
    for (std::size_t k = pos; k < order_.size(); ++k) {
      if (aborted_) return;
      const int item = order_[k];
      if (inst_.lengths[item] > residual_) continue;
      // Bounds only shrink as k grows, so the remaining siblings are pruned too.
      if (Bound(k) < best_ - kTieTolerance) return;
      Include(item);
      Search(k + 1);
      Exclude(item);
    }
  }

  const IlpInstance& inst_;
  const SolveOptions& options_;
  std::vector<int> order_;
  std::vector<int> cover_count_;
  std::vector<char> word_mark_;
  std::vector<int> touched_;
  std::vector<std::pair<double, int>> with_words_;
  std::vector<std::pair<double, int>> gains_only_;
  std::vector<std::pair<double, double>> charged_;
  std::vector<double> word_rate_;
  std::vector<int> selected_;
  int residual_ = 0;
  double value_ = 0.0;
  double best_ = -std::numeric_limits<double>::infinity();
  std::vector<int> best_selected_;
  int64_t work_ = 0;
  int64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

IlpSolution EmptySolution(const IlpInstance& instance) {
  IlpSolution s;
  s.x.assign(static_cast<std::size_t>(instance.num_paths()), false);
  s.y.assign(static_cast<std::size_t>(instance.num_words), false);
  s.objective = 0.0;
  s.optimal = true;
  return s;
}

}  // namespace

void IlpInstance::Validate() const {
  const std::size_t n = lengths.size();
  if (gains.size() != n || content.size() != n) {
    throw IlpError("lengths, gains and content must have one entry per path");
  }
  if (num_words < 0) throw IlpError("negative word count");
  if (budget < 0) throw IlpError("negative length budget");
  if (!word_weights.empty() &&
      word_weights.size() != static_cast<std::size_t>(num_words)) {
    throw IlpError("word_weights must have one entry per word");
  }
  for (double w : word_weights) {
    if (!std::isfinite(w) || w < 0.0) throw IlpError("word weight must be finite and >= 0");
  }
  std::vector<char> seen(static_cast<std::size_t>(num_words), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (lengths[i] < 1) throw IlpError("path " + std::to_string(i) + " has Length < 1");
    if (!std::isfinite(gains[i]) || gains[i] < 0.0) {
      throw IlpError("path " + std::to_string(i) + " has invalid gain");
    }
    for (int j : content[i]) {
      if (j < 0 || j >= num_words) {
        throw IlpError("path " + std::to_string(i) + " references word " +
                       std::to_string(j) + " outside [0, m)");
      }
      if (seen[j]) throw IlpError("path " + std::to_string(i) + " lists word twice");
      seen[j] = 1;
    }
    for (int j : content[i]) seen[j] = 0;
  }
}

std::vector<std::vector<int>> IlpInstance::Covering() const {
  std::vector<std::vector<int>> covering(static_cast<std::size_t>(num_words));
  for (int i = 0; i < num_paths(); ++i) {
    for (int j : content[i]) covering[j].push_back(i);
  }
  return covering;
}

std::vector<int> IlpSolution::Selected() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<bool> DeriveCoverage(const IlpInstance& instance,
                                 const std::vector<bool>& x) {
  std::vector<bool> y(static_cast<std::size_t>(instance.num_words), false);
  for (int i = 0; i < instance.num_paths(); ++i) {
    if (!x[i]) continue;
    for (int j : instance.content[i]) y[j] = true;
  }
  return y;
}

double EvaluateObjective(const IlpInstance& instance, const std::vector<bool>& x) {
  double total = 0.0;
  for (int i = 0; i < instance.num_paths(); ++i) {
    if (x[i]) total += instance.gains[i];
  }
  const std::vector<bool> y = DeriveCoverage(instance, x);
  for (int j = 0; j < instance.num_words; ++j) {
    if (y[j]) total += instance.WordWeight(j);
  }
  return total;
}

IlpSolution GreedySolve(const IlpInstance& instance) {
  instance.Validate();
  const int n = instance.num_paths();
  IlpSolution solution = EmptySolution(instance);
  solution.optimal = false;
  if (instance.budget == 0 || n == 0) {
    solution.optimal = true;
    return solution;
  }

  std::vector<char> covered(static_cast<std::size_t>(instance.num_words), 0);
  auto ratio = [&](int i) {
    double v = instance.gains[i];
    for (int j : instance.content[i]) {
      if (!covered[j]) v += instance.WordWeight(j);
    }
    return v / instance.lengths[i];
  };

  // Lazy evaluation: stale ratios are upper bounds (coverage only grows).
  struct Entry {
    double ratio;
    int item;
    int round;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    return a.item > b.item;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (int i = 0; i < n; ++i) {
    if (instance.lengths[i] <= instance.budget) heap.push({ratio(i), i, 0});
  }
  int residual = instance.budget;
  int round = 0;
  std::vector<bool> x(static_cast<std::size_t>(n), false);
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (instance.lengths[top.item] > residual) continue;
    if (top.round != round) {
      heap.push({ratio(top.item), top.item, round});
      continue;
    }
    if (top.ratio <= 0.0) break;
    x[top.item] = true;
    residual -= instance.lengths[top.item];
    for (int j : instance.content[top.item]) covered[j] = 1;
    ++round;
  }
  double best = EvaluateObjective(instance, x);

  // The ratio rule alone can be arbitrarily bad; the best single item
  // restores the constant-factor guarantee.
  for (int i = 0; i < n; ++i) {
    if (instance.lengths[i] > instance.budget) continue;
    std::vector<bool> single(static_cast<std::size_t>(n), false);
    single[i] = true;
    const double v = EvaluateObjective(instance, single);
    if (v > best + kTieTolerance) {
      best = v;
      x = std::move(single);
    }
  }
  solution.x = x;
  solution.y = DeriveCoverage(instance, x);
  solution.objective = best;
  return solution;
}

IlpSolution ImproveBySwaps(const IlpInstance& instance, const IlpSolution& start) {
  instance.Validate();
  const int n = instance.num_paths();
  std::vector<bool> x = start.x;
  x.resize(static_cast<std::size_t>(n), false);
  std::vector<int> cover(static_cast<std::size_t>(instance.num_words), 0);
  int residual = instance.budget;
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    residual -= instance.lengths[i];
    for (int j : instance.content[i]) ++cover[j];
  }
  if (residual < 0) throw IlpError("starting solution exceeds the budget");

  auto apply = [&](int item, bool in) {
    x[item] = in;
    residual += in ? -instance.lengths[item] : instance.lengths[item];
    for (int j : instance.content[item]) cover[j] += in ? 1 : -1;
  };
  // Change in objective from adding `item` (coverage as it stands now).
  auto add_delta = [&](int item) {
    double d = instance.gains[item];
    for (int j : instance.content[item]) {
      if (cover[j] == 0) d += instance.WordWeight(j);
    }
    return d;
  };

  constexpr double kMinImprovement = 1e-12;
  constexpr int kMaxRounds = 1000;
  for (int round = 0; round < kMaxRounds; ++round) {
    // Fill: ascending index order, any item that still fits.
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      if (!x[i] && instance.lengths[i] <= residual && add_delta(i) > kMinImprovement) {
        apply(i, true);
        changed = true;
      }
    }
    // Best single exchange (out, in); ties resolved toward smaller indices.
    double best_delta = kMinImprovement;
    int best_out = -1, best_in = -1;
    for (int out = 0; out < n; ++out) {
      if (!x[out]) continue;
      apply(out, false);
      const double removed = add_delta(out);
      for (int in = 0; in < n; ++in) {
        if (x[in] || in == out || instance.lengths[in] > residual) continue;
        const double delta = add_delta(in) - removed;
        if (delta > best_delta) {
          best_delta = delta;
          best_out = out;
          best_in = in;
        }
      }
      apply(out, true);
    }
    if (best_out >= 0) {
      apply(best_out, false);
      apply(best_in, true);
      changed = true;
    }
    if (!changed) break;
  }

  IlpSolution out;
  out.x = x;
  out.y = DeriveCoverage(instance, x);
  out.objective = EvaluateObjective(instance, x);
  out.optimal = false;
  if (out.objective < start.objective - kTieTolerance) return start;
  return out;
}

IlpSolution Solve(const IlpInstance& instance, const SolveOptions& options) {
  instance.Validate();
  if (instance.budget == 0 || instance.num_paths() == 0) {
    return EmptySolution(instance);
  }
  BranchAndBound search(instance, options);
  search.SeedIncumbent(ImproveBySwaps(instance, GreedySolve(instance)));
  return search.Run();
}

IlpSolution OracleSolve(const IlpInstance& instance) {
  instance.Validate();
  const int n = instance.num_paths();
  if (n > kOracleMaxPaths) {
    throw IlpError("oracle refuses instances with more than " +
                   std::to_string(kOracleMaxPaths) + " paths");
  }
  std::vector<bool> best_x(static_cast<std::size_t>(n), false);
  double best = EvaluateObjective(instance, best_x);
  std::vector<int> best_selected;
  std::vector<bool> x(static_cast<std::size_t>(n));
  std::vector<int> selected;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int64_t length = 0;
    selected.clear();
    for (int i = 0; i < n; ++i) {
      x[i] = (mask >> i) & 1u;
      if (x[i]) {
        length += instance.lengths[i];
        selected.push_back(i);
      }
    }
    if (length > instance.budget) continue;
    const double v = EvaluateObjective(instance, x);
    if (v > best + kTieTolerance ||
        (v >= best - kTieTolerance && LexLess(selected, best_selected))) {
      best = v;
      best_x = x;
      best_selected = selected;
    }
  }
  IlpSolution solution;
  solution.x = best_x;
  solution.y = DeriveCoverage(instance, best_x);
  solution.objective = best;
  solution.optimal = true;
  solution.nodes = int64_t{1} << n;
  return solution;
}

std::string DumpInstanceJson(const IlpInstance& instance) {
  nlohmann::json j;
  j["lengths"] = instance.lengths;
  j["gains"] = instance.gains;
  j["content"] = instance.content;
  j["num_words"] = instance.num_words;
  if (!instance.word_weights.empty()) j["weights"] = instance.word_weights;
  j["budget"] = instance.budget;
  return j.dump();
}

IlpInstance LoadInstanceJson(const std::string& text) {
  IlpInstance instance;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    instance.lengths = j.at("lengths").get<std::vector<int>>();
    instance.gains = j.at("gains").get<std::vector<double>>();
    instance.content = j.at("content").get<std::vector<std::vector<int>>>();
    instance.budget = j.at("budget").get<int>();
    if (j.contains("weights")) {
      instance.word_weights = j.at("weights").get<std::vector<double>>();
    }
    if (j.contains("num_words")) {
      instance.num_words = j.at("num_words").get<int>();
    } else {
      int m = 0;
      for (const auto& c : instance.content) {
        for (int w : c) m = std::max(m, w + 1);
      }
      instance.num_words = m;
    }
  } catch (const nlohmann::json::exception& e) {
    throw IlpError(std::string("bad ILP instance JSON: ") + e.what());
  }
  instance.Validate();
  if (j.contains("covering")) {
    std::vector<std::vector<int>> covering;
    try {
      covering = j.at("covering").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw IlpError(std::string("bad covering lists: ") + e.what());
    }
    for (auto& list : covering) std::sort(list.begin(), list.end());
    if (covering != instance.Covering()) {
      throw IlpError("covering lists T_j disagree with content lists C_i");
    }
  }
  return instance;
}

}  // namespace conabs
