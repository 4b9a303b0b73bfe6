// Exact 0-1 solver for budgeted path selection with content-word coverage:
//
//   max  sum_i gain(i) x_i + sum_j w_j y_j
//   s.t. sum_i Length(i) x_i <= L
//        y_j <= sum_{i in T_j} x_i
//        x_i = 1  =>  y_j = 1 for all j in C_i
//
// With unit word weights this is the abstractive path-selection program; the
// extractive first stage reuses it with term-frequency weights.

#ifndef CONABS_ILP_H_
#define CONABS_ILP_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conabs {

class IlpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IlpInstance {
  std::vector<int> lengths;               // Length(i) >= 1
  std::vector<double> gains;              // gain(i) >= 0, e.g. LQ(i) * I(i)
  std::vector<std::vector<int>> content;  // C_i, word indices in [0, num_words)
  int num_words = 0;                      // m
  std::vector<double> word_weights;       // empty means unit weights
  int budget = 0;                         // L

  int num_paths() const { return static_cast<int>(lengths.size()); }
  double WordWeight(int j) const {
    return word_weights.empty() ? 1.0 : word_weights[static_cast<std::size_t>(j)];
  }

  // Throws IlpError if the instance is inconsistent.
  void Validate() const;
  // T_j for every word.
  std::vector<std::vector<int>> Covering() const;
};

struct IlpSolution {
  std::vector<bool> x;
  std::vector<bool> y;
  double objective = 0.0;
  bool optimal = false;
  int64_t nodes = 0;

  std::vector<int> Selected() const;
};

struct SolveOptions {
  double time_limit_seconds = 10.0;
  // Deterministic effort cap, counted in item and word visits plus sorting
  // inside bound evaluations (roughly 3e8 per second). Reaching either
  // limit returns the incumbent with optimal=false.
  int64_t work_limit = 300'000'000;
};

// Branch and bound: items branched in descending (gain + word weight)/Length
// order, bounded by the tightest of three knapsack relaxations, seeded with
// the greedy solution improved by local search. Among equal objectives the
// lexicographically smallest set of selected indices wins.
IlpSolution Solve(const IlpInstance& instance, const SolveOptions& options = {});

// Budgeted max-coverage greedy (ratio rule, compared against the best single
// item). Used as the warm start.
IlpSolution GreedySolve(const IlpInstance& instance);

// Deterministic local search from a feasible solution: add every item that
// still fits and improves the objective, then apply the best improving
// single exchange, until neither helps. Never returns a worse solution.
IlpSolution ImproveBySwaps(const IlpInstance& instance, const IlpSolution& start);

// Exhaustive enumeration of all x; refuses instances with more than 20 paths.
IlpSolution OracleSolve(const IlpInstance& instance);

inline constexpr int kOracleMaxPaths = 20;

// y_j = 1 exactly for the words covered by the selected paths.
std::vector<bool> DeriveCoverage(const IlpInstance& instance,
                                 const std::vector<bool>& x);

// Objective of x with y derived; gains summed in index order, then weights.
double EvaluateObjective(const IlpInstance& instance, const std::vector<bool>& x);

// {"lengths":[..],"gains":[..],"content":[[..],..],"budget":L} plus optional
// "num_words", "weights" and "covering" (checked against "content").
std::string DumpInstanceJson(const IlpInstance& instance);
IlpInstance LoadInstanceJson(const std::string& text);

}  // namespace conabs

#endif  // CONABS_ILP_H_
