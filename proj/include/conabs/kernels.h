// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; the two must
// produce bit-identical results (each output slot is written by exactly one
// iteration, with the same arithmetic order).

#ifndef CONABS_KERNELS_H_
#define CONABS_KERNELS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace conabs {

enum class ExecutionPolicy { kSerial, kParallel };

// Sparse non-negative vector with strictly increasing indices.
struct SparseVector {
  std::vector<int> index;
  std::vector<double> value;

  double Norm() const;
};

// Sorted, duplicate-free id set.
using IdSet = std::vector<int>;

double Dot(const SparseVector& a, const SparseVector& b);
double Jaccard(const IdSet& a, const IdSet& b);

namespace kernels {

namespace serial {

// Row-major n*n cosine matrix. Zero rows have cosine 0 with everything,
// including themselves; values are clamped to [0,1].
std::vector<double> CosineMatrix(std::span<const SparseVector> rows);

// Greedy near-duplicate filter in input order: item i is kept unless an
// earlier kept item shares an id with it and has Jaccard >= threshold.
std::vector<bool> NearDuplicateKeep(std::span<const IdSet> sets,
                                    double threshold);

}  // namespace serial

namespace parallel {

std::vector<double> CosineMatrix(std::span<const SparseVector> rows);

// Blocked variant: each block of candidates is checked against the kept set
// concurrently, then conflicts inside the block are resolved in order.
std::vector<bool> NearDuplicateKeep(std::span<const IdSet> sets,
                                    double threshold);

}  // namespace parallel

inline std::vector<double> CosineMatrix(std::span<const SparseVector> rows,
                                        ExecutionPolicy policy) {
  return policy == ExecutionPolicy::kParallel ? parallel::CosineMatrix(rows)
                                              : serial::CosineMatrix(rows);
}

inline std::vector<bool> NearDuplicateKeep(std::span<const IdSet> sets,
                                           double threshold,
                                           ExecutionPolicy policy) {
  return policy == ExecutionPolicy::kParallel
             ? parallel::NearDuplicateKeep(sets, threshold)
             : serial::NearDuplicateKeep(sets, threshold);
}

// Runs fn(i) for i in [0, n). Under kParallel the iterations are spread over
// OpenMP threads, so fn must only write state owned by index i.
template <typename Fn>
void ForEachIndex(std::size_t n, ExecutionPolicy policy, Fn&& fn) {
  if (policy == ExecutionPolicy::kParallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace kernels
}  // namespace conabs

#endif  // CONABS_KERNELS_H_
