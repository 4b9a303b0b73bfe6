#include "conabs/kernels.h"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace conabs {

namespace {

bool IsNearDuplicate(std::size_t intersection, std::size_t size_a,
                     std::size_t size_b, double threshold) {
  const std::size_t uni = size_a + size_b - intersection;
  if (uni == 0) return false;
  return static_cast<double>(intersection) / static_cast<double>(uni) >=
         threshold;
}

std::size_t IntersectionSize(const IdSet& a, const IdSet& b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

double CosineEntry(const SparseVector& a, const SparseVector& b, double norm_a,
                   double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return std::clamp(Dot(a, b) / (norm_a * norm_b), 0.0, 1.0);
}

std::vector<double> Norms(std::span<const SparseVector> rows) {
  std::vector<double> norms(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) norms[i] = rows[i].Norm();
  return norms;
}

// Posting lists of kept items plus a reusable hit counter.
class KeptIndex {
 public:
  explicit KeptIndex(std::span<const IdSet> sets) : sets_(sets) {
    int max_id = -1;
    for (const IdSet& s : sets) {
      if (!s.empty()) max_id = std::max(max_id, s.back());
    }
    postings_.resize(static_cast<std::size_t>(max_id + 1));
  }

  void Add(std::size_t item) {
    for (int w : sets_[item]) postings_[w].push_back(static_cast<int>(item));
  }

  // True if some indexed item is a near duplicate of `item`. `counts` must be
  // zero-filled with sets_.size() slots; it is restored before returning.
  bool HasNearDuplicate(std::size_t item, double threshold,
                        std::vector<int>& counts,
                        std::vector<int>& touched) const {
    const IdSet& s = sets_[item];
    touched.clear();
    for (int w : s) {
      for (int other : postings_[w]) {
        if (counts[other]++ == 0) touched.push_back(other);
      }
    }
    bool found = false;
    for (int other : touched) {
      if (!found && IsNearDuplicate(counts[other], s.size(),
                                    sets_[other].size(), threshold)) {
        found = true;
      }
      counts[other] = 0;
    }
    return found;
  }

 private:
  std::span<const IdSet> sets_;
  std::vector<std::vector<int>> postings_;
};

}  // namespace

double SparseVector::Norm() const {
  double sum = 0.0;
  for (double v : value) sum += v * v;
  return std::sqrt(sum);
}

double Dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.index.size() && j < b.index.size()) {
    if (a.index[i] == b.index[j]) {
      sum += a.value[i] * b.value[j];
      ++i;
      ++j;
    } else if (a.index[i] < b.index[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double Jaccard(const IdSet& a, const IdSet& b) {
  const std::size_t inter = IntersectionSize(a, b);
  const std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

namespace kernels {

namespace serial {

std::vector<double> CosineMatrix(std::span<const SparseVector> rows) {
  const std::size_t n = rows.size();
  const std::vector<double> norms = Norms(rows);
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = norms[i] > 0.0 ? 1.0 : 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = CosineEntry(rows[i], rows[j], norms[i], norms[j]);
      out[i * n + j] = c;
      out[j * n + i] = c;
    }
  }
  return out;
}

std::vector<bool> NearDuplicateKeep(std::span<const IdSet> sets,
                                    double threshold) {
  std::vector<bool> keep(sets.size(), false);
  KeptIndex index(sets);
  std::vector<int> counts(sets.size(), 0);
  std::vector<int> touched;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!index.HasNearDuplicate(i, threshold, counts, touched)) {
      keep[i] = true;
      index.Add(i);
    }
  }
  return keep;
}

}  // namespace serial

namespace parallel {

std::vector<double> CosineMatrix(std::span<const SparseVector> rows) {
  const long long n = static_cast<long long>(rows.size());
  const std::vector<double> norms = Norms(rows);
  std::vector<double> out(rows.size() * rows.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    out[i * n + i] = norms[i] > 0.0 ? 1.0 : 0.0;
    for (long long j = i + 1; j < n; ++j) {
      const double c = CosineEntry(rows[i], rows[j], norms[i], norms[j]);
      out[i * n + j] = c;
      out[j * n + i] = c;
    }
  }
  return out;
}

std::vector<bool> NearDuplicateKeep(std::span<const IdSet> sets,
                                    double threshold) {
  constexpr std::size_t kBlock = 256;
  const std::size_t n = sets.size();
  std::vector<bool> keep(n, false);
  KeptIndex index(sets);
  std::vector<char> clashes_with_kept(kBlock);
  std::vector<std::size_t> block_kept;

  for (std::size_t begin = 0; begin < n; begin += kBlock) {
    const std::size_t end = std::min(n, begin + kBlock);
    const long long width = static_cast<long long>(end - begin);
#pragma omp parallel
    {
      std::vector<int> counts(n, 0);
      std::vector<int> touched;
#pragma omp for schedule(dynamic, 16)
      for (long long k = 0; k < width; ++k) {
        clashes_with_kept[k] = index.HasNearDuplicate(
            begin + static_cast<std::size_t>(k), threshold, counts, touched);
      }
    }
    block_kept.clear();
    for (std::size_t i = begin; i < end; ++i) {
      if (clashes_with_kept[i - begin]) continue;
      bool clash = false;
      for (std::size_t j : block_kept) {
        if (IsNearDuplicate(IntersectionSize(sets[i], sets[j]), sets[i].size(),
                            sets[j].size(), threshold)) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        keep[i] = true;
        block_kept.push_back(i);
      }
    }
    for (std::size_t i : block_kept) index.Add(i);
  }
  return keep;
}

}  // namespace parallel
}  // namespace kernels
}  // namespace conabs
