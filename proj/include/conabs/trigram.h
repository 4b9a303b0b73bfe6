// Count-based trigram model with stupid-backoff scoring, used for the
// linguistic-quality score of candidate paths.

#ifndef CONABS_TRIGRAM_H_
#define CONABS_TRIGRAM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace conabs {

inline constexpr double kDefaultBackoff = 0.4;

class TrigramModel {
 public:
  // Sentences are padded as <s> <s> w1 .. wn </s>. Throws
  // std::invalid_argument for an empty corpus or alpha outside (0,1).
  static TrigramModel Train(const std::vector<std::vector<std::string>>& sentences,
                            double alpha = kDefaultBackoff);

  // One whitespace-tokenized, lowercased sentence per non-empty line.
  static TrigramModel TrainFromStream(std::istream& in, double alpha = kDefaultBackoff);

  // S(w | u v):
  //   c(uvw)/c(uv.)   if c(uvw) > 0
  //   alpha * S(w|v)  otherwise, with S(w|v) = c(vw)/c(v.) or alpha * S(w)
  //   S(w) = c(w)/N, or 1/(V+1) for unseen words.
  double Score(std::string_view u, std::string_view v, std::string_view w) const;

  // Geometric mean of the per-position scores of w1 .. wn </s>; in (0,1].
  double SentenceScore(const std::vector<std::string>& words) const;

  double alpha() const { return alpha_; }
  std::size_t vocabulary_size() const { return vocab_size_; }
  double unigram_floor() const { return 1.0 / static_cast<double>(vocab_size_ + 1); }

  int64_t TrigramCount(std::string_view u, std::string_view v, std::string_view w) const;
  int64_t BigramCount(std::string_view v, std::string_view w) const;
  int64_t UnigramCount(std::string_view w) const;

  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";

 private:
  static constexpr int kBosId = 0;
  static constexpr int kEosId = 1;
  static constexpr int kUnknownId = -1;

  int IdOf(std::string_view word) const;
  double ScoreIds(int u, int v, int w) const;
  static uint64_t Key(int a, int b) { return (uint64_t(a) << 21) | uint64_t(b); }
  static uint64_t Key(int a, int b, int c) {
    return (uint64_t(a) << 42) | (uint64_t(b) << 21) | uint64_t(c);
  }

  double alpha_ = kDefaultBackoff;
  std::unordered_map<std::string, int> ids_;
  std::vector<int64_t> unigram_;
  std::unordered_map<uint64_t, int64_t> bigram_;
  std::unordered_map<uint64_t, int64_t> trigram_;
  // Number of times a unigram / bigram occurs as a history.
  std::vector<int64_t> history1_;
  std::unordered_map<uint64_t, int64_t> history2_;
  int64_t total_ = 0;
  std::size_t vocab_size_ = 0;
};

}  // namespace conabs

#endif  // CONABS_TRIGRAM_H_
