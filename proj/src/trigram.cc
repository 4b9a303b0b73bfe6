#include "conabs/trigram.h"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "conabs/text.h"

namespace conabs {

namespace {

constexpr int kMaxVocabulary = (1 << 21) - 1;

}  // namespace

TrigramModel TrigramModel::Train(const std::vector<std::vector<std::string>>& sentences,
                                 double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("backoff factor must lie in (0,1)");
  }
  TrigramModel m;
  m.alpha_ = alpha;
  m.ids_.emplace(std::string(kBos), kBosId);
  m.ids_.emplace(std::string(kEos), kEosId);
  m.unigram_.assign(2, 0);
  m.history1_.assign(2, 0);

  bool any = false;
  std::vector<int> seq;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    any = true;
    seq.assign({kBosId, kBosId});
    for (const std::string& word : sentence) {
      auto [it, inserted] = m.ids_.emplace(word, static_cast<int>(m.ids_.size()));
      if (inserted) {
        if (it->second > kMaxVocabulary) {
          throw std::invalid_argument("trigram vocabulary too large");
        }
        m.unigram_.push_back(0);
        m.history1_.push_back(0);
      }
      seq.push_back(it->second);
    }
    seq.push_back(kEosId);
    for (std::size_t p = 2; p < seq.size(); ++p) {
      const int u = seq[p - 2], v = seq[p - 1], w = seq[p];
      ++m.unigram_[w];
      ++m.total_;
      ++m.bigram_[Key(v, w)];
      ++m.history1_[v];
      ++m.trigram_[Key(u, v, w)];
      ++m.history2_[Key(u, v)];
    }
  }
  if (!any) throw std::invalid_argument("trigram model needs a non-empty corpus");
  // <s> is never predicted, so it is not part of the vocabulary.
  m.vocab_size_ = m.ids_.size() - 1;
  return m;
}

TrigramModel TrigramModel::TrainFromStream(std::istream& in, double alpha) {
  std::vector<std::vector<std::string>> sentences;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(ToLower(line));
    std::vector<std::string> sentence;
    for (std::string w; words >> w;) sentence.push_back(std::move(w));
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  return Train(sentences, alpha);
}

int TrigramModel::IdOf(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnknownId : it->second;
}

double TrigramModel::ScoreIds(int u, int v, int w) const {
  if (w == kUnknownId || unigram_[w] == 0) return unigram_floor();
  if (u != kUnknownId && v != kUnknownId) {
    if (auto it = trigram_.find(Key(u, v, w)); it != trigram_.end()) {
      return static_cast<double>(it->second) /
             static_cast<double>(history2_.at(Key(u, v)));
    }
  }
  double scale = alpha_;
  if (v != kUnknownId) {
    if (auto it = bigram_.find(Key(v, w)); it != bigram_.end()) {
      return scale * static_cast<double>(it->second) /
             static_cast<double>(history1_[v]);
    }
  }
  scale *= alpha_;
  return scale * static_cast<double>(unigram_[w]) / static_cast<double>(total_);
}

double TrigramModel::Score(std::string_view u, std::string_view v,
                           std::string_view w) const {
  return ScoreIds(IdOf(u), IdOf(v), IdOf(w));
}

double TrigramModel::SentenceScore(const std::vector<std::string>& words) const {
  int u = kBosId, v = kBosId;
  double log_sum = 0.0;
  for (const std::string& word : words) {
    const int w = IdOf(word);
    log_sum += std::log(ScoreIds(u, v, w));
    u = v;
    v = w;
  }
  log_sum += std::log(ScoreIds(u, v, kEosId));
  const double mean = log_sum / static_cast<double>(words.size() + 1);
  return std::min(1.0, std::exp(mean));
}

int64_t TrigramModel::TrigramCount(std::string_view u, std::string_view v,
                                   std::string_view w) const {
  const int a = IdOf(u), b = IdOf(v), c = IdOf(w);
  if (a == kUnknownId || b == kUnknownId || c == kUnknownId) return 0;
  auto it = trigram_.find(Key(a, b, c));
  return it == trigram_.end() ? 0 : it->second;
}

int64_t TrigramModel::BigramCount(std::string_view v, std::string_view w) const {
  const int b = IdOf(v), c = IdOf(w);
  if (b == kUnknownId || c == kUnknownId) return 0;
  auto it = bigram_.find(Key(b, c));
  return it == bigram_.end() ? 0 : it->second;
}

int64_t TrigramModel::UnigramCount(std::string_view w) const {
  const int c = IdOf(w);
  return c == kUnknownId ? 0 : unigram_[c];
}

}  // namespace conabs
