#include "conabs/lexicon.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "conabs/ingest.h"
#include "conabs/text.h"

namespace conabs {

std::optional<ContentWord> ClassifyToken(const Token& tok,
                                         const Gazetteer* gazetteer) {
  if (IsUncountedToken(tok.surface)) return std::nullopt;
  std::string lemma = NormalizeLemma(tok.lemma);
  if (lemma.empty()) return std::nullopt;
  if (IsCardinalTag(tok.pos)) {
    return ContentWord{std::move(lemma), ContentWord::Kind::kNumeral};
  }
  if (IsNounTag(tok.pos)) {
    const bool place = IsProperNounTag(tok.pos) && gazetteer != nullptr &&
                       gazetteer->contains(lemma);
    return ContentWord{std::move(lemma),
                       place ? ContentWord::Kind::kPlace : ContentWord::Kind::kNoun};
  }
  if (IsVerbTag(tok.pos) && !IsLightVerb(lemma)) {
    return ContentWord{std::move(lemma), ContentWord::Kind::kVerb};
  }
  return std::nullopt;
}

std::set<ContentWord> ExtractContentWords(const AnnotatedTweet& tweet,
                                          const Gazetteer* gazetteer) {
  std::set<ContentWord> words;
  for (const Token& tok : tweet.tokens) {
    if (auto w = ClassifyToken(tok, gazetteer)) words.insert(std::move(*w));
  }
  return words;
}

void SimilarityResource::Add(const std::string& a, const std::string& b,
                             double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw InputError("similarity score outside [0,1] for (" + a + "," + b + ")");
  }
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto [it, inserted] = scores_.emplace(std::move(key), score);
  if (!inserted && it->second != score) {
    throw InputError("conflicting similarity scores for (" + a + "," + b + ")");
  }
}

std::optional<double> SimilarityResource::Find(const std::string& a,
                                               const std::string& b) const {
  if (a == b) return 1.0;
  auto it = scores_.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == scores_.end()) return std::nullopt;
  return it->second;
}

SimilarityResource SimilarityResource::LoadTsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open similarity file: " + path);
  SimilarityResource resource;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected 3 tab-separated fields");
    }
    double score = 0.0;
    try {
      std::size_t used = 0;
      score = std::stod(line.substr(tab2 + 1), &used);
      if (used != line.size() - tab2 - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError(path + ":" + std::to_string(line_no) + ": bad score");
    }
    resource.Add(ToLower(line.substr(0, tab1)),
                 ToLower(line.substr(tab1 + 1, tab2 - tab1 - 1)), score);
  }
  return resource;
}

SimilarityTable::SimilarityTable(std::vector<std::string> vocab,
                                 std::vector<double> scores)
    : vocab_(std::move(vocab)), scores_(std::move(scores)) {
  const std::size_t n = vocab_.size();
  if (scores_.size() != n * n) {
    throw std::invalid_argument("similarity matrix size does not match vocabulary");
  }
  if (!std::is_sorted(vocab_.begin(), vocab_.end()) ||
      std::adjacent_find(vocab_.begin(), vocab_.end()) != vocab_.end()) {
    throw std::invalid_argument("similarity vocabulary must be sorted and unique");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double s = scores_[i * n + j];
      if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument("similarity score outside [0,1]");
      }
      if (s != scores_[j * n + i]) {
        throw std::invalid_argument("similarity table is not symmetric: (" +
                                    vocab_[i] + "," + vocab_[j] + ")");
      }
    }
  }
}

std::optional<std::size_t> SimilarityTable::IndexOf(const std::string& lemma) const {
  auto it = std::lower_bound(vocab_.begin(), vocab_.end(), lemma);
  if (it == vocab_.end() || *it != lemma) return std::nullopt;
  return static_cast<std::size_t>(it - vocab_.begin());
}

double SimilarityTable::Score(const std::string& a, const std::string& b) const {
  auto i = IndexOf(a);
  auto j = IndexOf(b);
  if (!i || !j) return 0.0;
  return at(*i, *j);
}

namespace {

// PPMI rows for `vocab` against every content lemma of the window.
std::vector<SparseVector> PpmiRows(const std::vector<std::string>& vocab,
                                   const Window& window) {
  std::map<std::string, int> context_id;
  std::vector<std::vector<int>> tweet_contexts;
  tweet_contexts.reserve(window.tweets.size());
  for (const AnnotatedTweet& t : window.tweets) {
    std::vector<int> ids;
    for (const ContentWord& w : ExtractContentWords(t)) {
      auto [it, inserted] = context_id.emplace(w.lemma, static_cast<int>(context_id.size()));
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    tweet_contexts.push_back(std::move(ids));
  }

  std::vector<int> row_of_context(context_id.size(), -1);
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    if (auto it = context_id.find(vocab[r]); it != context_id.end()) {
      row_of_context[it->second] = static_cast<int>(r);
    }
  }

  std::vector<double> marginal(context_id.size(), 0.0);
  std::vector<std::map<int, double>> counts(vocab.size());
  double total = 0.0;
  for (const std::vector<int>& ids : tweet_contexts) {
    const double others = static_cast<double>(ids.size()) - 1.0;
    if (others <= 0.0) continue;
    total += others * static_cast<double>(ids.size());
    for (int w : ids) {
      marginal[w] += others;
      const int row = row_of_context[w];
      if (row < 0) continue;
      for (int c : ids) {
        if (c != w) counts[row][c] += 1.0;
      }
    }
  }

  std::vector<SparseVector> rows(vocab.size());
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    const int w = context_id.contains(vocab[r]) ? context_id.at(vocab[r]) : -1;
    for (const auto& [c, n] : counts[r]) {
      const double pmi = std::log(n * total / (marginal[w] * marginal[c]));
      if (pmi > 0.0) {
        rows[r].index.push_back(c);
        rows[r].value.push_back(pmi);
      }
    }
  }
  return rows;
}

}  // namespace

SimilarityTable ComputeSimilarity(const std::set<std::string>& vocab_set,
                                  const SimilarityResource* resource,
                                  const Window& window,
                                  const SimilarityOptions& options) {
  if (vocab_set.empty()) throw std::invalid_argument("similarity over empty vocabulary");
  std::vector<std::string> vocab(vocab_set.begin(), vocab_set.end());
  const std::size_t n = vocab.size();
  std::vector<double> scores(n * n, 0.0);
  if (resource != nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double s = resource->Find(vocab[i], vocab[j]).value_or(0.0);
        scores[i * n + j] = s;
        scores[j * n + i] = s;
      }
    }
  } else {
    const std::vector<SparseVector> rows = PpmiRows(vocab, window);
    scores = kernels::CosineMatrix(rows, options.policy);
  }
  for (std::size_t i = 0; i < n; ++i) {
    scores[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && scores[i * n + j] < options.edge_threshold) scores[i * n + j] = 0.0;
    }
  }
  return SimilarityTable(std::move(vocab), std::move(scores));
}

ConceptClusters AffinityPropagation(const SimilarityTable& table,
                                    const AffinityOptions& options,
                                    ContentWord::Kind kind) {
  if (!(options.damping >= 0.5 && options.damping < 1.0)) {
    throw std::invalid_argument("affinity damping must lie in [0.5, 1)");
  }
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table.at(i, j) != table.at(j, i)) {
        throw std::invalid_argument("similarity table is not symmetric");
      }
    }
  }

  ConceptClusters result;
  result.kind = kind;
  const std::vector<std::string>& vocab = table.vocab();
  std::vector<std::size_t> exemplar(n);

  if (n == 1) {
    exemplar[0] = 0;
  } else {
    double preference = 0.0;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    {
      std::vector<double> off;
      off.reserve(n * (n - 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) off.push_back(table.at(i, j));
        }
      }
      lo = *std::min_element(off.begin(), off.end());
      hi = *std::max_element(off.begin(), off.end());
      if (options.preference) {
        preference = *options.preference;
      } else {
        const std::size_t mid = off.size() / 2;
        std::nth_element(off.begin(), off.begin() + mid, off.end());
        preference = off[mid];
        if (off.size() % 2 == 0) {
          const double upper = off[mid];
          const double lower = *std::max_element(off.begin(), off.begin() + mid);
          preference = 0.5 * (lower + upper);
        }
      }
    }

    // Column-wise bias: equal candidates favour the lexicographically
    // smaller lemma, which also breaks the symmetric oscillation of exact ties.
    const double bias = 1e-6 * std::max(1.0, hi - lo);
    std::vector<double> s(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const double base = i == k ? preference : table.at(i, k);
        s[i * n + k] = base - bias * static_cast<double>(k) / static_cast<double>(n);
      }
    }

    std::vector<double> r(n * n, 0.0), a(n * n, 0.0);
    std::vector<char> is_exemplar(n, 0), previous(n, 0);
    int stable = 0;
    const double lambda = options.damping;
    // Under heavy damping the exemplar set can sit still for many rounds
    // while the messages are still drifting, so a stable set alone does not
    // end the run; the messages must have settled too.
    const double tolerance = 1e-9 * std::max(1.0, hi - lo);
    for (int iter = 0; iter < options.max_iter; ++iter) {
      double change = 0.0;
      // Responsibilities.
      for (std::size_t i = 0; i < n; ++i) {
        double best = -std::numeric_limits<double>::infinity(), second = best;
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const double v = a[i * n + k] + s[i * n + k];
          if (v > best) {
            second = best;
            best = v;
            best_k = k;
          } else if (v > second) {
            second = v;
          }
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double competitor = k == best_k ? second : best;
          const double updated = s[i * n + k] - competitor;
          const double next = lambda * r[i * n + k] + (1.0 - lambda) * updated;
          change = std::max(change, std::abs(next - r[i * n + k]));
          r[i * n + k] = next;
        }
      }
      // Availabilities.
      for (std::size_t k = 0; k < n; ++k) {
        double positive_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != k) positive_sum += std::max(0.0, r[i * n + k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
          double updated;
          if (i == k) {
            updated = positive_sum;
          } else {
            updated = std::min(0.0, r[k * n + k] + positive_sum -
                                        std::max(0.0, r[i * n + k]));
          }
          const double next = lambda * a[i * n + k] + (1.0 - lambda) * updated;
          change = std::max(change, std::abs(next - a[i * n + k]));
          a[i * n + k] = next;
        }
      }
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        is_exemplar[k] = (a[k * n + k] + r[k * n + k]) > 0.0;
        any = any || is_exemplar[k];
      }
      stable = (any && is_exemplar == previous) ? stable + 1 : 0;
      previous = is_exemplar;
      if (stable >= options.convergence_iter && change < tolerance) break;
    }

    std::vector<std::size_t> exemplars;
    for (std::size_t k = 0; k < n; ++k) {
      if (is_exemplar[k]) exemplars.push_back(k);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (exemplars.empty() || is_exemplar[i]) {
        // No exemplar emerged (e.g. all off-diagonal similarities equal to
        // the preference): every word stays its own concept.
        exemplar[i] = i;
        continue;
      }
      std::size_t best = exemplars.front();
      for (std::size_t k : exemplars) {
        if (s[i * n + k] > s[i * n + best]) best = k;
      }
      // A word with no similarity to any exemplar is unrelated to all of
      // them; it stays a concept of its own instead of joining one at random.
      exemplar[i] = table.at(i, best) > 0.0 ? best : i;
    }
  }

  std::map<std::size_t, ConceptClusters::Cluster> by_exemplar;
  for (std::size_t i = 0; i < n; ++i) {
    auto& cluster = by_exemplar[exemplar[i]];
    cluster.exemplar = vocab[exemplar[i]];
    cluster.members.insert(vocab[i]);
    result.exemplar_of[vocab[i]] = vocab[exemplar[i]];
  }
  for (auto& [k, cluster] : by_exemplar) result.clusters.push_back(std::move(cluster));
  return result;
}

std::string ClusterOf(const std::string& lemma,
                      const ConceptClusters& clusters) {
  auto it = clusters.exemplar_of.find(lemma);
  return it == clusters.exemplar_of.end() ? lemma : it->second;
}

Gazetteer LoadGazetteer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open gazetteer: " + path);
  Gazetteer places;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) places.insert(ToLower(line));
  }
  return places;
}

}  // namespace conabs
