// Content words, noun/verb similarity tables and affinity-propagation
// clustering of words into concepts (nouns) and events (verbs).

#ifndef CONABS_LEXICON_H_
#define CONABS_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "conabs/kernels.h"

namespace conabs {

struct AnnotatedTweet;
struct Window;

using Gazetteer = std::unordered_set<std::string>;

struct ContentWord {
  enum class Kind { kNumeral, kPlace, kNoun, kVerb };

  std::string lemma;
  Kind kind = Kind::kNoun;

  auto operator<=>(const ContentWord&) const = default;
};

struct Token;

// Content-word reading of one token, if it has one.
std::optional<ContentWord> ClassifyToken(const Token& token,
                                         const Gazetteer* gazetteer = nullptr);

// Nouns (NN*), non-light verbs (VB*) and cardinals (CD). Proper nouns listed
// in the gazetteer become places. Mentions, URLs and RT markers are skipped;
// hashtag lemmas lose their '#'.
std::set<ContentWord> ExtractContentWords(const AnnotatedTweet& tweet,
                                          const Gazetteer* gazetteer = nullptr);

// Sparse (lemma, lemma) -> score store as read from a similarity TSV.
class SimilarityResource {
 public:
  // Rejects scores outside [0,1] and conflicting duplicates of a pair.
  void Add(const std::string& a, const std::string& b, double score);
  std::optional<double> Find(const std::string& a, const std::string& b) const;
  std::size_t size() const { return scores_.size(); }

  // `lemma1<TAB>lemma2<TAB>score` per line. Throws InputError.
  static SimilarityResource LoadTsv(const std::string& path);

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

// Dense symmetric similarity over a sorted vocabulary; sim(a,a) = 1.
class SimilarityTable {
 public:
  SimilarityTable() = default;
  // `vocab` must be sorted and unique; `scores` is row-major |vocab|^2.
  // Throws std::invalid_argument for non-symmetric or out-of-range scores.
  SimilarityTable(std::vector<std::string> vocab, std::vector<double> scores);

  const std::vector<std::string>& vocab() const { return vocab_; }
  std::size_t size() const { return vocab_.size(); }
  double at(std::size_t i, std::size_t j) const { return scores_[i * vocab_.size() + j]; }
  // 0 for pairs outside the vocabulary.
  double Score(const std::string& a, const std::string& b) const;
  std::optional<std::size_t> IndexOf(const std::string& lemma) const;
  const std::vector<double>& raw() const { return scores_; }

 private:
  std::vector<std::string> vocab_;
  std::vector<double> scores_;
};

struct SimilarityOptions {
  // Scores below this become 0; 0 keeps the complete graph.
  double edge_threshold = 0.0;
  ExecutionPolicy policy = ExecutionPolicy::kParallel;
};

// With a resource: the resource restricted to vocab. Without: cosine of PPMI
// co-occurrence vectors (tweet-level co-occurrence with the window's content
// lemmas). Throws std::invalid_argument for an empty vocabulary.
SimilarityTable ComputeSimilarity(const std::set<std::string>& vocab,
                                  const SimilarityResource* resource,
                                  const Window& window,
                                  const SimilarityOptions& options = {});

struct ConceptClusters {
  struct Cluster {
    std::string exemplar;
    std::set<std::string> members;
  };
  ContentWord::Kind kind = ContentWord::Kind::kNoun;
  std::vector<Cluster> clusters;  // ordered by exemplar
  std::map<std::string, std::string> exemplar_of;
};

struct AffinityOptions {
  double damping = 0.9;
  std::optional<double> preference;  // unset: median off-diagonal similarity
  int max_iter = 1000;
  // Stop once the exemplar set has held this many rounds and no message
  // moved by more than 1e-6 of the similarity range.
  int convergence_iter = 10;
};

// Frey-Dueck responsibility/availability message passing. Exemplar ties are
// broken toward the lexicographically smaller lemma.
ConceptClusters AffinityPropagation(const SimilarityTable& table,
                                    const AffinityOptions& options = {},
                                    ContentWord::Kind kind = ContentWord::Kind::kNoun);

// Exemplar of the cluster holding `lemma`; unknown lemmas map to themselves.
std::string ClusterOf(const std::string& lemma,
                      const ConceptClusters& clusters);

Gazetteer LoadGazetteer(const std::string& path);

}  // namespace conabs

#endif  // CONABS_LEXICON_H_
