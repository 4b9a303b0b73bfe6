// POS-aware bigram word graph over selected tweets and the fused candidate
// sentences ("tweet paths") read off it.
//
// Every node is a pair of consecutive (lemma, POS) tokens; two tweet
// positions share a node only when both lemmas and both tags agree, so
// tweets fuse where they say the same thing in the same grammatical role.

#ifndef CONABS_WORDGRAPH_H_
#define CONABS_WORDGRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "conabs/ingest.h"
#include "conabs/kernels.h"
#include "conabs/trigram.h"

namespace conabs {

struct BigramKey {
  std::string lemma1, pos1, lemma2, pos2;
  auto operator<=>(const BigramKey&) const = default;
};

// Tokens a tweet contributes to the graph: words with a letter or digit,
// without mentions, RT markers and URLs; hashtags lose their '#'.
std::vector<Token> GraphTokens(const AnnotatedTweet& tweet);

class WordGraph {
 public:
  static constexpr int kStart = 0;
  static constexpr int kEnd = 1;

  struct Node {
    BigramKey key;
    // Representative tokens, taken from the first tweet that created the node.
    Token first;
    Token second;
    std::set<std::string> sources;  // tweet ids
  };

  // Throws std::invalid_argument when no tweet has two graph tokens.
  static WordGraph Build(const std::vector<AnnotatedTweet>& tweets);

  const std::vector<Node>& nodes() const { return nodes_; }
  // Successor -> traversal count, ordered by successor id.
  const std::map<int, int>& successors(int node) const { return out_[node]; }
  int EdgeCount(int from, int to) const;
  std::optional<int> Find(const BigramKey& key) const;

  // Node walk (START .. END) of every tweet that entered the graph.
  const std::vector<std::pair<std::string, std::vector<int>>>& walks() const {
    return walks_;
  }
  std::size_t num_edges() const;

 private:
  int Intern(const BigramKey& key, const Token& a, const Token& b);

  std::vector<Node> nodes_;
  std::map<BigramKey, int> index_;
  std::vector<std::map<int, int>> out_;
  std::vector<std::pair<std::string, std::vector<int>>> walks_;
};

struct TweetPath {
  std::vector<Token> tokens;
  std::vector<int> nodes;  // excludes START and END
  std::set<std::string> source_tweets;
  int64_t edge_weight = 0;  // sum of traversed edge counts
  double informativeness = 0.0;
  double linguistic_quality = 0.0;
  // Content-word ids: "num:7.9", "place:kathmandu", "concept:<exemplar>",
  // "event:<exemplar>".
  std::vector<std::string> content_words;

  // Lowercased surfaces joined by single spaces.
  std::string Text() const;
  std::vector<std::string> Words() const;
  int Length() const { return static_cast<int>(tokens.size()); }
};

struct PathOptions {
  int min_len = 5;
  int max_len = 25;
  int max_paths = 500;
  // Deterministic cap on DFS node expansions.
  int64_t max_expansions = 200'000;
};

// Depth-bounded START->END walks without node revisits that have between
// min_len and max_len tokens and contain a noun and a verb. Duplicate texts
// are merged. When more than max_paths qualify, the source tweets' own walks
// are kept first and fused paths fill the rest by edge weight. Ordered by
// descending edge weight, then text.
std::vector<TweetPath> GeneratePaths(const WordGraph& graph,
                                     const PathOptions& options = {});

// tf-idf centroid of a window: weight(t) = tf(t) * ln(1 + N/df(t)) over
// content-word lemmas.
class Centroid {
 public:
  Centroid() = default;
  static Centroid Build(const std::vector<AnnotatedTweet>& tweets);
  // Explicit weights and idf values; terms missing from `idf` get
  // `unseen_idf`.
  Centroid(std::map<std::string, double> weights,
           std::map<std::string, double> idf, double unseen_idf);

  double Idf(const std::string& term) const;
  double Norm() const { return norm_; }
  const std::map<std::string, double>& weights() const { return weights_; }

  // Cosine between the term-frequency * idf vector of `terms` and the
  // centroid, clamped to [0,1]; 0 for a zero centroid or empty vector.
  double Cosine(const std::vector<std::string>& terms) const;

 private:
  std::map<std::string, double> weights_;
  std::map<std::string, double> idf_;
  double unseen_idf_ = 0.0;
  double norm_ = 0.0;
};

// Content-word lemmas of a token sequence (the centroid's term space).
std::vector<std::string> CentroidTerms(const std::vector<Token>& tokens);

double Informativeness(const TweetPath& path, const Centroid& centroid);
double LinguisticQuality(const TweetPath& path, const TrigramModel& model);

// Fills informativeness and linguistic_quality of every path.
void ScorePaths(std::vector<TweetPath>& paths, const Centroid& centroid,
                const TrigramModel& model,
                ExecutionPolicy policy = ExecutionPolicy::kParallel);

// Lowercased graph-token sequences, the default trigram training corpus.
std::vector<std::vector<std::string>> LanguageModelCorpus(
    const std::vector<AnnotatedTweet>& tweets);

}  // namespace conabs

#endif  // CONABS_WORDGRAPH_H_
