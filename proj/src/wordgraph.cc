#include "conabs/wordgraph.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "conabs/lexicon.h"
#include "conabs/text.h"

namespace conabs {

namespace {

bool HasAlnum(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           (static_cast<unsigned char>(c) & 0x80);
  });
}

class PathSearch {
 public:
  PathSearch(const WordGraph& graph, const PathOptions& options)
      : graph_(graph), options_(options), visited_(graph.nodes().size(), 0) {
    ordered_.resize(graph.nodes().size());
    for (std::size_t n = 0; n < graph.nodes().size(); ++n) {
      for (const auto& [to, count] : graph.successors(static_cast<int>(n))) {
        ordered_[n].emplace_back(to, count);
      }
      std::stable_sort(ordered_[n].begin(), ordered_[n].end(),
                       [](const auto& a, const auto& b) { return a.second > b.second; });
    }
  }

  void Offer(const std::vector<int>& nodes) {
    if (nodes.empty()) return;
    const int tokens = static_cast<int>(nodes.size()) + 1;
    if (tokens < options_.min_len || tokens > options_.max_len) return;
    TweetPath path;
    bool noun = false, verb = false;
    int64_t weight = graph_.EdgeCount(WordGraph::kStart, nodes.front()) +
                     graph_.EdgeCount(nodes.back(), WordGraph::kEnd);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const WordGraph::Node& node = graph_.nodes()[nodes[k]];
      if (k == 0) path.tokens.push_back(node.first);
      path.tokens.push_back(node.second);
      path.source_tweets.insert(node.sources.begin(), node.sources.end());
      if (k > 0) weight += graph_.EdgeCount(nodes[k - 1], nodes[k]);
    }
    std::set<int> seen;
    for (int n : nodes) {
      if (!seen.insert(n).second) return;  // revisits are not paths
    }
    for (const Token& t : path.tokens) {
      noun = noun || IsNounTag(t.pos);
      verb = verb || IsVerbTag(t.pos);
    }
    if (!noun || !verb) return;
    path.nodes = nodes;
    path.edge_weight = weight;
    std::string text = path.Text();
    auto [it, inserted] = by_text_.emplace(text, found_.size());
    if (inserted) {
      found_.push_back(std::move(path));
    } else if (found_[it->second].edge_weight < path.edge_weight) {
      found_[it->second] = std::move(path);
    }
  }

  void ExploreFrom(int root, int64_t budget) {
    expansions_left_ = budget;
    stack_.clear();
    Descend(root);
  }

  std::size_t size() const { return found_.size(); }
  std::vector<TweetPath> Take() { return std::move(found_); }

 private:
  void Descend(int node) {
    if (expansions_left_-- <= 0) return;
    visited_[node] = 1;
    stack_.push_back(node);
    const int tokens = static_cast<int>(stack_.size()) + 1;
    for (const auto& [next, count] : ordered_[node]) {
      if (expansions_left_ <= 0) break;
      if (next == WordGraph::kEnd) {
        Offer(stack_);
      } else if (!visited_[next] && tokens + 1 <= options_.max_len) {
        Descend(next);
      }
    }
    stack_.pop_back();
    visited_[node] = 0;
  }

  const WordGraph& graph_;
  const PathOptions& options_;
  std::vector<std::vector<std::pair<int, int>>> ordered_;
  std::vector<char> visited_;
  std::vector<int> stack_;
  int64_t expansions_left_ = 0;
  std::map<std::string, std::size_t> by_text_;
  std::vector<TweetPath> found_;
};

}  // namespace

std::vector<Token> GraphTokens(const AnnotatedTweet& tweet) {
  std::vector<Token> out;
  for (const Token& tok : tweet.tokens) {
    if (IsUncountedToken(tok.surface) || !HasAlnum(tok.surface)) continue;
    Token t = tok;
    if (IsHashtag(t.surface)) t.surface.erase(0, 1);
    t.lemma = NormalizeLemma(t.lemma);
    out.push_back(std::move(t));
  }
  return out;
}

int WordGraph::Intern(const BigramKey& key, const Token& a, const Token& b) {
  auto [it, inserted] = index_.emplace(key, static_cast<int>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{key, a, b, {}});
    out_.emplace_back();
  }
  return it->second;
}

WordGraph WordGraph::Build(const std::vector<AnnotatedTweet>& tweets) {
  WordGraph g;
  g.nodes_.resize(2);
  g.out_.resize(2);
  for (const AnnotatedTweet& tweet : tweets) {
    const std::vector<Token> toks = GraphTokens(tweet);
    if (toks.size() < 2) continue;
    std::vector<int> walk{kStart};
    for (std::size_t p = 0; p + 1 < toks.size(); ++p) {
      const BigramKey key{toks[p].lemma, toks[p].pos, toks[p + 1].lemma, toks[p + 1].pos};
      const int id = g.Intern(key, toks[p], toks[p + 1]);
      g.nodes_[id].sources.insert(tweet.id);
      walk.push_back(id);
    }
    walk.push_back(kEnd);
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) ++g.out_[walk[k]][walk[k + 1]];
    g.walks_.emplace_back(tweet.id, std::move(walk));
  }
  if (g.walks_.empty()) {
    throw std::invalid_argument("word graph needs a tweet with at least two words");
  }
  return g;
}

int WordGraph::EdgeCount(int from, int to) const {
  const auto& succ = out_[from];
  auto it = succ.find(to);
  return it == succ.end() ? 0 : it->second;
}

std::optional<int> WordGraph::Find(const BigramKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WordGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& succ : out_) n += succ.size();
  return n;
}

std::string TweetPath::Text() const {
  std::string text;
  for (const Token& t : tokens) {
    if (!text.empty()) text.push_back(' ');
    text += ToLower(t.surface);
  }
  return text;
}

std::vector<std::string> TweetPath::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& t : tokens) words.push_back(ToLower(t.surface));
  return words;
}

std::vector<TweetPath> GeneratePaths(const WordGraph& graph,
                                     const PathOptions& options) {
  if (options.min_len <= 0 || options.min_len > options.max_len) {
    throw std::invalid_argument("path bounds must satisfy 0 < min_len <= max_len");
  }
  PathSearch search(graph, options);
  // Source tweets are walks too. They are offered first and keep their slots
  // when the pool is cut to max_paths, so high-traffic fusions cannot crowd
  // out rarely repeated content.
  for (const auto& [id, walk] : graph.walks()) {
    search.Offer(std::vector<int>(walk.begin() + 1, walk.end() - 1));
  }
  const std::size_t num_originals = search.size();
  const auto& roots = graph.successors(WordGraph::kStart);
  std::vector<std::pair<int, int>> ordered_roots(roots.begin(), roots.end());
  std::stable_sort(ordered_roots.begin(), ordered_roots.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const int64_t share = std::max<int64_t>(
      64, options.max_expansions / std::max<int64_t>(1, ordered_roots.size()));
  for (const auto& [root, count] : ordered_roots) search.ExploreFrom(root, share);

  std::vector<TweetPath> paths = search.Take();
  auto by_weight = [](const TweetPath& a, const TweetPath& b) {
    if (a.edge_weight != b.edge_weight) return a.edge_weight > b.edge_weight;
    return a.Text() < b.Text();
  };
  const auto cut = paths.begin() + static_cast<std::ptrdiff_t>(num_originals);
  std::stable_sort(paths.begin(), cut, by_weight);
  std::stable_sort(cut, paths.end(), by_weight);
  const std::size_t limit = static_cast<std::size_t>(options.max_paths);
  if (paths.size() > limit) paths.resize(limit);
  std::stable_sort(paths.begin(), paths.end(), by_weight);
  return paths;
}

std::vector<std::string> CentroidTerms(const std::vector<Token>& tokens) {
  std::vector<std::string> terms;
  for (const Token& t : tokens) {
    if (auto w = ClassifyToken(t)) terms.push_back(std::move(w->lemma));
  }
  return terms;
}

Centroid Centroid::Build(const std::vector<AnnotatedTweet>& tweets) {
  std::map<std::string, double> tf;
  std::map<std::string, int> df;
  for (const AnnotatedTweet& t : tweets) {
    std::vector<std::string> terms = CentroidTerms(t.tokens);
    for (const std::string& term : terms) tf[term] += 1.0;
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (const std::string& term : terms) ++df[term];
  }
  const double n = static_cast<double>(tweets.size());
  std::map<std::string, double> idf;
  std::map<std::string, double> weights;
  for (const auto& [term, count] : tf) {
    const double value = std::log(1.0 + n / df[term]);
    idf[term] = value;
    weights[term] = count * value;
  }
  return Centroid(std::move(weights), std::move(idf), std::log(1.0 + n));
}

Centroid::Centroid(std::map<std::string, double> weights,
                   std::map<std::string, double> idf, double unseen_idf)
    : weights_(std::move(weights)), idf_(std::move(idf)), unseen_idf_(unseen_idf) {
  double sum = 0.0;
  for (const auto& [term, w] : weights_) sum += w * w;
  norm_ = std::sqrt(sum);
}

double Centroid::Idf(const std::string& term) const {
  auto it = idf_.find(term);
  return it == idf_.end() ? unseen_idf_ : it->second;
}

double Centroid::Cosine(const std::vector<std::string>& terms) const {
  if (norm_ == 0.0 || terms.empty()) return 0.0;
  std::map<std::string, double> tf;
  for (const std::string& t : terms) tf[t] += 1.0;
  double dot = 0.0, sq = 0.0;
  for (const auto& [term, count] : tf) {
    const double w = count * Idf(term);
    sq += w * w;
    if (auto it = weights_.find(term); it != weights_.end()) dot += w * it->second;
  }
  if (sq == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(sq) * norm_), 0.0, 1.0);
}

double Informativeness(const TweetPath& path, const Centroid& centroid) {
  return centroid.Cosine(CentroidTerms(path.tokens));
}

double LinguisticQuality(const TweetPath& path, const TrigramModel& model) {
  return model.SentenceScore(path.Words());
}

void ScorePaths(std::vector<TweetPath>& paths, const Centroid& centroid,
                const TrigramModel& model, ExecutionPolicy policy) {
  kernels::ForEachIndex(paths.size(), policy, [&](std::size_t i) {
    paths[i].informativeness = Informativeness(paths[i], centroid);
    paths[i].linguistic_quality = LinguisticQuality(paths[i], model);
  });
}

std::vector<std::vector<std::string>> LanguageModelCorpus(
    const std::vector<AnnotatedTweet>& tweets) {
  std::vector<std::vector<std::string>> corpus;
  corpus.reserve(tweets.size());
  for (const AnnotatedTweet& t : tweets) {
    std::vector<std::string> words;
    for (const Token& tok : GraphTokens(t)) words.push_back(ToLower(tok.surface));
    if (!words.empty()) corpus.push_back(std::move(words));
  }
  return corpus;
}

}  // namespace conabs
