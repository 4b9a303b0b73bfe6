#include "conabs/extractive.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "conabs/text.h"

namespace conabs {

namespace {

bool HasAlnum(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           (static_cast<unsigned char>(c) & 0x80);
  });
}

}  // namespace

std::string ContentWordKey(const ContentWord& word) {
  switch (word.kind) {
    case ContentWord::Kind::kNumeral:
      return "num:" + word.lemma;
    case ContentWord::Kind::kPlace:
      return "place:" + word.lemma;
    case ContentWord::Kind::kNoun:
      return "noun:" + word.lemma;
    case ContentWord::Kind::kVerb:
      return "verb:" + word.lemma;
  }
  return word.lemma;
}

int TweetLength(const AnnotatedTweet& tweet) {
  int n = 0;
  for (const Token& tok : tweet.tokens) {
    if (!IsUncountedToken(tok.surface) && HasAlnum(tok.surface)) ++n;
  }
  return n;
}

ExtractiveInstance BuildExtractiveInstance(const std::vector<AnnotatedTweet>& tweets,
                                           int budget,
                                           const ExtractiveOptions& options) {
  if (budget < 0) throw std::invalid_argument("extractive budget must be >= 0");
  ExtractiveInstance out;
  out.ilp.budget = budget;

  std::map<std::string, int> word_id;
  std::vector<double> tf;
  std::vector<int> df;
  std::vector<std::vector<int>> tweet_words(tweets.size());
  for (std::size_t t = 0; t < tweets.size(); ++t) {
    std::vector<int>& ids = tweet_words[t];
    for (const Token& tok : tweets[t].tokens) {
      auto word = ClassifyToken(tok, options.gazetteer);
      if (!word) continue;
      auto [it, inserted] =
          word_id.emplace(ContentWordKey(*word), static_cast<int>(word_id.size()));
      if (inserted) {
        tf.push_back(0.0);
        df.push_back(0);
        out.words.push_back(it->first);
      }
      tf[it->second] += 1.0;
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int j : ids) ++df[j];
  }

  out.ilp.num_words = static_cast<int>(word_id.size());
  out.ilp.word_weights.resize(tf.size());
  const double n_docs = static_cast<double>(tweets.size());
  for (std::size_t j = 0; j < tf.size(); ++j) {
    out.ilp.word_weights[j] =
        options.use_idf ? tf[j] * (1.0 + std::log(n_docs / df[j])) : tf[j];
  }
  for (std::size_t t = 0; t < tweets.size(); ++t) {
    const int length = TweetLength(tweets[t]);
    if (length < 1) continue;
    out.ilp.lengths.push_back(length);
    out.ilp.gains.push_back(kTweetEpsilon);
    out.ilp.content.push_back(std::move(tweet_words[t]));
    out.tweet_index.push_back(static_cast<int>(t));
  }
  return out;
}

ExtractiveResult SelectTweets(const Window& window, int budget,
                              const ExtractiveOptions& options) {
  ExtractiveInstance instance =
      BuildExtractiveInstance(window.tweets, budget, options);
  ExtractiveResult result;
  if (budget == 0 || instance.ilp.num_paths() == 0) return result;
  const IlpSolution solution = Solve(instance.ilp, options.solver);
  result.objective = solution.objective;
  result.optimal = solution.optimal;
  std::vector<int> chosen;
  for (int i : solution.Selected()) chosen.push_back(instance.tweet_index[i]);
  std::sort(chosen.begin(), chosen.end(), [&](int a, int b) {
    const AnnotatedTweet& x = window.tweets[a];
    const AnnotatedTweet& y = window.tweets[b];
    if (x.timestamp != y.timestamp) return x.timestamp < y.timestamp;
    return a < b;
  });
  for (int t : chosen) result.tweets.push_back(window.tweets[t]);
  return result;
}

}  // namespace conabs
