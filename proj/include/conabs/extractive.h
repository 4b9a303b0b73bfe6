// First-stage tweet selection: budgeted content-word coverage solved with the
// same 0-1 program as path selection, tweets standing in for paths.

#ifndef CONABS_EXTRACTIVE_H_
#define CONABS_EXTRACTIVE_H_

#include <string>
#include <vector>

#include "conabs/ilp.h"
#include "conabs/ingest.h"
#include "conabs/lexicon.h"

namespace conabs {

inline constexpr int kDefaultExtractBudget = 1000;
// Per-tweet objective term. Far below any word weight, so it only decides
// between equal coverage: leftover budget is spent on further tweets, which
// repeat the covered content and give the word graph more to fuse.
inline constexpr double kTweetEpsilon = 1e-3;

struct ExtractiveOptions {
  // Weight words by tf * (1 + ln(N/df)) instead of raw tf.
  bool use_idf = false;
  const Gazetteer* gazetteer = nullptr;
  SolveOptions solver;
};

// Words counted toward a summary budget: tokens with at least one letter or
// digit, excluding mentions, RT markers and URLs.
int TweetLength(const AnnotatedTweet& tweet);

struct ExtractiveInstance {
  IlpInstance ilp;
  // Window index of each ILP item (tweets with zero length are skipped).
  std::vector<int> tweet_index;
  // Content-word key ("noun:airport") of each ILP word.
  std::vector<std::string> words;
};

ExtractiveInstance BuildExtractiveInstance(const std::vector<AnnotatedTweet>& tweets,
                                           int budget,
                                           const ExtractiveOptions& options = {});

struct ExtractiveResult {
  std::vector<AnnotatedTweet> tweets;  // timestamp order
  double objective = 0.0;
  bool optimal = true;
};

// Throws std::invalid_argument for a negative budget.
ExtractiveResult SelectTweets(const Window& window, int budget,
                              const ExtractiveOptions& options = {});

std::string ContentWordKey(const ContentWord& word);

}  // namespace conabs

#endif  // CONABS_EXTRACTIVE_H_
