#include "conabs/topics.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "conabs/text.h"

namespace conabs {

namespace {

bool IsAuxiliaryLabel(const std::string& label) {
  return label == "aux" || label == "auxpass" || label == "aux:pass" || label == "cop";
}

bool IsTopicNoun(const Token& tok) {
  return IsNounTag(tok.pos) && !IsUncountedToken(tok.surface);
}

std::set<std::string> NounLemmas(const AnnotatedTweet& tweet) {
  std::set<std::string> out;
  for (const Token& tok : tweet.tokens) {
    if (IsTopicNoun(tok)) out.insert(NormalizeLemma(tok.lemma));
  }
  return out;
}

std::set<std::string> EventLemmas(const AnnotatedTweet& tweet) {
  std::set<std::string> out;
  for (int i : DetectEvents(tweet)) out.insert(NormalizeLemma(tweet.tokens[i].lemma));
  return out;
}

bool HasLemma(const AnnotatedTweet& tweet, const std::string& lemma) {
  return std::any_of(tweet.tokens.begin(), tweet.tokens.end(),
                     [&](const Token& t) { return NormalizeLemma(t.lemma) == lemma; });
}

}  // namespace

std::vector<int> DetectEvents(const AnnotatedTweet& tweet) {
  if (tweet.event_tokens) return *tweet.event_tokens;
  std::vector<bool> auxiliary(tweet.tokens.size(), false);
  for (const DepEdge& e : tweet.deps) {
    if (IsAuxiliaryLabel(e.label)) auxiliary[e.dependent] = true;
  }
  std::vector<int> events;
  for (std::size_t i = 0; i < tweet.tokens.size(); ++i) {
    const Token& tok = tweet.tokens[i];
    if (!IsVerbTag(tok.pos) || auxiliary[i]) continue;
    if (IsLightVerb(NormalizeLemma(tok.lemma))) continue;
    events.push_back(static_cast<int>(i));
  }
  return events;
}

std::vector<NounEvent> Associate(const AnnotatedTweet& tweet, AssociationMode mode) {
  const std::vector<int> events = DetectEvents(tweet);
  std::vector<bool> is_event(tweet.tokens.size(), false);
  for (int e : events) is_event[e] = true;
  auto lemma = [&](int i) { return NormalizeLemma(tweet.tokens[i].lemma); };

  std::set<NounEvent> pairs;
  if (mode.kind == AssociationMode::Kind::kDependency) {
    if (tweet.deps.empty()) {
      throw std::invalid_argument("tweet " + tweet.id +
                                  " has no dependencies; use window association");
    }
    for (const DepEdge& e : tweet.deps) {
      for (auto [n, v] : {std::pair{e.head, e.dependent}, std::pair{e.dependent, e.head}}) {
        if (is_event[v] && IsTopicNoun(tweet.tokens[n])) pairs.emplace(lemma(n), lemma(v));
      }
    }
  } else {
    if (mode.width < 1) throw std::invalid_argument("association window must be >= 1");
    const int n = static_cast<int>(tweet.tokens.size());
    for (int v : events) {
      for (int i = std::max(0, v - mode.width); i <= std::min(n - 1, v + mode.width); ++i) {
        if (i != v && IsTopicNoun(tweet.tokens[i])) pairs.emplace(lemma(i), lemma(v));
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

double OverlapScore(std::size_t x, std::size_t y, std::size_t both) {
  const std::size_t smaller = std::min(x, y);
  if (smaller == 0) throw std::invalid_argument("overlap of an empty tweet set");
  if (both > smaller) throw std::invalid_argument("intersection larger than a set");
  return static_cast<double>(both) / static_cast<double>(smaller);
}

std::vector<TopicPhrase> MineTopics(const Window& window, const TopicOptions& options) {
  if (options.min_freq < 1) throw std::invalid_argument("min_freq must be >= 1");
  std::map<std::string, std::set<std::string>> noun_tweets, event_tweets;
  std::map<NounEvent, std::set<std::string>> support;
  for (const AnnotatedTweet& t : window.tweets) {
    std::vector<NounEvent> pairs;
    const bool can_associate =
        options.mode.kind == AssociationMode::Kind::kWindow || !t.deps.empty();
    if (can_associate) pairs = Associate(t, options.mode);
    for (const NounEvent& p : pairs) support[p].insert(t.id);
    if (options.overlap_strict) {
      for (const auto& [n, e] : pairs) {
        noun_tweets[n].insert(t.id);
        event_tweets[e].insert(t.id);
      }
    } else {
      for (const std::string& n : NounLemmas(t)) noun_tweets[n].insert(t.id);
      for (const std::string& e : EventLemmas(t)) event_tweets[e].insert(t.id);
    }
  }

  const auto min_freq = static_cast<std::size_t>(options.min_freq);
  std::vector<TopicPhrase> topics;
  for (const auto& [pair, tweets] : support) {
    const auto& X = noun_tweets[pair.first];
    const auto& Y = event_tweets[pair.second];
    if (X.size() < min_freq || Y.size() < min_freq) continue;
    std::size_t both = 0;
    for (const std::string& id : X) both += Y.count(id);
    TopicPhrase topic{pair.first, pair.second, X, Y,
                      OverlapScore(X.size(), Y.size(), both),
                      static_cast<int>(tweets.size())};
    topics.push_back(std::move(topic));
  }
  std::stable_sort(topics.begin(), topics.end(), [](const TopicPhrase& a, const TopicPhrase& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    if (a.noun != b.noun) return a.noun < b.noun;
    return a.event < b.event;
  });
  return topics;
}

Summary TopicSummary(const Window& window, const TopicPhrase& topic, int length,
                     const ExtractiveOptions& options) {
  Summary summary;
  summary.method = "topic";
  summary.window_id = WindowId(window);
  Window matching{window.class_label, window.start, window.end, {}};
  for (const AnnotatedTweet& t : window.tweets) {
    if (HasLemma(t, topic.noun) && HasLemma(t, topic.event)) matching.tweets.push_back(t);
  }
  if (matching.tweets.empty()) {
    summary.diagnostic = "no tweet contains both '" + topic.noun + "' and '" + topic.event + "'";
    return summary;
  }
  const ExtractiveResult picked = SelectTweets(matching, length, options);
  summary.optimal = picked.optimal;
  for (const AnnotatedTweet& t : picked.tweets) {
    summary.sentences.push_back(t.text);
    summary.token_count += TweetLength(t);
  }
  if (summary.sentences.empty()) {
    summary.diagnostic = "no matching tweet fits in " + std::to_string(length) + " words";
  }
  return summary;
}

std::string TopicReportJson(const std::vector<TopicPhrase>& topics,
                            const std::vector<Summary>& summaries) {
  if (topics.size() != summaries.size()) {
    throw std::invalid_argument("one summary per topic expected");
  }
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < topics.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["noun"] = topics[i].noun;
    entry["event"] = topics[i].event;
    entry["overlap"] = topics[i].overlap;
    entry["support"] = topics[i].support;
    entry["summary"] = summaries[i].Text();
    report.push_back(std::move(entry));
  }
  return report.dump(2);
}

}  // namespace conabs
