// Sub-topic phrases: (noun, event) pairs tied together inside tweets,
// ranked by how strongly the two words co-occur across the window.

#ifndef CONABS_TOPICS_H_
#define CONABS_TOPICS_H_

#include <set>
#include <string>
#include <vector>

#include "conabs/eval.h"
#include "conabs/extractive.h"
#include "conabs/ingest.h"

namespace conabs {

// Token indices of the tweet's events: the annotated event tokens when
// present, else every VB* token that is not a light verb and is not
// attached to its head as aux, auxpass or cop.
std::vector<int> DetectEvents(const AnnotatedTweet& tweet);

struct AssociationMode {
  enum class Kind { kDependency, kWindow };
  Kind kind = Kind::kDependency;
  int width = 0;

  static AssociationMode Dependency() { return {Kind::kDependency, 0}; }
  static AssociationMode Window(int w) { return {Kind::kWindow, w}; }
};

// Distinct (noun lemma, event lemma) pairs of one tweet, sorted.
// Dependency: a dependency edge joins the noun token and the event token.
// Window(w): the noun lies within w tokens of the event on either side.
// Throws std::invalid_argument in dependency mode when the tweet has no
// dependencies, and for w < 1.
std::vector<NounEvent> Associate(const AnnotatedTweet& tweet, AssociationMode mode);

struct TopicPhrase {
  std::string noun;
  std::string event;
  std::set<std::string> X;  // tweet ids containing the noun
  std::set<std::string> Y;  // tweet ids containing the event
  double overlap = 0.0;
  int support = 0;  // tweets where the pair was associated
};

// |X ∩ Y| / min(|X|, |Y|). Throws std::invalid_argument when a set is empty
// or the intersection exceeds the smaller set.
double OverlapScore(std::size_t x, std::size_t y, std::size_t both);

struct TopicOptions {
  int min_freq = 10;
  AssociationMode mode = AssociationMode::Dependency();
  // Restrict X and Y to tweets where the word took part in some association.
  bool overlap_strict = false;
};

inline constexpr int kDefaultTopicLength = 50;

// Pairs whose noun and event each occur in at least min_freq tweets, by
// descending overlap, then noun, then event. In dependency mode tweets
// without dependencies contribute to X and Y but not to associations.
std::vector<TopicPhrase> MineTopics(const Window& window, const TopicOptions& options = {});

// Extractive summary over the tweets holding both lemmas. Empty, with a
// diagnostic, when no tweet does.
Summary TopicSummary(const Window& window, const TopicPhrase& topic,
                     int length = kDefaultTopicLength,
                     const ExtractiveOptions& options = {});

// [{"noun","event","overlap","support","summary"}, ...]
std::string TopicReportJson(const std::vector<TopicPhrase>& topics,
                            const std::vector<Summary>& summaries);

}  // namespace conabs

#endif  // CONABS_TOPICS_H_
