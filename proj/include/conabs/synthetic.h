// Seeded generator of annotated crisis-tweet windows with planted facts.
// Fact tweets restate a handful of "<facility> in <place> <verb> , <n>
// <group> <state>" reports with retweet/hashtag/URL decoration; the rest
// are sympathy chatter. Tokens carry POS tags and dependency edges.

#ifndef CONABS_SYNTHETIC_H_
#define CONABS_SYNTHETIC_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "conabs/eval.h"
#include "conabs/ingest.h"
#include "conabs/lexicon.h"

namespace conabs {

struct SyntheticOptions {
  uint64_t seed = 1;
  int num_tweets = 400;
  int num_facts = 8;  // at most 12
  double noise_fraction = 0.6;
  int64_t day_start = 1429920000;  // 2015-04-25 00:00 UTC
  ClassLabel label = ClassLabel::Infrastructure();
};

struct PlantedFact {
  std::string facility, place, verb, verb_lemma, count, group, group_lemma, state,
      state_lemma;

  std::string Sentence() const;
};

struct SyntheticCorpus {
  std::vector<AnnotatedTweet> tweets;
  std::vector<PlantedFact> facts;
  Gazetteer gazetteer;
  // (facility, verb) and (group, state) of every fact.
  std::set<NounEvent> gold_pairs;

  // Fact sentences, one per line.
  std::string Gold() const;
  Window AsWindow() const;
};

// Throws std::invalid_argument for out-of-range options.
SyntheticCorpus GenerateCorpus(const SyntheticOptions& options);

}  // namespace conabs

#endif  // CONABS_SYNTHETIC_H_
