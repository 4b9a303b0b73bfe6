// Summary value type, ROUGE-1 recall, association precision and the
// per-stage timing record.

#ifndef CONABS_EVAL_H_
#define CONABS_EVAL_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace conabs {

struct Summary {
  std::string method;     // "conabs", "extractive", "topic", "random"
  std::string window_id;  // "<class>/<start>-<end>"
  std::vector<std::string> sentences;
  // Words under the length rule (no #, @mentions, RT, URLs).
  int token_count = 0;
  bool fallback = false;
  bool optimal = true;
  std::string diagnostic;

  // Sentences joined by newlines.
  std::string Text() const;
};

// Count-clipped unigram recall of `candidate` against `gold`, both tokenized
// like ingestion (lowercase, '#' stripped, uncounted tokens dropped).
// Throws std::invalid_argument when gold has no unigrams.
double Rouge1Recall(const std::string& candidate, const std::string& gold);

using NounEvent = std::pair<std::string, std::string>;

// |predicted ∩ gold| / |predicted|. Throws std::invalid_argument for an
// empty prediction.
double AssociationPrecision(const std::set<NounEvent>& predicted,
                            const std::set<NounEvent>& gold);

struct StageTimings {
  // Stage name -> milliseconds, in execution order.
  std::vector<std::pair<std::string, double>> stages;
  double total_ms = 0.0;

  double StageSum() const;
  std::string ToJson() const;
};

}  // namespace conabs

#endif  // CONABS_EVAL_H_
