// End-to-end summarization of one (class, day) window: tweet selection,
// word-graph fusion, concept clustering and path selection.

#ifndef CONABS_PIPELINE_H_
#define CONABS_PIPELINE_H_

#include <string>
#include <vector>

#include "conabs/eval.h"
#include "conabs/extractive.h"
#include "conabs/ilp.h"
#include "conabs/ingest.h"
#include "conabs/lexicon.h"
#include "conabs/trigram.h"
#include "conabs/wordgraph.h"

namespace conabs {

struct Config {
  int length = 200;
  int extract_budget = kDefaultExtractBudget;
  double dedup_jaccard = kDefaultDedupJaccard;
  PathOptions paths;
  double damping = 0.9;
  int min_topic_freq = 10;
  double time_limit_seconds = 10.0;
  int64_t work_limit = SolveOptions{}.work_limit;
  bool use_idf = false;
  double edge_threshold = 0.0;
  ExecutionPolicy policy = ExecutionPolicy::kParallel;

  // Throws std::invalid_argument naming the first out-of-range field.
  void Validate() const;
  SolveOptions Solver() const { return {time_limit_seconds, work_limit}; }
};

// Optional inputs owned by the caller.
struct PipelineResources {
  const SimilarityResource* similarity = nullptr;
  const Gazetteer* gazetteer = nullptr;
  // Defaults to a model trained on the window's own tweets.
  const TrigramModel* language_model = nullptr;
};

// Intermediate state, filled when the caller asks for it.
struct PipelineTrace {
  std::vector<AnnotatedTweet> selected_tweets;
  std::vector<TweetPath> paths;
  ConceptClusters concepts;
  ConceptClusters events;
  std::vector<std::string> words;  // ILP word index -> content id
  IlpInstance ilp;
  StageTimings timings;
};

// Summary of at most config.length words. Falls back to extractive
// selection at that budget (fallback = true) when no path survives; an
// empty window yields an empty summary.
Summary ConabsSummarize(const Window& window, const Config& config,
                        const PipelineResources& resources = {},
                        PipelineTrace* trace = nullptr);

// Wall-clock milliseconds of each stage of one ConabsSummarize run.
StageTimings TimePipeline(const Window& window, const Config& config,
                          const PipelineResources& resources = {});

// Random tweets of the window up to `length` words, for comparisons.
Summary RandomSummary(const Window& window, int length, uint64_t seed);

// Deterministic report: window, method, flags, word count, sentences.
std::string SummaryReportJson(const Summary& summary);

}  // namespace conabs

#endif  // CONABS_PIPELINE_H_
