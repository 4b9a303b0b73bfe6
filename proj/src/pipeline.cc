#include "conabs/pipeline.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace conabs {

namespace {

class StageClock {
 public:
  explicit StageClock(StageTimings* out) : out_(out), start_(Now()), last_(start_) {}

  void Mark(const std::string& stage) {
    const auto now = Now();
    if (out_ != nullptr) out_->stages.emplace_back(stage, Ms(last_, now));
    last_ = now;
  }
  void Finish() {
    if (out_ != nullptr) out_->total_ms = Ms(start_, Now());
  }

 private:
  using Clock = std::chrono::steady_clock;
  static Clock::time_point Now() { return Clock::now(); }
  static double Ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }

  StageTimings* out_;
  Clock::time_point start_;
  Clock::time_point last_;
};

Summary FromTweets(const std::vector<AnnotatedTweet>& tweets, Summary summary) {
  for (const AnnotatedTweet& t : tweets) {
    summary.sentences.push_back(t.text);
    summary.token_count += TweetLength(t);
  }
  return summary;
}

ConceptClusters Cluster(const std::set<std::string>& vocab, ContentWord::Kind kind,
                        const Window& window, const Config& config,
                        const PipelineResources& resources) {
  if (vocab.empty()) return ConceptClusters{kind, {}, {}};
  const SimilarityTable table = ComputeSimilarity(
      vocab, resources.similarity, window, {config.edge_threshold, config.policy});
  AffinityOptions ap;
  ap.damping = config.damping;
  return AffinityPropagation(table, ap, kind);
}

}  // namespace

void Config::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: ") + what);
  };
  require(length >= 0, "length must be >= 0");
  require(extract_budget >= 0, "extract budget must be >= 0");
  require(dedup_jaccard >= 0.0 && dedup_jaccard <= 1.0, "dedup threshold must lie in [0,1]");
  require(paths.min_len >= 1 && paths.min_len <= paths.max_len, "path bounds must satisfy 1 <= min <= max");
  require(paths.max_paths >= 1, "max paths must be >= 1");
  require(paths.max_expansions >= 1, "max expansions must be >= 1");
  require(damping >= 0.5 && damping < 1.0, "damping must lie in [0.5, 1)");
  require(min_topic_freq >= 1, "min topic frequency must be >= 1");
  require(time_limit_seconds > 0.0, "time limit must be positive");
  require(work_limit >= 1, "work limit must be >= 1");
  require(edge_threshold >= 0.0 && edge_threshold <= 1.0, "edge threshold must lie in [0,1]");
}

Summary ConabsSummarize(const Window& window, const Config& config,
                        const PipelineResources& resources, PipelineTrace* trace) {
  config.Validate();
  StageClock clock(trace != nullptr ? &trace->timings : nullptr);
  Summary summary;
  summary.method = "conabs";
  summary.window_id = WindowId(window);
  if (window.tweets.empty() || config.length == 0) {
    clock.Finish();
    return summary;
  }

  ExtractiveOptions extract_options{config.use_idf, resources.gazetteer, config.Solver()};
  auto fall_back = [&](const std::string& why) {
    const ExtractiveResult picked = SelectTweets(window, config.length, extract_options);
    Summary out = FromTweets(picked.tweets, summary);
    out.fallback = true;
    out.optimal = picked.optimal;
    out.diagnostic = why;
    clock.Mark("fallback");
    clock.Finish();
    return out;
  };

  const ExtractiveResult selected =
      SelectTweets(window, config.extract_budget, extract_options);
  clock.Mark("extractive");
  if (trace != nullptr) trace->selected_tweets = selected.tweets;

  std::optional<WordGraph> graph;
  try {
    graph = WordGraph::Build(selected.tweets);
  } catch (const std::invalid_argument&) {
    clock.Mark("graph");
    return fall_back("no selected tweet has two words");
  }
  clock.Mark("graph");

  std::vector<TweetPath> paths = GeneratePaths(*graph, config.paths);
  clock.Mark("paths");
  if (paths.empty()) return fall_back("word graph produced no paths");

  std::set<std::string> nouns, verbs;
  std::vector<std::vector<ContentWord>> path_words(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (const Token& tok : paths[p].tokens) {
      auto word = ClassifyToken(tok, resources.gazetteer);
      if (!word) continue;
      if (word->kind == ContentWord::Kind::kNoun) nouns.insert(word->lemma);
      if (word->kind == ContentWord::Kind::kVerb) verbs.insert(word->lemma);
      path_words[p].push_back(std::move(*word));
    }
  }
  ConceptClusters concepts =
      Cluster(nouns, ContentWord::Kind::kNoun, window, config, resources);
  ConceptClusters events =
      Cluster(verbs, ContentWord::Kind::kVerb, window, config, resources);
  clock.Mark("clustering");

  std::optional<TrigramModel> own_model;
  const TrigramModel* model = resources.language_model;
  if (model == nullptr) {
    own_model = TrigramModel::Train(LanguageModelCorpus(window.tweets));
    model = &*own_model;
  }
  ScorePaths(paths, Centroid::Build(window.tweets), *model, config.policy);
  clock.Mark("scoring");

  // Content ids are interned in sorted order so the instance does not
  // depend on path order.
  std::set<std::string> ids;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::set<std::string> own;
    for (const ContentWord& w : path_words[p]) {
      switch (w.kind) {
        case ContentWord::Kind::kNumeral: own.insert("num:" + w.lemma); break;
        case ContentWord::Kind::kPlace: own.insert("place:" + w.lemma); break;
        case ContentWord::Kind::kNoun: own.insert("concept:" + ClusterOf(w.lemma, concepts)); break;
        case ContentWord::Kind::kVerb: own.insert("event:" + ClusterOf(w.lemma, events)); break;
      }
    }
    paths[p].content_words.assign(own.begin(), own.end());
    ids.insert(own.begin(), own.end());
  }
  std::vector<std::string> words(ids.begin(), ids.end());
  std::map<std::string, int> word_index;
  for (std::size_t j = 0; j < words.size(); ++j) word_index[words[j]] = static_cast<int>(j);

  IlpInstance ilp;
  ilp.budget = config.length;
  ilp.num_words = static_cast<int>(words.size());
  for (const TweetPath& path : paths) {
    ilp.lengths.push_back(path.Length());
    ilp.gains.push_back(path.linguistic_quality * path.informativeness);
    std::vector<int> c;
    for (const std::string& w : path.content_words) c.push_back(word_index.at(w));
    ilp.content.push_back(std::move(c));
  }
  const IlpSolution solution = Solve(ilp, config.Solver());
  clock.Mark("ilp");

  std::vector<int> chosen = solution.Selected();
  std::stable_sort(chosen.begin(), chosen.end(), [&](int a, int b) {
    const double ga = ilp.gains[a], gb = ilp.gains[b];
    if (ga != gb) return ga > gb;
    return paths[a].Text() < paths[b].Text();
  });
  if (trace != nullptr) {
    trace->paths = paths;
    trace->concepts = concepts;
    trace->events = events;
    trace->words = words;
    trace->ilp = ilp;
  }
  if (chosen.empty()) return fall_back("no path fits in the summary budget");

  summary.optimal = solution.optimal;
  for (int i : chosen) {
    summary.sentences.push_back(paths[i].Text());
    summary.token_count += paths[i].Length();
  }
  clock.Finish();
  return summary;
}

StageTimings TimePipeline(const Window& window, const Config& config,
                          const PipelineResources& resources) {
  PipelineTrace trace;
  ConabsSummarize(window, config, resources, &trace);
  return trace.timings;
}

Summary RandomSummary(const Window& window, int length, uint64_t seed) {
  Summary summary;
  summary.method = "random";
  summary.window_id = WindowId(window);
  std::vector<std::size_t> order(window.tweets.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    const int len = TweetLength(window.tweets[i]);
    if (len == 0 || summary.token_count + len > length) continue;
    summary.sentences.push_back(window.tweets[i].text);
    summary.token_count += len;
  }
  return summary;
}

std::string SummaryReportJson(const Summary& summary) {
  nlohmann::ordered_json j;
  j["window"] = summary.window_id;
  j["method"] = summary.method;
  j["fallback"] = summary.fallback;
  j["optimal"] = summary.optimal;
  j["token_count"] = summary.token_count;
  j["sentences"] = summary.sentences;
  j["summary"] = summary.Text();
  if (!summary.diagnostic.empty()) j["diagnostic"] = summary.diagnostic;
  return j.dump(2);
}

}  // namespace conabs
