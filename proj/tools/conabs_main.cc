// conabs: summarize, mine topics, evaluate and time (class, day) windows of
// an annotated tweet corpus.
//
// Exit status: 0 on success, 2 on bad input or usage.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "conabs/eval.h"
#include "conabs/ilp.h"
#include "conabs/ingest.h"
#include "conabs/pipeline.h"
#include "conabs/synthetic.h"
#include "conabs/topics.h"

namespace {

using namespace conabs;

constexpr int kInputErrorExit = 2;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text << '\n';
}

struct WindowArgs {
  std::string corpus;
  std::string class_name;
  std::string date;
  double min_conf = 0.8;
  double dedup = kDefaultDedupJaccard;
  bool serial = false;
};

void AddWindowOptions(CLI::App* cmd, WindowArgs& args) {
  cmd->add_option("--corpus", args.corpus, "Annotated JSONL corpus")->required();
  cmd->add_option("--class", args.class_name, "Class label")->required();
  cmd->add_option("--date", args.date, "Day, YYYY-MM-DD (UTC)")->required();
  cmd->add_option("--min-conf", args.min_conf, "Minimum classifier confidence")
      ->capture_default_str();
  cmd->add_option("--dedup", args.dedup, "Near-duplicate Jaccard threshold")
      ->capture_default_str();
  cmd->add_flag("--serial", args.serial, "Run kernels single-threaded");
}

Window LoadWindow(const WindowArgs& args) {
  const ParseResult parsed = ParseCorpusFile(args.corpus, args.min_conf);
  for (const LineError& e : parsed.errors) {
    std::cerr << args.corpus << ":" << e.line << ": " << e.message << '\n';
  }
  for (const LineError& w : parsed.warnings) {
    std::cerr << args.corpus << ":" << w.line << ": warning: " << w.message << '\n';
  }
  const auto [start, end] = DayRange(args.date);
  return MakeWindow(parsed.tweets, ClassLabel::Parse(args.class_name), start, end,
                    args.dedup,
                    args.serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel);
}

// A summary file is either a report written by `summarize` or plain text.
std::string SummaryText(const std::string& contents) {
  auto j = nlohmann::json::parse(contents, nullptr, false);
  if (!j.is_discarded() && j.is_object() && j.contains("summary") &&
      j["summary"].is_string()) {
    return j["summary"].get<std::string>();
  }
  return contents;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crisis-tweet summarizer"};
  app.require_subcommand(1);

  WindowArgs window_args;
  Config config;
  std::string sim_path, gazetteer_path, dump_ilp, out_path, timing_path, lm_path;

  auto* summarize = app.add_subcommand("summarize", "Summarize one class/day window");
  AddWindowOptions(summarize, window_args);
  summarize->add_option("--length", config.length, "Summary length in words")
      ->capture_default_str();
  summarize->add_option("--extract-budget", config.extract_budget,
                        "Word budget of the tweet-selection stage")
      ->capture_default_str();
  summarize->add_option("--sim", sim_path, "Similarity TSV (lemma, lemma, score)");
  summarize->add_option("--gazetteer", gazetteer_path, "Place names, one per line");
  summarize->add_option("--lm", lm_path, "Language-model training text, one sentence per line");
  summarize->add_option("--dump-ilp", dump_ilp, "Write the path-selection instance as JSON");
  summarize->add_option("--timing", timing_path, "Write per-stage milliseconds as JSON");
  summarize->add_option("--min-path", config.paths.min_len)->capture_default_str();
  summarize->add_option("--max-path", config.paths.max_len)->capture_default_str();
  summarize->add_option("--max-paths", config.paths.max_paths)->capture_default_str();
  summarize->add_option("--damping", config.damping)->capture_default_str();
  summarize->add_option("--edge-threshold", config.edge_threshold,
                        "Drop word similarities below this value")
      ->capture_default_str();
  summarize->add_option("--time-limit", config.time_limit_seconds, "Solver seconds")
      ->capture_default_str();
  summarize->add_flag("--idf", config.use_idf, "Weight selection words by tf-idf");
  summarize->add_option("--out", out_path, "Report path ('-' for stdout)");

  int min_freq = 10;
  int window_width = 0;
  int topic_length = kDefaultTopicLength;
  bool overlap_strict = false;
  auto* topics = app.add_subcommand("topics", "Mine sub-topic phrases of a window");
  AddWindowOptions(topics, window_args);
  topics->add_option("--min-freq", min_freq, "Minimum tweets per noun and event")
      ->capture_default_str();
  topics->add_option("--window", window_width,
                     "Associate within N tokens instead of by dependency edges");
  topics->add_option("--length", topic_length, "Words per topic summary")
      ->capture_default_str();
  topics->add_flag("--overlap-strict", overlap_strict,
                   "Count only tweets where the word was associated");
  topics->add_option("--out", out_path, "Report path ('-' for stdout)");

  std::string summary_path, gold_path;
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE-1 recall against a gold summary");
  evaluate->add_option("--summary", summary_path, "Report JSON or plain text")->required();
  evaluate->add_option("--gold", gold_path, "Gold summary text")->required();

  std::string bench_corpus;
  double bench_min_conf = 0.8;
  bool bench_serial = false;
  auto* bench = app.add_subcommand("bench", "Time every class/day window of a corpus");
  bench->add_option("--corpus", bench_corpus)->required();
  bench->add_option("--min-conf", bench_min_conf)->capture_default_str();
  bench->add_flag("--serial", bench_serial);

  SyntheticOptions synth;
  std::string gold_out;
  auto* synthesize = app.add_subcommand("synth", "Write a synthetic annotated corpus");
  synthesize->add_option("--tweets", synth.num_tweets)->capture_default_str();
  synthesize->add_option("--facts", synth.num_facts)->capture_default_str();
  synthesize->add_option("--noise", synth.noise_fraction)->capture_default_str();
  synthesize->add_option("--seed", synth.seed)->capture_default_str();
  synthesize->add_option("--out", out_path)->required();
  synthesize->add_option("--gold", gold_out, "Write the planted facts here");

  std::string instance_path;
  auto* solve = app.add_subcommand("solve-ilp", "Solve a dumped path-selection instance");
  solve->add_option("--instance", instance_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }

  try {
    if (*summarize) {
      config.policy = window_args.serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel;
      config.dedup_jaccard = window_args.dedup;
      config.Validate();
      const Window window = LoadWindow(window_args);
      std::optional<SimilarityResource> sim;
      std::optional<Gazetteer> gazetteer;
      std::optional<TrigramModel> lm;
      PipelineResources resources;
      if (!sim_path.empty()) resources.similarity = &sim.emplace(SimilarityResource::LoadTsv(sim_path));
      if (!gazetteer_path.empty()) resources.gazetteer = &gazetteer.emplace(LoadGazetteer(gazetteer_path));
      if (!lm_path.empty()) {
        std::ifstream in(lm_path);
        if (!in) throw InputError("cannot read " + lm_path);
        resources.language_model = &lm.emplace(TrigramModel::TrainFromStream(in));
      }
      PipelineTrace trace;
      const Summary summary = ConabsSummarize(window, config, resources, &trace);
      if (!dump_ilp.empty()) WriteOutput(dump_ilp, DumpInstanceJson(trace.ilp));
      if (!timing_path.empty()) WriteOutput(timing_path, trace.timings.ToJson());
      WriteOutput(out_path, SummaryReportJson(summary));
    } else if (*topics) {
      const Window window = LoadWindow(window_args);
      TopicOptions options;
      options.min_freq = min_freq;
      options.overlap_strict = overlap_strict;
      if (window_width > 0) options.mode = AssociationMode::Window(window_width);
      const std::vector<TopicPhrase> mined = MineTopics(window, options);
      std::vector<Summary> summaries;
      for (const TopicPhrase& t : mined) {
        summaries.push_back(TopicSummary(window, t, topic_length));
      }
      WriteOutput(out_path, TopicReportJson(mined, summaries));
    } else if (*evaluate) {
      const double recall =
          Rouge1Recall(SummaryText(ReadFile(summary_path)), ReadFile(gold_path));
      nlohmann::ordered_json j;
      j["rouge1_recall"] = recall;
      std::cout << j.dump() << '\n';
    } else if (*bench) {
      const ParseResult parsed = ParseCorpusFile(bench_corpus, bench_min_conf);
      std::map<std::pair<std::string, int64_t>, ClassLabel> windows;
      for (const AnnotatedTweet& t : parsed.tweets) {
        const int64_t day = t.timestamp - ((t.timestamp % 86400) + 86400) % 86400;
        windows.emplace(std::pair{t.class_label.Name(), day}, t.class_label);
      }
      Config bench_config;
      bench_config.policy = bench_serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel;
      for (const auto& [key, label] : windows) {
        const Window w = MakeWindow(parsed.tweets, label, key.second, key.second + 86400,
                                    bench_config.dedup_jaccard, bench_config.policy);
        nlohmann::ordered_json j;
        j["window"] = WindowId(w);
        j["tweets"] = w.tweets.size();
        j["timing_ms"] = nlohmann::json::parse(TimePipeline(w, bench_config).ToJson());
        std::cout << j.dump() << '\n';
      }
    } else if (*synthesize) {
      const SyntheticCorpus corpus = GenerateCorpus(synth);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw InputError("cannot write " + out_path);
      for (const AnnotatedTweet& t : corpus.tweets) out << SerializeRecord(t) << '\n';
      if (!gold_out.empty()) {
        std::ofstream gold(gold_out, std::ios::binary);
        if (!gold) throw InputError("cannot write " + gold_out);
        gold << corpus.Gold();
      }
    } else if (*solve) {
      const IlpInstance instance = LoadInstanceJson(ReadFile(instance_path));
      const IlpSolution s = Solve(instance);
      nlohmann::ordered_json j;
      j["objective"] = s.objective;
      j["optimal"] = s.optimal;
      j["selected"] = s.Selected();
      j["nodes"] = s.nodes;
      std::cout << j.dump() << '\n';
    }
  } catch (const InputError& e) {
    std::cerr << "conabs: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "conabs: " << e.what() << '\n';
    return kInputErrorExit;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "conabs: " << e.what() << '\n';
    return kInputErrorExit;
  }
  return 0;
}
