#include "conabs/wordgraph.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "conabs/synthetic.h"
#include "test_util.h"

namespace conabs {
namespace {

using testing::Fixture;
using testing::Tweet;

std::vector<AnnotatedTweet> Airport() {
  return ParseCorpusFile(Fixture("airport.jsonl"), 0.0).tweets;
}

std::set<std::string> Texts(const std::vector<TweetPath>& paths) {
  std::set<std::string> out;
  for (const TweetPath& p : paths) out.insert(p.Text());
  return out;
}

TEST(GraphTokensTest, DropsMarkersAndPunctuationStripsHash) {
  const auto toks = GraphTokens(Tweet("x", 0, "RT/NN @a/NNP #Nepal/NNP/#nepal quake/NN !/. hits/VBZ/hit"));
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[0].surface, "Nepal");
  EXPECT_EQ(toks[0].lemma, "nepal");
  EXPECT_EQ(toks[2].lemma, "hit");
}

TEST(WordGraphTest, AirportTweetsShareBigramNodes) {
  const WordGraph g = WordGraph::Build(Airport());
  const auto shared = g.Find({"airport", "NN", "closed", "VBD"});
  ASSERT_TRUE(shared.has_value());
  EXPECT_EQ(g.nodes()[*shared].sources, (std::set<std::string>{"t1", "t2"}));
  const auto after = g.Find({"closed", "VBD", "after", "IN"});
  ASSERT_TRUE(after.has_value());
  EXPECT_EQ(g.EdgeCount(*shared, *after), 2);
  // 6 bigrams per tweet, 2 shared.
  EXPECT_EQ(g.nodes().size(), 2u + 10u);
}

TEST(WordGraphTest, AirportFusionYieldsCrossTweetPaths) {
  const std::vector<TweetPath> paths = GeneratePaths(WordGraph::Build(Airport()));
  const auto texts = Texts(paths);
  EXPECT_TRUE(texts.contains(
      "tribhuvan international airport closed after 7.9 earthquake in kathmandu"));
  EXPECT_TRUE(texts.contains("airport closed after the quake"));
  EXPECT_TRUE(texts.contains("tribhuvan international airport closed after the quake"));
  for (const TweetPath& p : paths) {
    if (p.Text() == "airport closed after the quake") {
      EXPECT_EQ(p.source_tweets, (std::set<std::string>{"t1", "t2"}));
    }
  }
}

TEST(WordGraphTest, POSMismatchPreventsFusion) {
  const WordGraph g = WordGraph::Build({Tweet("a", 0, "roads/NNS/road close/VBP now/RB"),
                                        Tweet("b", 1, "roads/NNS/road close/JJ by/IN")});
  EXPECT_EQ(g.nodes().size(), 2u + 4u);
}

TEST(WordGraphTest, NeedsTwoTokenTweet) {
  EXPECT_THROW(WordGraph::Build({Tweet("a", 0, "quake/NN")}), std::invalid_argument);
  EXPECT_THROW(WordGraph::Build({}), std::invalid_argument);
}

TEST(WordGraphTest, WalksRoundTripToTweetTokens) {
  SyntheticOptions options;
  options.num_tweets = 150;
  const SyntheticCorpus corpus = GenerateCorpus(options);
  const WordGraph g = WordGraph::Build(corpus.tweets);
  std::map<std::string, const AnnotatedTweet*> by_id;
  for (const AnnotatedTweet& t : corpus.tweets) by_id[t.id] = &t;
  for (const auto& [id, walk] : g.walks()) {
    ASSERT_GE(walk.size(), 3u);
    EXPECT_EQ(walk.front(), WordGraph::kStart);
    EXPECT_EQ(walk.back(), WordGraph::kEnd);
    std::vector<std::pair<std::string, std::string>> rebuilt;
    for (std::size_t k = 1; k + 1 < walk.size(); ++k) {
      const BigramKey& key = g.nodes()[walk[k]].key;
      if (k == 1) rebuilt.emplace_back(key.lemma1, key.pos1);
      rebuilt.emplace_back(key.lemma2, key.pos2);
      EXPECT_GE(g.EdgeCount(walk[k - 1], walk[k]), 1);
    }
    std::vector<std::pair<std::string, std::string>> expected;
    for (const Token& t : GraphTokens(*by_id.at(id))) expected.emplace_back(t.lemma, t.pos);
    EXPECT_EQ(rebuilt, expected) << id;
  }
}

TEST(GeneratePathsTest, PathsAreDistinctBoundedAndGrammaticallyComplete) {
  SyntheticOptions options;
  options.num_tweets = 250;
  const SyntheticCorpus corpus = GenerateCorpus(options);
  const WordGraph g = WordGraph::Build(corpus.tweets);
  PathOptions po;
  po.max_paths = 300;
  const std::vector<TweetPath> paths = GeneratePaths(g, po);
  ASSERT_FALSE(paths.empty());
  EXPECT_LE(paths.size(), 300u);
  std::set<std::string> texts;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const TweetPath& p = paths[i];
    EXPECT_TRUE(texts.insert(p.Text()).second) << "duplicate " << p.Text();
    EXPECT_GE(p.Length(), po.min_len);
    EXPECT_LE(p.Length(), po.max_len);
    EXPECT_EQ(std::set<int>(p.nodes.begin(), p.nodes.end()).size(), p.nodes.size());
    EXPECT_EQ(p.tokens.size(), p.nodes.size() + 1);
    bool noun = false, verb = false;
    for (const Token& t : p.tokens) {
      noun = noun || IsNounTag(t.pos);
      verb = verb || IsVerbTag(t.pos);
    }
    EXPECT_TRUE(noun && verb);
    if (i > 0) {
      EXPECT_TRUE(paths[i - 1].edge_weight > p.edge_weight ||
                  (paths[i - 1].edge_weight == p.edge_weight &&
                   paths[i - 1].Text() < p.Text()));
    }
  }
}

TEST(GeneratePathsTest, RejectsBadBounds) {
  const WordGraph g = WordGraph::Build(Airport());
  PathOptions po;
  po.min_len = 0;
  EXPECT_THROW(GeneratePaths(g, po), std::invalid_argument);
  po.min_len = 9;
  po.max_len = 8;
  EXPECT_THROW(GeneratePaths(g, po), std::invalid_argument);
}

TEST(GeneratePathsTest, ShortBoundsCanLeaveNothing) {
  PathOptions po;
  po.min_len = 20;
  EXPECT_TRUE(GeneratePaths(WordGraph::Build(Airport()), po).empty());
}

TEST(CentroidTest, TfIdfWeightsAndCosine) {
  const Centroid c = Centroid::Build({Tweet("a", 0, "airport/NN closed/VBD/close"),
                                      Tweet("b", 1, "airport/NN flights/NNS/flight")});
  const double ln2 = std::log(2.0), ln3 = std::log(3.0);
  EXPECT_DOUBLE_EQ(c.weights().at("airport"), 2 * ln2);
  EXPECT_DOUBLE_EQ(c.weights().at("close"), ln3);
  EXPECT_DOUBLE_EQ(c.Idf("runway"), ln3);
  EXPECT_NEAR(c.Cosine({"airport"}), 2 * ln2 / std::sqrt(4 * ln2 * ln2 + 2 * ln3 * ln3), 1e-12);
  EXPECT_EQ(c.Cosine({"runway"}), 0.0);
  EXPECT_EQ(c.Cosine({}), 0.0);
  EXPECT_EQ(Centroid().Cosine({"airport"}), 0.0);
}

TEST(ScorePathsTest, ScoresInRangeAndPolicyIndependent) {
  SyntheticOptions options;
  options.num_tweets = 200;
  const SyntheticCorpus corpus = GenerateCorpus(options);
  const WordGraph g = WordGraph::Build(corpus.tweets);
  std::vector<TweetPath> a = GeneratePaths(g);
  std::vector<TweetPath> b = a;
  const Centroid centroid = Centroid::Build(corpus.tweets);
  const TrigramModel lm = TrigramModel::Train(LanguageModelCorpus(corpus.tweets));
  ScorePaths(a, centroid, lm, ExecutionPolicy::kSerial);
  ScorePaths(b, centroid, lm, ExecutionPolicy::kParallel);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].informativeness, b[i].informativeness);
    EXPECT_EQ(a[i].linguistic_quality, b[i].linguistic_quality);
    EXPECT_GE(a[i].informativeness, 0.0);
    EXPECT_LE(a[i].informativeness, 1.0);
    EXPECT_GT(a[i].linguistic_quality, 0.0);
    EXPECT_LE(a[i].linguistic_quality, 1.0);
  }
}

}  // namespace
}  // namespace conabs
