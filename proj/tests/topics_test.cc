#include "conabs/topics.h"

#include <gtest/gtest.h>

#include <fstream>

#include "test_util.h"

namespace conabs {
namespace {

using testing::Fixture;
using testing::Tweet;
using testing::WindowOf;

const std::vector<DepEdge> kSubject = {{1, 0, "nsubj"}};

// 10 x "bridge collapsed", 5 x "bridge is open", 5 x "house collapsed".
Window BridgeWindow() {
  std::vector<AnnotatedTweet> tweets;
  int64_t ts = 0;
  for (int i = 0; i < 10; ++i) {
    tweets.push_back(Tweet("bc" + std::to_string(i), ts++,
                           "bridge/NN collapsed/VBD/collapse", kSubject));
  }
  for (int i = 0; i < 5; ++i) {
    tweets.push_back(Tweet("bo" + std::to_string(i), ts++, "bridge/NN is/VBZ/be open/JJ",
                           {{2, 0, "nsubj"}, {2, 1, "cop"}}));
  }
  for (int i = 0; i < 5; ++i) {
    tweets.push_back(Tweet("hc" + std::to_string(i), ts++,
                           "house/NN collapsed/VBD/collapse", kSubject));
  }
  return WindowOf(tweets);
}

TEST(DetectEventsTest, SkipsAuxiliariesAndLightVerbs) {
  const AnnotatedTweet t = Tweet("x", 0, "roads/NNS/road have/VBP/have been/VBN/be blocked/VBN/block",
                                 {{3, 0, "nsubjpass"}, {3, 1, "aux"}, {3, 2, "auxpass"}});
  EXPECT_EQ(DetectEvents(t), std::vector<int>{3});
  const AnnotatedTweet cop = Tweet("y", 0, "shelters/NNS/shelter remain/VBP open/JJ",
                                   {{2, 0, "nsubj"}, {2, 1, "cop"}});
  EXPECT_TRUE(DetectEvents(cop).empty());
}

TEST(DetectEventsTest, AnnotatedEventsWin) {
  AnnotatedTweet t = Tweet("x", 0, "relief/NN arrives/VBZ/arrive today/NN");
  t.event_tokens = std::vector<int>{0};
  EXPECT_EQ(DetectEvents(t), std::vector<int>{0});
}

TEST(AssociateTest, DependencyVersusWindow) {
  const AnnotatedTweet t = Tweet(
      "x", 0, "landslide/NN blocked/VBD/block the/DT highway/NN near/IN Dhunche/NNP",
      {{1, 0, "nsubj"}, {1, 3, "obj"}, {3, 2, "det"}, {1, 5, "obl"}, {5, 4, "case"}});
  const std::vector<NounEvent> dep = {{"dhunche", "block"}, {"highway", "block"},
                                      {"landslide", "block"}};
  EXPECT_EQ(Associate(t, AssociationMode::Dependency()), dep);
  const std::vector<NounEvent> w1 = {{"landslide", "block"}};
  EXPECT_EQ(Associate(t, AssociationMode::Window(1)), w1);
  const std::vector<NounEvent> w2 = {{"highway", "block"}, {"landslide", "block"}};
  EXPECT_EQ(Associate(t, AssociationMode::Window(2)), w2);
}

TEST(AssociateTest, Errors) {
  const AnnotatedTweet t = Tweet("x", 0, "bridge/NN collapsed/VBD/collapse");
  EXPECT_THROW(Associate(t, AssociationMode::Dependency()), std::invalid_argument);
  EXPECT_THROW(Associate(t, AssociationMode::Window(0)), std::invalid_argument);
  EXPECT_EQ(Associate(t, AssociationMode::Window(1)).size(), 1u);
}

TEST(OverlapScoreTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(OverlapScore(20, 10, 5), 0.5);
  EXPECT_DOUBLE_EQ(OverlapScore(3, 3, 3), 1.0);
  EXPECT_DOUBLE_EQ(OverlapScore(7, 100, 0), 0.0);
  EXPECT_THROW(OverlapScore(0, 5, 0), std::invalid_argument);
  EXPECT_THROW(OverlapScore(4, 5, 5), std::invalid_argument);
  for (std::size_t x = 1; x < 12; ++x) {
    for (std::size_t y = 1; y < 12; ++y) {
      for (std::size_t both = 0; both <= std::min(x, y); ++both) {
        const double o = OverlapScore(x, y, both);
        EXPECT_GE(o, 0.0);
        EXPECT_LE(o, 1.0);
        EXPECT_EQ(o, OverlapScore(y, x, both));
      }
    }
  }
}

TEST(MineTopicsTest, LiteralSetsAndFrequencyFloor) {
  const std::vector<TopicPhrase> topics = MineTopics(BridgeWindow());
  ASSERT_EQ(topics.size(), 1u);
  EXPECT_EQ(topics[0].noun, "bridge");
  EXPECT_EQ(topics[0].event, "collapse");
  EXPECT_EQ(topics[0].X.size(), 15u);
  EXPECT_EQ(topics[0].Y.size(), 15u);
  EXPECT_DOUBLE_EQ(topics[0].overlap, 10.0 / 15.0);
  EXPECT_EQ(topics[0].support, 10);
}

TEST(MineTopicsTest, OrderedByOverlapThenLemmas) {
  TopicOptions options;
  options.min_freq = 5;
  const std::vector<TopicPhrase> topics = MineTopics(BridgeWindow(), options);
  ASSERT_EQ(topics.size(), 2u);
  EXPECT_EQ(topics[0].noun, "house");
  EXPECT_DOUBLE_EQ(topics[0].overlap, 5.0 / 5.0);
  EXPECT_EQ(topics[1].noun, "bridge");
}

TEST(MineTopicsTest, StrictSetsUseAssociatedTweetsOnly) {
  TopicOptions options;
  options.overlap_strict = true;
  const std::vector<TopicPhrase> topics = MineTopics(BridgeWindow(), options);
  ASSERT_EQ(topics.size(), 1u);
  EXPECT_EQ(topics[0].X.size(), 10u);
  EXPECT_DOUBLE_EQ(topics[0].overlap, 1.0);
}

TEST(MineTopicsTest, TweetsWithoutDependenciesStillCount) {
  Window w = BridgeWindow();
  for (int i = 0; i < 3; ++i) {
    w.tweets.push_back(Tweet("nd" + std::to_string(i), 100 + i, "bridge/NN collapsed/VBD/collapse"));
  }
  const std::vector<TopicPhrase> topics = MineTopics(w);
  ASSERT_EQ(topics.size(), 1u);
  EXPECT_EQ(topics[0].X.size(), 18u);
  EXPECT_EQ(topics[0].support, 10);
  EXPECT_DOUBLE_EQ(topics[0].overlap, 13.0 / 18.0);
}

TEST(MineTopicsTest, EmptyWindowAndBadFloor) {
  EXPECT_TRUE(MineTopics(WindowOf({})).empty());
  TopicOptions options;
  options.min_freq = 0;
  EXPECT_THROW(MineTopics(WindowOf({}), options), std::invalid_argument);
}

TEST(TopicSummaryTest, SummarizesMatchingTweetsWithinLength) {
  const Window w = BridgeWindow();
  const std::vector<TopicPhrase> topics = MineTopics(w);
  const Summary s = TopicSummary(w, topics[0], 6);
  EXPECT_EQ(s.method, "topic");
  EXPECT_LE(s.token_count, 6);
  EXPECT_FALSE(s.sentences.empty());
  for (const std::string& line : s.sentences) EXPECT_EQ(line, "bridge collapsed");
}

TEST(TopicSummaryTest, DiagnosticWhenNothingMatches) {
  TopicPhrase ghost;
  ghost.noun = "dam";
  ghost.event = "burst";
  const Summary s = TopicSummary(BridgeWindow(), ghost);
  EXPECT_TRUE(s.sentences.empty());
  EXPECT_FALSE(s.diagnostic.empty());
}

TEST(TopicReportJsonTest, FieldOrderAndSizeCheck) {
  const Window w = BridgeWindow();
  const std::vector<TopicPhrase> topics = MineTopics(w);
  const std::string json = TopicReportJson(topics, {TopicSummary(w, topics[0], 2)});
  EXPECT_NE(json.find("\"noun\": \"bridge\""), std::string::npos);
  EXPECT_LT(json.find("\"noun\""), json.find("\"summary\""));
  EXPECT_THROW(TopicReportJson(topics, {}), std::invalid_argument);
}

std::set<NounEvent> LoadGold() {
  std::ifstream in(Fixture("association_gold.tsv"));
  std::set<NounEvent> gold;
  std::string noun, event;
  while (in >> noun >> event) gold.emplace(noun, event);
  return gold;
}

TEST(AssociationFixtureTest, DependencyBeatsWindowPrecision) {
  const ParseResult parsed = ParseCorpusFile(Fixture("association.jsonl"), 0.0);
  ASSERT_TRUE(parsed.errors.empty());
  ASSERT_EQ(parsed.tweets.size(), 50u);
  const std::set<NounEvent> gold = LoadGold();
  ASSERT_EQ(gold.size(), 76u);
  std::set<NounEvent> dep, win;
  for (const AnnotatedTweet& t : parsed.tweets) {
    for (const NounEvent& p : Associate(t, AssociationMode::Dependency())) dep.insert(p);
    for (const NounEvent& p : Associate(t, AssociationMode::Window(3))) win.insert(p);
  }
  EXPECT_GT(AssociationPrecision(dep, gold), AssociationPrecision(win, gold));
}

}  // namespace
}  // namespace conabs
