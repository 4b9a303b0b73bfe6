#include "conabs/eval.h"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"

namespace conabs {
namespace {

TEST(Rouge1RecallTest, ClippedCounts) {
  EXPECT_DOUBLE_EQ(Rouge1Recall("airport closed", "the airport closed"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(Rouge1Recall("airport airport airport", "airport closed airport"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(Rouge1Recall("", "airport"), 0.0);
  EXPECT_DOUBLE_EQ(Rouge1Recall("bridge", "airport"), 0.0);
}

TEST(Rouge1RecallTest, TokenizedLikeIngestion) {
  EXPECT_DOUBLE_EQ(
      Rouge1Recall("RT @cnnbrk: #Airport CLOSED http://t.co/x", "airport closed"), 1.0);
  // Markers in the gold do not count toward its length.
  EXPECT_DOUBLE_EQ(Rouge1Recall("airport", "RT @a airport http://t.co/y"), 1.0);
}

TEST(Rouge1RecallTest, EmptyGoldThrows) {
  EXPECT_THROW(Rouge1Recall("airport", ""), std::invalid_argument);
  EXPECT_THROW(Rouge1Recall("airport", "RT @a !!"), std::invalid_argument);
}

TEST(Rouge1RecallTest, MonotoneInCandidateAndBounded) {
  const std::vector<std::string> vocab = {"airport", "closed", "bridge", "road", "7.9",
                                          "kathmandu", "quake", "help"};
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string gold, candidate;
    for (int k = 1 + trial % 9; k > 0; --k) gold += vocab[pick(rng)] + " ";
    double previous = 0.0;
    for (int k = 0; k < 12; ++k) {
      candidate += vocab[pick(rng)] + " ";
      const double r = Rouge1Recall(candidate, gold);
      EXPECT_GE(r, previous);
      EXPECT_LE(r, 1.0);
      previous = r;
    }
    EXPECT_DOUBLE_EQ(Rouge1Recall(gold, gold), 1.0);
  }
}

TEST(AssociationPrecisionTest, Basics) {
  const std::set<NounEvent> gold = {{"airport", "close"}, {"bridge", "collapse"}};
  EXPECT_DOUBLE_EQ(AssociationPrecision({{"airport", "close"}, {"quake", "close"}}, gold), 0.5);
  EXPECT_DOUBLE_EQ(AssociationPrecision(gold, gold), 1.0);
  EXPECT_THROW(AssociationPrecision({}, gold), std::invalid_argument);
}

TEST(SummaryTest, TextJoinsSentences) {
  Summary s;
  s.sentences = {"a b", "c"};
  EXPECT_EQ(s.Text(), "a b\nc");
  EXPECT_EQ(Summary{}.Text(), "");
}

TEST(StageTimingsTest, JsonKeepsOrderAndTotalLast) {
  StageTimings t;
  t.stages = {{"extractive", 1.5}, {"graph", 0.25}};
  t.total_ms = 2.0;
  EXPECT_DOUBLE_EQ(t.StageSum(), 1.75);
  EXPECT_EQ(t.ToJson(), R"({"extractive":1.5,"graph":0.25,"total":2.0})");
  EXPECT_TRUE(nlohmann::json::parse(t.ToJson()).contains("total"));
}

}  // namespace
}  // namespace conabs
