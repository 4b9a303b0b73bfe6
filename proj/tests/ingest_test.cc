#include "conabs/ingest.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "conabs/synthetic.h"
#include "test_util.h"

namespace conabs {
namespace {

using testing::Fixture;
using testing::Tweet;

std::string Record(double conf, const std::string& deps = "[]") {
  return R"({"id":"x","ts":100,"class":"Infrastructure","conf":)" + std::to_string(conf) +
         R"(,"text":"bridge collapsed","tokens":[{"surface":"bridge","lemma":"bridge","pos":"NN"},)"
         R"({"surface":"collapsed","lemma":"collapse","pos":"VBD"}],"deps":)" + deps + "}";
}

TEST(ParseCorpusTest, ConfidenceThresholdIsInclusive) {
  std::istringstream in(Record(0.91) + "\n" + Record(0.79) + "\n" + Record(0.80) + "\n");
  const ParseResult r = ParseCorpus(in, 0.80);
  ASSERT_EQ(r.tweets.size(), 2u);
  EXPECT_DOUBLE_EQ(r.tweets[0].confidence, 0.91);
  EXPECT_DOUBLE_EQ(r.tweets[1].confidence, 0.80);
  EXPECT_EQ(r.below_confidence, 1);
  EXPECT_TRUE(r.errors.empty());
}

TEST(ParseCorpusTest, DependencyIndexOutOfRangeIsALineError) {
  std::istringstream in(Record(0.9) + "\n" +
                        Record(0.9, R"([{"head":7,"dep":0,"label":"nsubj"}])") + "\n" +
                        Record(0.9) + "\n");
  const ParseResult r = ParseCorpus(in, 0.0);
  EXPECT_EQ(r.tweets.size(), 2u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 2);
}

TEST(ParseCorpusTest, MixedFixtureReportsErrorsAndContinues) {
  const ParseResult r = ParseCorpusFile(Fixture("mixed.jsonl"), 0.8);
  ASSERT_EQ(r.tweets.size(), 2u);
  EXPECT_EQ(r.tweets[0].id, "a");
  EXPECT_EQ(r.tweets[1].id, "e");
  ASSERT_EQ(r.errors.size(), 2u);
  EXPECT_EQ(r.errors[0].line, 3);
  EXPECT_EQ(r.errors[1].line, 4);
  EXPECT_EQ(r.below_confidence, 1);
}

TEST(ParseCorpusTest, UnreadableFileThrows) {
  EXPECT_THROW(ParseCorpusFile("/nonexistent/corpus.jsonl", 0.8), InputError);
}

TEST(ParseRecordTest, RejectsSchemaViolations) {
  EXPECT_THROW(ParseRecord("{}"), InputError);
  EXPECT_THROW(ParseRecord(Record(1.5)), InputError);
  EXPECT_THROW(ParseRecord(Record(0.9, R"([{"head":1,"dep":1,"label":"x"}])")), InputError);
  EXPECT_THROW(ParseRecord("[1,2]"), InputError);
}

TEST(ParseRecordTest, TokenlessTweetWithTextIsDroppedWithWarning) {
  std::istringstream in(
      R"({"id":"x","ts":1,"class":"Shelter","conf":0.9,"text":"hello","tokens":[],"deps":[]})"
      "\n");
  const ParseResult r = ParseCorpus(in, 0.0);
  EXPECT_TRUE(r.tweets.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ParseRecordTest, LongClassNamesMapToCanonicalLabels) {
  EXPECT_EQ(ClassLabel::Parse("Infrastructure and utilities"), ClassLabel::Infrastructure());
  EXPECT_EQ(ClassLabel::Parse("missing, trapped, or found people"), ClassLabel::Missing());
  EXPECT_EQ(ClassLabel::Parse("SHELTER"), ClassLabel::Shelter());
  EXPECT_EQ(ClassLabel::Parse("Donations").Name(), "Donations");
}

TEST(SerializeRecordTest, RoundTripsSyntheticRecords) {
  SyntheticOptions options;
  options.num_tweets = 200;
  const SyntheticCorpus corpus = GenerateCorpus(options);
  for (AnnotatedTweet t : corpus.tweets) {
    if (t.id.back() == '7') t.event_tokens = std::vector<int>{0};
    EXPECT_EQ(ParseRecord(SerializeRecord(t)), t) << t.text;
  }
}

TEST(MakeWindowTest, EmptyInputGivesEmptyWindow) {
  const Window w = MakeWindow({}, ClassLabel::Shelter(), 0, 100);
  EXPECT_TRUE(w.tweets.empty());
}

TEST(MakeWindowTest, ExactDuplicateKeepsEarlierTweet) {
  const Window w = MakeWindow({Tweet("b", 20, "bridge/NN collapsed/VBD"),
                               Tweet("a", 10, "bridge/NN collapsed/VBD")},
                              ClassLabel::Infrastructure(), 0, 100);
  ASSERT_EQ(w.tweets.size(), 1u);
  EXPECT_EQ(w.tweets[0].id, "a");
}

TEST(MakeWindowTest, NearDuplicateAtJaccardThreeQuartersIsDropped) {
  // Content words {airport, close, kathmandu, flight} vs
  // {airport, close, kathmandu}: Jaccard 3/4 = 0.75 >= 0.7.
  const Window w = MakeWindow(
      {Tweet("a", 10, "airport/NN closed/VBD/close in/IN Kathmandu/NNP"),
       Tweet("b", 20, "airport/NN closed/VBD/close in/IN Kathmandu/NNP ,/, flights/NNS/flight")},
      ClassLabel::Infrastructure(), 0, 100);
  ASSERT_EQ(w.tweets.size(), 1u);
  EXPECT_EQ(w.tweets[0].id, "a");
}

TEST(MakeWindowTest, FiltersClassAndHalfOpenRange) {
  const Window w =
      MakeWindow({Tweet("a", 99, "a/NN b/VBD"), Tweet("b", 100, "c/NN d/VBD"),
                  Tweet("c", 0, "e/NN f/VBD"),
                  Tweet("d", 50, "g/NN h/VBD", {}, ClassLabel::Shelter())},
                 ClassLabel::Infrastructure(), 0, 100);
  ASSERT_EQ(w.tweets.size(), 2u);
  EXPECT_EQ(w.tweets[0].id, "c");
  EXPECT_EQ(w.tweets[1].id, "a");
}

TEST(MakeWindowTest, RejectsBadRangeAndThreshold) {
  EXPECT_THROW(MakeWindow({}, ClassLabel::Shelter(), 10, 5), InputError);
  EXPECT_THROW(MakeWindow({}, ClassLabel::Shelter(), 0, 5, 1.5), InputError);
}

TEST(MakeWindowTest, IdempotentStableAndNeverGrows) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    SyntheticOptions options;
    options.seed = seed;
    options.num_tweets = 300;
    const SyntheticCorpus corpus = GenerateCorpus(options);
    const Window w = MakeWindow(corpus.tweets, options.label, options.day_start,
                                options.day_start + 86400);
    EXPECT_LE(w.tweets.size(), corpus.tweets.size());
    for (std::size_t i = 1; i < w.tweets.size(); ++i) {
      const auto& a = w.tweets[i - 1];
      const auto& b = w.tweets[i];
      EXPECT_TRUE(a.timestamp < b.timestamp || (a.timestamp == b.timestamp && a.id < b.id));
    }
    const Window again = MakeWindow(w.tweets, w.class_label, w.start, w.end);
    EXPECT_EQ(again.tweets, w.tweets);
  }
}

TEST(MakeWindowTest, SerialAndParallelDedupAgree) {
  SyntheticOptions options;
  options.num_tweets = 3000;
  const SyntheticCorpus corpus = GenerateCorpus(options);
  const auto [start, end] = std::pair{options.day_start, options.day_start + 86400};
  EXPECT_EQ(MakeWindow(corpus.tweets, options.label, start, end, 0.7, ExecutionPolicy::kSerial).tweets,
            MakeWindow(corpus.tweets, options.label, start, end, 0.7, ExecutionPolicy::kParallel).tweets);
}

TEST(DayRangeTest, UtcDayBounds) {
  EXPECT_EQ(DayRange("2015-04-25"), (std::pair<int64_t, int64_t>{1429920000, 1430006400}));
  EXPECT_EQ(DayRange("1970-01-01"), (std::pair<int64_t, int64_t>{0, 86400}));
  EXPECT_THROW(DayRange("2015-02-30"), InputError);
  EXPECT_THROW(DayRange("25/04/2015"), InputError);
}

TEST(WindowIdTest, ClassAndRange) {
  Window w;
  w.class_label = ClassLabel::Shelter();
  w.start = 5;
  w.end = 9;
  EXPECT_EQ(WindowId(w), "Shelter/5-9");
}

}  // namespace
}  // namespace conabs
