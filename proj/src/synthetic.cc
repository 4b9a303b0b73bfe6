#include "conabs/synthetic.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "conabs/text.h"

namespace conabs {

namespace {

struct Word {
  const char* surface;
  const char* lemma;
  const char* pos;
};

constexpr std::array<const char*, 12> kFacilities = {
    "airport", "bridge", "hospital", "school", "road", "temple",
    "tower", "highway", "dam", "market", "prison", "stadium"};
constexpr std::array<const char*, 12> kPlaces = {
    "Kathmandu", "Pokhara", "Lalitpur", "Bhaktapur", "Gorkha", "Sindhupalchok",
    "Dhading", "Lamjung", "Nuwakot", "Kavre", "Dolakha", "Rasuwa"};
constexpr std::array<Word, 12> kVerbs = {{
    {"closed", "close", "VBD"},     {"collapsed", "collapse", "VBD"},
    {"damaged", "damage", "VBD"},   {"destroyed", "destroy", "VBD"},
    {"blocked", "block", "VBD"},    {"flooded", "flood", "VBD"},
    {"cracked", "crack", "VBD"},    {"sealed", "seal", "VBD"},
    {"shut", "shut", "VBD"},        {"toppled", "topple", "VBD"},
    {"burned", "burn", "VBD"},      {"sank", "sink", "VBD"},
}};
constexpr std::array<const char*, 12> kCounts = {
    "3", "7", "12", "25", "40", "58", "75", "120", "150", "230", "400", "650"};
constexpr std::array<Word, 6> kGroups = {{
    {"people", "people", "NNS"},     {"families", "family", "NNS"},
    {"workers", "worker", "NNS"},    {"students", "student", "NNS"},
    {"tourists", "tourist", "NNS"},  {"patients", "patient", "NNS"},
}};
constexpr std::array<Word, 5> kStates = {{
    {"trapped", "trap", "VBN"},      {"injured", "injure", "VBN"},
    {"stranded", "strand", "VBN"},   {"displaced", "displace", "VBN"},
    {"rescued", "rescue", "VBN"},
}};

constexpr std::array<Word, 5> kAdverbs = {{
    {"so", "so", "RB"}, {"really", "really", "RB"}, {"very", "very", "RB"},
    {"just", "just", "RB"}, {"still", "still", "RB"}}};
constexpr std::array<Word, 6> kAdjectives = {{
    {"sad", "sad", "JJ"}, {"terrible", "terrible", "JJ"},
    {"heartbreaking", "heartbreaking", "JJ"}, {"awful", "awful", "JJ"},
    {"scary", "scary", "JJ"}, {"shocking", "shocking", "JJ"}}};
constexpr std::array<Word, 16> kNoiseNouns = {{
    {"news", "news", "NN"},       {"video", "video", "NN"},
    {"photo", "photo", "NN"},     {"friends", "friend", "NNS"},
    {"heart", "heart", "NN"},     {"world", "world", "NN"},
    {"thoughts", "thought", "NNS"}, {"prayers", "prayer", "NNS"},
    {"love", "love", "NN"},       {"hope", "hope", "NN"},
    {"support", "support", "NN"}, {"link", "link", "NN"},
    {"update", "update", "NN"},   {"story", "story", "NN"},
    {"day", "day", "NN"},         {"life", "life", "NN"}}};
constexpr std::array<Word, 10> kNoiseVerbs = {{
    {"pray", "pray", "VB"},     {"watch", "watch", "VB"},
    {"share", "share", "VB"},   {"donate", "donate", "VB"},
    {"send", "send", "VB"},     {"follow", "follow", "VB"},
    {"read", "read", "VB"},     {"check", "check", "VB"},
    {"support", "support", "VB"}, {"stay", "stay", "VB"}}};

class TweetBuilder {
 public:
  int Add(const std::string& surface, const std::string& lemma, const std::string& pos) {
    tweet_.tokens.push_back(Token{surface, lemma, pos});
    return static_cast<int>(tweet_.tokens.size()) - 1;
  }
  int Add(const Word& w) { return Add(w.surface, w.lemma, w.pos); }
  void Dep(int head, int dependent, const std::string& label) {
    tweet_.deps.push_back(DepEdge{head, dependent, label});
  }
  AnnotatedTweet Finish(std::string id, int64_t ts, const ClassLabel& label, double conf) {
    tweet_.id = std::move(id);
    tweet_.timestamp = ts;
    tweet_.class_label = label;
    tweet_.confidence = conf;
    for (const Token& t : tweet_.tokens) {
      if (!tweet_.text.empty()) tweet_.text.push_back(' ');
      tweet_.text += t.surface;
    }
    return std::move(tweet_);
  }

 private:
  AnnotatedTweet tweet_;
};

template <typename T, std::size_t N>
const T& Pick(const std::array<T, N>& pool, std::mt19937_64& rng) {
  return pool[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

void AddPrefix(TweetBuilder& b, std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      b.Add("RT", "rt", "RT");
      b.Add("@user" + std::to_string(rng() % 50), "@user", "USR");
      b.Add(":", ":", ":");
      break;
    case 1:
      b.Add("BREAKING", "breaking", "NN");
      b.Add(":", ":", ":");
      break;
    case 2:
      b.Add("#NepalQuake", "#nepalquake", "NNP");
      break;
    default:
      break;
  }
}

void AddSuffix(TweetBuilder& b, int root, std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      b.Add("http://t.co/x" + std::to_string(rng() % 1000), "http://t.co", "URL");
      break;
    case 1:
      b.Add("#NepalEarthquake", "#nepalearthquake", "NNP");
      break;
    case 2: {
      const int please = b.Add("please", "please", "UH");
      const int help = b.Add("help", "help", "VB");
      b.Dep(help, please, "discourse");
      if (root >= 0) b.Dep(root, help, "parataxis");
      break;
    }
    default:
      break;
  }
}

AnnotatedTweet FactTweet(const PlantedFact& f, std::mt19937_64& rng, std::string id,
                         int64_t ts, const ClassLabel& label) {
  std::bernoulli_distribution coin(0.5), drop_place(0.3), drop_tail(0.2);
  TweetBuilder b;
  AddPrefix(b, rng);
  int det = -1;
  if (coin(rng)) det = b.Add("the", "the", "DT");
  const int facility = b.Add(f.facility, f.facility, "NN");
  if (det >= 0) b.Dep(facility, det, "det");
  if (!drop_place(rng)) {
    const int in = b.Add("in", "in", "IN");
    const int place = b.Add(f.place, ToLower(f.place), "NNP");
    b.Dep(place, in, "case");
    b.Dep(facility, place, "nmod");
  }
  const int verb = b.Add(f.verb, f.verb_lemma, "VBD");
  b.Dep(verb, facility, "nsubj");
  if (!drop_tail(rng)) {
    const int comma = b.Add(",", ",", ",");
    const int count = b.Add(f.count, f.count, "CD");
    const int group = b.Add(f.group, f.group_lemma, "NNS");
    const int state = b.Add(f.state, f.state_lemma, "VBN");
    b.Dep(verb, comma, "punct");
    b.Dep(group, count, "nummod");
    b.Dep(state, group, "nsubjpass");
    b.Dep(verb, state, "conj");
  }
  AddSuffix(b, verb, rng);
  return b.Finish(std::move(id), ts, label, 0.8 + 0.2 * std::uniform_real_distribution<>()(rng));
}

AnnotatedTweet NoiseTweet(std::mt19937_64& rng, std::string id, int64_t ts,
                          const ClassLabel& label) {
  TweetBuilder b;
  if (std::bernoulli_distribution(0.2)(rng)) AddPrefix(b, rng);
  int root = -1;
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: {  // "so sad news from nepal"
      const int adv = b.Add(Pick(kAdverbs, rng));
      const int adj = b.Add(Pick(kAdjectives, rng));
      root = b.Add(Pick(kNoiseNouns, rng));
      const int from = b.Add("from", "from", "IN");
      const int nepal = b.Add("nepal", "nepal", "NNP");
      b.Dep(adj, adv, "advmod");
      b.Dep(root, adj, "amod");
      b.Dep(nepal, from, "case");
      b.Dep(root, nepal, "nmod");
      break;
    }
    case 1: {  // "pray for nepal , share the video"
      root = b.Add(Pick(kNoiseVerbs, rng));
      const int f = b.Add("for", "for", "IN");
      const int nepal = b.Add("nepal", "nepal", "NNP");
      const int comma = b.Add(",", ",", ",");
      const int v2 = b.Add(Pick(kNoiseVerbs, rng));
      const int the = b.Add("the", "the", "DT");
      const int obj = b.Add(Pick(kNoiseNouns, rng));
      b.Dep(nepal, f, "case");
      b.Dep(root, nepal, "obl");
      b.Dep(root, comma, "punct");
      b.Dep(root, v2, "conj");
      b.Dep(obj, the, "det");
      b.Dep(v2, obj, "obj");
      break;
    }
    case 2: {  // "our thoughts are with everyone in nepal"
      const int our = b.Add("our", "our", "PRP$");
      const int subj = b.Add(Pick(kNoiseNouns, rng));
      const int are = b.Add("are", "be", "VBP");
      const int with = b.Add("with", "with", "IN");
      root = b.Add("everyone", "everyone", "NN");
      b.Dep(subj, our, "nmod:poss");
      b.Dep(root, subj, "nsubj");
      b.Dep(root, are, "cop");
      b.Dep(root, with, "case");
      break;
    }
    default: {  // "i just watch the update , really terrible"
      const int i = b.Add("i", "i", "PRP");
      const int adv = b.Add(Pick(kAdverbs, rng));
      root = b.Add(Pick(kNoiseVerbs, rng));
      const int the = b.Add("the", "the", "DT");
      const int obj = b.Add(Pick(kNoiseNouns, rng));
      const int comma = b.Add(",", ",", ",");
      const int adv2 = b.Add(Pick(kAdverbs, rng));
      const int adj = b.Add(Pick(kAdjectives, rng));
      b.Dep(root, i, "nsubj");
      b.Dep(root, adv, "advmod");
      b.Dep(obj, the, "det");
      b.Dep(root, obj, "obj");
      b.Dep(root, comma, "punct");
      b.Dep(adj, adv2, "advmod");
      b.Dep(root, adj, "xcomp");
      break;
    }
  }
  AddSuffix(b, root, rng);
  return b.Finish(std::move(id), ts, label, 0.6 + 0.4 * std::uniform_real_distribution<>()(rng));
}

}  // namespace

std::string PlantedFact::Sentence() const {
  return facility + " in " + place + " " + verb + " , " + count + " " + group + " " + state;
}

std::string SyntheticCorpus::Gold() const {
  std::string gold;
  for (const PlantedFact& f : facts) gold += f.Sentence() + "\n";
  return gold;
}

Window SyntheticCorpus::AsWindow() const {
  Window w;
  if (!tweets.empty()) {
    w.class_label = tweets.front().class_label;
    w.start = tweets.front().timestamp - tweets.front().timestamp % 86400;
    w.end = w.start + 86400;
  }
  w.tweets = tweets;
  return w;
}

SyntheticCorpus GenerateCorpus(const SyntheticOptions& options) {
  if (options.num_facts < 1 || options.num_facts > static_cast<int>(kFacilities.size())) {
    throw std::invalid_argument("num_facts must lie in [1, 12]");
  }
  if (options.num_tweets < 0) throw std::invalid_argument("num_tweets must be >= 0");
  if (!(options.noise_fraction >= 0.0 && options.noise_fraction < 1.0)) {
    throw std::invalid_argument("noise_fraction must lie in [0, 1)");
  }
  std::mt19937_64 rng(options.seed);
  SyntheticCorpus corpus;
  for (const char* p : kPlaces) corpus.gazetteer.insert(ToLower(p));
  corpus.gazetteer.insert("nepal");

  std::array<int, 12> perm[4];
  for (auto& p : perm) {
    for (int i = 0; i < 12; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
  }
  for (int f = 0; f < options.num_facts; ++f) {
    const Word& verb = kVerbs[perm[2][f]];
    const Word& group = Pick(kGroups, rng);
    const Word& state = Pick(kStates, rng);
    PlantedFact fact{kFacilities[perm[0][f]], kPlaces[perm[1][f]], verb.surface,
                     verb.lemma, kCounts[perm[3][f]], group.surface, group.lemma,
                     state.surface, state.lemma};
    corpus.gold_pairs.emplace(fact.facility, fact.verb_lemma);
    corpus.gold_pairs.emplace(fact.group_lemma, fact.state_lemma);
    corpus.facts.push_back(std::move(fact));
  }

  std::bernoulli_distribution noise(options.noise_fraction);
  std::uniform_int_distribution<int> which_fact(0, options.num_facts - 1);
  std::uniform_int_distribution<int64_t> offset(0, 86399);
  for (int t = 0; t < options.num_tweets; ++t) {
    char id[32];
    std::snprintf(id, sizeof id, "s%llu-%06d",
                  static_cast<unsigned long long>(options.seed), t);
    const int64_t ts = options.day_start + offset(rng);
    if (noise(rng)) {
      corpus.tweets.push_back(NoiseTweet(rng, id, ts, options.label));
    } else {
      corpus.tweets.push_back(
          FactTweet(corpus.facts[which_fact(rng)], rng, id, ts, options.label));
    }
  }
  return corpus;
}

}  // namespace conabs
