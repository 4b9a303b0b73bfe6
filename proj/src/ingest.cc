#include "conabs/ingest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <unordered_set>

#include "conabs/lexicon.h"
#include "conabs/text.h"
#include "json.hpp"

namespace conabs {

using nlohmann::json;

ClassLabel ClassLabel::Other(std::string name) {
  return ClassLabel(Kind::kOther, std::move(name));
}

ClassLabel ClassLabel::Parse(const std::string& name) {
  const std::string lower = ToLower(name);
  if (lower == "missing" || lower == "missing, trapped, or found people") {
    return Missing();
  }
  if (lower == "infrastructure" || lower == "infrastructure and utilities") {
    return Infrastructure();
  }
  if (lower == "shelter" || lower == "shelter and supplies") return Shelter();
  return Other(name);
}

std::string ClassLabel::Name() const {
  switch (kind_) {
    case Kind::kMissing:
      return "Missing";
    case Kind::kInfrastructure:
      return "Infrastructure";
    case Kind::kShelter:
      return "Shelter";
    case Kind::kOther:
      break;
  }
  return other_;
}

namespace {

const json& Require(const json& obj, const char* key, json::value_t type) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  const bool ok = it->type() == type ||
                  (type == json::value_t::number_float && it->is_number()) ||
                  (type == json::value_t::number_integer &&
                   it->is_number_integer());
  if (!ok) throw InputError(std::string("field '") + key + "' has wrong type");
  return *it;
}

int RequireIndex(const json& obj, const char* key, std::size_t token_count) {
  const json& v = Require(obj, key, json::value_t::number_integer);
  const int64_t idx = v.get<int64_t>();
  if (idx < 0 || static_cast<std::size_t>(idx) >= token_count) {
    throw InputError(std::string("index '") + key + "'=" + std::to_string(idx) +
                     " out of range for " + std::to_string(token_count) +
                     " tokens");
  }
  return static_cast<int>(idx);
}

}  // namespace

AnnotatedTweet ParseRecord(const std::string& line) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!rec.is_object()) throw InputError("record is not a JSON object");

  AnnotatedTweet t;
  t.id = Require(rec, "id", json::value_t::string).get<std::string>();
  t.timestamp = Require(rec, "ts", json::value_t::number_integer).get<int64_t>();
  t.class_label = ClassLabel::Parse(
      Require(rec, "class", json::value_t::string).get<std::string>());
  t.confidence = Require(rec, "conf", json::value_t::number_float).get<double>();
  if (!(t.confidence >= 0.0 && t.confidence <= 1.0)) {
    throw InputError("confidence outside [0,1]");
  }
  t.text = Require(rec, "text", json::value_t::string).get<std::string>();

  for (const json& tok : Require(rec, "tokens", json::value_t::array)) {
    if (!tok.is_object()) throw InputError("token is not an object");
    Token token;
    token.surface = Require(tok, "surface", json::value_t::string).get<std::string>();
    token.lemma = ToLower(Require(tok, "lemma", json::value_t::string).get<std::string>());
    token.pos = Require(tok, "pos", json::value_t::string).get<std::string>();
    if (token.surface.empty()) throw InputError("empty token surface");
    if (token.pos.empty()) throw InputError("empty POS tag");
    if (token.lemma.empty()) token.lemma = ToLower(token.surface);
    t.tokens.push_back(std::move(token));
  }

  for (const json& dep : Require(rec, "deps", json::value_t::array)) {
    if (!dep.is_object()) throw InputError("dependency is not an object");
    DepEdge edge;
    edge.head = RequireIndex(dep, "head", t.tokens.size());
    edge.dependent = RequireIndex(dep, "dep", t.tokens.size());
    edge.label = Require(dep, "label", json::value_t::string).get<std::string>();
    if (edge.head == edge.dependent) {
      throw InputError("dependency edge with head == dependent");
    }
    t.deps.push_back(std::move(edge));
  }

  if (auto it = rec.find("events"); it != rec.end() && !it->is_null()) {
    if (!it->is_array()) throw InputError("field 'events' has wrong type");
    std::vector<int> events;
    for (const json& e : *it) {
      if (!e.is_number_integer()) throw InputError("event index is not an integer");
      const int64_t idx = e.get<int64_t>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= t.tokens.size()) {
        throw InputError("event index " + std::to_string(idx) + " out of range");
      }
      events.push_back(static_cast<int>(idx));
    }
    t.event_tokens = std::move(events);
  }
  return t;
}

std::string SerializeRecord(const AnnotatedTweet& t) {
  json rec;
  rec["id"] = t.id;
  rec["ts"] = t.timestamp;
  rec["class"] = t.class_label.Name();
  rec["conf"] = t.confidence;
  rec["text"] = t.text;
  json tokens = json::array();
  for (const Token& tok : t.tokens) {
    tokens.push_back({{"surface", tok.surface}, {"lemma", tok.lemma}, {"pos", tok.pos}});
  }
  rec["tokens"] = std::move(tokens);
  json deps = json::array();
  for (const DepEdge& e : t.deps) {
    deps.push_back({{"head", e.head}, {"dep", e.dependent}, {"label", e.label}});
  }
  rec["deps"] = std::move(deps);
  if (t.event_tokens) rec["events"] = *t.event_tokens;
  return rec.dump();
}

ParseResult ParseCorpus(std::istream& in, double min_confidence) {
  if (!in) throw InputError("unreadable corpus stream");
  ParseResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    AnnotatedTweet t;
    try {
      t = ParseRecord(line);
    } catch (const InputError& e) {
      result.errors.push_back({line_no, e.what()});
      continue;
    }
    if (t.tokens.empty()) {
      if (!t.text.empty()) {
        result.warnings.push_back({line_no, "tweet '" + t.id + "' has text but no tokens; dropped"});
      }
      continue;
    }
    if (t.confidence < min_confidence) {
      ++result.below_confidence;
      continue;
    }
    result.tweets.push_back(std::move(t));
  }
  if (in.bad()) throw InputError("read error on corpus stream");
  return result;
}

ParseResult ParseCorpusFile(const std::string& path, double min_confidence) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file: " + path);
  return ParseCorpus(in, min_confidence);
}

Window MakeWindow(const std::vector<AnnotatedTweet>& tweets,
                  const ClassLabel& label, int64_t start, int64_t end,
                  double dedup_jaccard, ExecutionPolicy policy) {
  if (start > end) throw InputError("window start is after window end");
  if (!(dedup_jaccard >= 0.0 && dedup_jaccard <= 1.0)) {
    throw InputError("dedup threshold outside [0,1]");
  }
  Window window;
  window.class_label = label;
  window.start = start;
  window.end = end;

  std::vector<const AnnotatedTweet*> in_range;
  for (const AnnotatedTweet& t : tweets) {
    if (t.class_label == label && t.timestamp >= start && t.timestamp < end) {
      in_range.push_back(&t);
    }
  }
  std::stable_sort(in_range.begin(), in_range.end(),
                   [](const AnnotatedTweet* a, const AnnotatedTweet* b) {
                     if (a->timestamp != b->timestamp) return a->timestamp < b->timestamp;
                     return a->id < b->id;
                   });

  std::unordered_set<std::string> seen_text;
  std::vector<const AnnotatedTweet*> distinct;
  for (const AnnotatedTweet* t : in_range) {
    if (seen_text.insert(t->text).second) distinct.push_back(t);
  }

  // Content-word lemma sets as interned id sets.
  std::map<std::string, int> ids;
  std::vector<IdSet> sets;
  sets.reserve(distinct.size());
  for (const AnnotatedTweet* t : distinct) {
    IdSet s;
    for (const ContentWord& w : ExtractContentWords(*t)) {
      auto [it, inserted] = ids.emplace(w.lemma, static_cast<int>(ids.size()));
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  const std::vector<bool> keep =
      kernels::NearDuplicateKeep(sets, dedup_jaccard, policy);
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (keep[i]) window.tweets.push_back(*distinct[i]);
  }
  return window;
}

std::pair<int64_t, int64_t> DayRange(const std::string& date) {
  using namespace std::chrono;
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  if (date.size() != 10 ||
      std::sscanf(date.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw InputError("malformed date '" + date + "', expected YYYY-MM-DD");
  }
  const year_month_day ymd{year{y}, month{m}, day{d}};
  if (!ymd.ok()) throw InputError("invalid calendar date '" + date + "'");
  const int64_t begin = duration_cast<seconds>(sys_days{ymd}.time_since_epoch()).count();
  return {begin, begin + 86400};
}

std::string WindowId(const Window& window) {
  return window.class_label.Name() + "/" + std::to_string(window.start) + "-" +
         std::to_string(window.end);
}

}  // namespace conabs
