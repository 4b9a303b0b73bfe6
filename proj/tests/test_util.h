// Helpers shared by the unit and acceptance tests.

#ifndef CONABS_TESTS_TEST_UTIL_H_
#define CONABS_TESTS_TEST_UTIL_H_

#include <sstream>
#include <string>
#include <vector>

#include "conabs/ingest.h"
#include "conabs/text.h"

namespace conabs::testing {

inline std::string Fixture(const std::string& name) {
  return std::string(CONABS_FIXTURE_DIR) + "/" + name;
}

// "surface/POS[/lemma] ..." -> tokens; the lemma defaults to the lowercased
// surface.
inline std::vector<Token> Tokens(const std::string& tagged) {
  std::vector<Token> out;
  std::istringstream in(tagged);
  for (std::string item; in >> item;) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t p = item.find('/'); p != std::string::npos; p = item.find('/', start)) {
      parts.push_back(item.substr(start, p - start));
      start = p + 1;
    }
    parts.push_back(item.substr(start));
    Token t;
    t.surface = parts.at(0);
    t.pos = parts.size() > 1 ? parts[1] : "NN";
    t.lemma = parts.size() > 2 ? parts[2] : ToLower(t.surface);
    out.push_back(std::move(t));
  }
  return out;
}

inline AnnotatedTweet Tweet(const std::string& id, int64_t ts, const std::string& tagged,
                            std::vector<DepEdge> deps = {},
                            ClassLabel label = ClassLabel::Infrastructure()) {
  AnnotatedTweet t;
  t.id = id;
  t.timestamp = ts;
  t.class_label = std::move(label);
  t.confidence = 0.9;
  t.tokens = Tokens(tagged);
  for (const Token& tok : t.tokens) {
    if (!t.text.empty()) t.text.push_back(' ');
    t.text += tok.surface;
  }
  t.deps = std::move(deps);
  return t;
}

inline Window WindowOf(std::vector<AnnotatedTweet> tweets) {
  Window w;
  w.class_label = ClassLabel::Infrastructure();
  w.start = 0;
  w.end = 4'000'000'000;
  w.tweets = std::move(tweets);
  return w;
}

}  // namespace conabs::testing

#endif  // CONABS_TESTS_TEST_UTIL_H_
