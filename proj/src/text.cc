#include "conabs/text.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace conabs {

namespace {

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '#' || c == '@' ||
         c == '_' || (static_cast<unsigned char>(c) & 0x80);
}

// Characters allowed inside a token when flanked by word characters:
// "7.9", "don't", "c-130j", "25,000".
bool IsJoiner(char c) { return c == '.' || c == ',' || c == '\'' || c == '-'; }

}  // namespace

bool IsNounTag(std::string_view pos) { return pos.starts_with("NN"); }

bool IsProperNounTag(std::string_view pos) { return pos.starts_with("NNP"); }

bool IsVerbTag(std::string_view pos) { return pos.starts_with("VB"); }

bool IsCardinalTag(std::string_view pos) { return pos == "CD"; }

bool IsHashtag(std::string_view surface) {
  return surface.size() > 1 && surface.front() == '#';
}

bool IsMention(std::string_view surface) {
  return !surface.empty() && surface.front() == '@';
}

bool IsUrl(std::string_view surface) {
  return surface.starts_with("http://") || surface.starts_with("https://") ||
         surface.starts_with("www.");
}

bool IsRetweetMarker(std::string_view surface) {
  return surface.size() == 2 && (surface[0] == 'R' || surface[0] == 'r') &&
         (surface[1] == 'T' || surface[1] == 't');
}

bool IsUncountedToken(std::string_view surface) {
  return surface == "#" || IsMention(surface) || IsUrl(surface) ||
         IsRetweetMarker(surface);
}

bool IsLightVerb(std::string_view lemma) {
  static constexpr std::array<std::string_view, 24> kLight = {
      "be",   "is",  "are",   "was",  "were", "been", "being", "am",
      "have", "has", "had",   "do",   "does", "did",  "say",   "says",
      "said", "get", "gets",  "got",  "will", "would", "can",  "could"};
  return std::find(kLight.begin(), kLight.end(), lemma) != kLight.end();
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsLowercase(std::string_view s) {
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c));
  });
}

std::string NormalizeLemma(std::string_view lemma) {
  if (IsHashtag(lemma)) lemma.remove_prefix(1);
  return ToLower(lemma);
}

std::vector<std::string> TokenizePlain(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    size_t end = i;
    while (end < n && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view chunk = text.substr(i, end - i);
    i = end;
    if (IsUrl(chunk)) {
      tokens.emplace_back(chunk);
      continue;
    }
    // Split the whitespace chunk on punctuation, keeping joiners that sit
    // between two word characters.
    size_t p = 0;
    while (p < chunk.size()) {
      while (p < chunk.size() && !IsWordChar(chunk[p])) ++p;
      if (p >= chunk.size()) break;
      size_t q = p;
      while (q < chunk.size()) {
        if (IsWordChar(chunk[q])) {
          ++q;
        } else if (IsJoiner(chunk[q]) && q + 1 < chunk.size() &&
                   IsWordChar(chunk[q + 1])) {
          q += 2;
        } else {
          break;
        }
      }
      tokens.push_back(ToLower(chunk.substr(p, q - p)));
      p = q;
    }
  }
  return tokens;
}

int CountSummaryWords(std::string_view text) {
  int count = 0;
  for (const std::string& t : TokenizePlain(text)) {
    if (!IsUncountedToken(t)) ++count;
  }
  return count;
}

}  // namespace conabs
