// Token-level helpers shared by every stage: POS predicates, Twitter markers,
// lemma normalization and the plain tokenizer used for word counting/ROUGE.

#ifndef CONABS_TEXT_H_
#define CONABS_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace conabs {

// Penn-style POS classes.
bool IsNounTag(std::string_view pos);        // NN, NNS, NNP, NNPS
bool IsProperNounTag(std::string_view pos);  // NNP, NNPS
bool IsVerbTag(std::string_view pos);        // VB*
bool IsCardinalTag(std::string_view pos);    // CD

bool IsHashtag(std::string_view surface);
bool IsMention(std::string_view surface);
bool IsUrl(std::string_view surface);
bool IsRetweetMarker(std::string_view surface);

// True for tokens that the summary length rule ignores: mentions, RT markers,
// URLs and bare '#' characters. Hashtags with a body still count as words.
bool IsUncountedToken(std::string_view surface);

// Auxiliary / light verbs kept out of the event vocabulary.
bool IsLightVerb(std::string_view lemma);

std::string ToLower(std::string_view s);
bool IsLowercase(std::string_view s);

// Lowercases and strips a leading '#'.
std::string NormalizeLemma(std::string_view lemma);

// Splits free text into lowercased word tokens. Punctuation is stripped from
// token edges; '#', '@' prefixes and URLs are kept intact so callers can apply
// the counting rule.
std::vector<std::string> TokenizePlain(std::string_view text);

// Number of words in `text` under the length rule (excluding #,@,RT,URLs).
int CountSummaryWords(std::string_view text);

}  // namespace conabs

#endif  // CONABS_TEXT_H_
