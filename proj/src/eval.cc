#include "conabs/eval.h"

#include <map>
#include <stdexcept>

#include "json.hpp"

#include "conabs/text.h"

namespace conabs {

namespace {

std::map<std::string, int> Unigrams(const std::string& text, int* total) {
  std::map<std::string, int> counts;
  *total = 0;
  for (const std::string& tok : TokenizePlain(text)) {
    if (IsUncountedToken(tok)) continue;
    ++counts[NormalizeLemma(tok)];
    ++*total;
  }
  return counts;
}

}  // namespace

std::string Summary::Text() const {
  std::string out;
  for (const std::string& s : sentences) {
    if (!out.empty()) out.push_back('\n');
    out += s;
  }
  return out;
}

double Rouge1Recall(const std::string& candidate, const std::string& gold) {
  int gold_total = 0, cand_total = 0;
  const auto gold_counts = Unigrams(gold, &gold_total);
  if (gold_total == 0) throw std::invalid_argument("gold summary has no unigrams");
  const auto cand_counts = Unigrams(candidate, &cand_total);
  int matched = 0;
  for (const auto& [word, count] : gold_counts) {
    auto it = cand_counts.find(word);
    if (it != cand_counts.end()) matched += std::min(count, it->second);
  }
  return static_cast<double>(matched) / gold_total;
}

double AssociationPrecision(const std::set<NounEvent>& predicted,
                            const std::set<NounEvent>& gold) {
  if (predicted.empty()) {
    throw std::invalid_argument("association precision of an empty prediction");
  }
  std::size_t hits = 0;
  for (const NounEvent& p : predicted) hits += gold.count(p);
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

double StageTimings::StageSum() const {
  double sum = 0.0;
  for (const auto& [name, ms] : stages) sum += ms;
  return sum;
}

std::string StageTimings::ToJson() const {
  nlohmann::ordered_json j;
  for (const auto& [name, ms] : stages) j[name] = ms;
  j["total"] = total_ms;
  return j.dump();
}

}  // namespace conabs
