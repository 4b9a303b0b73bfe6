// Annotated tweet records: JSONL parsing/validation, serialization, and
// class/day windows with near-duplicate removal.

#ifndef CONABS_INGEST_H_
#define CONABS_INGEST_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conabs/kernels.h"

namespace conabs {

// Raised for unrecoverable input problems (unreadable stream, bad ranges).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  std::string surface;
  std::string lemma;  // lowercase
  std::string pos;    // Penn-style tag

  bool operator==(const Token&) const = default;
};

struct DepEdge {
  int head = 0;
  int dependent = 0;
  std::string label;

  bool operator==(const DepEdge&) const = default;
};

class ClassLabel {
 public:
  enum class Kind { kMissing, kInfrastructure, kShelter, kOther };

  ClassLabel() = default;
  static ClassLabel Missing() { return ClassLabel(Kind::kMissing, ""); }
  static ClassLabel Infrastructure() {
    return ClassLabel(Kind::kInfrastructure, "");
  }
  static ClassLabel Shelter() { return ClassLabel(Kind::kShelter, ""); }
  static ClassLabel Other(std::string name);

  // Case-insensitive; accepts the canonical names and the long AIDR names
  // ("missing, trapped, or found people", "infrastructure and utilities",
  // "shelter and supplies"). Anything else becomes Other(name).
  static ClassLabel Parse(const std::string& name);

  Kind kind() const { return kind_; }
  // Canonical name used for serialization.
  std::string Name() const;

  bool operator==(const ClassLabel&) const = default;

 private:
  ClassLabel(Kind kind, std::string other) : kind_(kind), other_(std::move(other)) {}

  Kind kind_ = Kind::kOther;
  std::string other_;
};

struct AnnotatedTweet {
  std::string id;
  int64_t timestamp = 0;  // UTC seconds
  ClassLabel class_label;
  double confidence = 0.0;
  std::string text;
  std::vector<Token> tokens;
  std::vector<DepEdge> deps;
  std::optional<std::vector<int>> event_tokens;

  bool operator==(const AnnotatedTweet&) const = default;
};

struct LineError {
  int line = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::vector<AnnotatedTweet> tweets;
  std::vector<LineError> errors;
  // Records dropped for having text but no tokens (not an error).
  std::vector<LineError> warnings;
  int below_confidence = 0;
};

// Reads line-delimited annotated records. Schema violations are collected
// per line and parsing continues; an unreadable stream throws InputError.
ParseResult ParseCorpus(std::istream& in, double min_confidence);
ParseResult ParseCorpusFile(const std::string& path, double min_confidence);

// Parses and validates a single record. Throws InputError on violations.
AnnotatedTweet ParseRecord(const std::string& line);

// One JSONL line (no trailing newline) in the ingest schema.
std::string SerializeRecord(const AnnotatedTweet& tweet);

struct Window {
  ClassLabel class_label;
  int64_t start = 0;  // inclusive
  int64_t end = 0;    // exclusive
  std::vector<AnnotatedTweet> tweets;
};

inline constexpr double kDefaultDedupJaccard = 0.7;

// Keeps tweets of `label` with start <= ts < end, ordered by (timestamp, id),
// then drops exact text duplicates and near duplicates (content-word lemma
// Jaccard >= dedup_jaccard) of an earlier kept tweet.
Window MakeWindow(const std::vector<AnnotatedTweet>& tweets,
                  const ClassLabel& label, int64_t start, int64_t end,
                  double dedup_jaccard = kDefaultDedupJaccard,
                  ExecutionPolicy policy = ExecutionPolicy::kParallel);

// "<class>/<start>-<end>", used to label summaries.
std::string WindowId(const Window& window);

// [00:00, 24:00) UTC of a "YYYY-MM-DD" date. Throws InputError when malformed.
std::pair<int64_t, int64_t> DayRange(const std::string& date);

}  // namespace conabs

#endif  // CONABS_INGEST_H_
