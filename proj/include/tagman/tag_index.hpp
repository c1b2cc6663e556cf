#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tagman {

class TagError : public std::runtime_error {
 public:
  enum class Code { EmptyAfterNormalization, EmptyQuery };

  TagError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// Canonical tag form: ASCII case folding, surrounding whitespace trimmed,
// internal whitespace runs collapsed to a single hyphen. Idempotent.
// Non-ASCII bytes pass through unchanged.
std::string normalize(std::string_view raw);
std::optional<std::string> try_normalize(std::string_view raw);

struct Source {
  enum class Kind { System, User, Peer };

  Kind kind = Kind::System;
  std::string id;  // user id or peer node id; empty for System

  static Source system() { return {Kind::System, ""}; }
  static Source user(std::string id) { return {Kind::User, std::move(id)}; }
  static Source peer(std::string id) { return {Kind::Peer, std::move(id)}; }

  std::string to_string() const;
  static std::optional<Source> from_string(std::string_view text);

  auto operator<=>(const Source&) const = default;
};

// One (tag, command) association. Identity for indexing and merging is the
// (tag, command, source) triple; raw_tag is the spelling before
// normalization and created_at the ingest time in seconds since the epoch.
struct TagMapping {
  std::string tag;
  std::string raw_tag;
  std::string command;
  Source source;
  std::int64_t created_at = 0;

  bool operator==(const TagMapping&) const = default;
};

TagMapping make_mapping(std::string_view raw_tag, std::string_view command,
                        Source source, std::int64_t created_at);

// Tags under "example:" form a reserved channel whose command slot carries a
// full command line (spaces allowed) instead of a command name.
inline constexpr std::string_view kExampleTagPrefix = "example:";
bool is_example_tag(std::string_view tag);
std::string example_tag_for(std::string_view command);

// True when the mapping satisfies the store invariants: normalized tag,
// non-empty command, command free of whitespace except on the example
// channel where only tab and newline are excluded.
bool is_valid_mapping(const TagMapping& m);

// Inverted index from normalized tag to commands, with the exact inverse
// command -> tags map maintained alongside.
class TagIndex {
 public:
  struct Posting {
    std::string command;
    Source source;

    auto operator<=>(const Posting&) const = default;
  };
  using PostingMap = std::map<Posting, std::int64_t>;  // value: created_at

  // Returns true when the (tag, command, source) triple was not present.
  // Re-adding keeps the earlier created_at. Throws std::invalid_argument on
  // a mapping violating is_valid_mapping.
  bool add(const TagMapping& m);

  // Returns true when a mapping was removed; removing an absent mapping is
  // a no-op.
  bool remove(std::string_view tag, std::string_view command, const Source& source);

  bool contains(std::string_view tag, std::string_view command, const Source& source) const;

  const std::map<std::string, PostingMap, std::less<>>& postings() const { return postings_; }
  const std::map<std::string, std::set<std::string>, std::less<>>& commands() const {
    return by_command_;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::vector<TagMapping> all_mappings() const;
  void merge_from(const TagIndex& other);

  bool operator==(const TagIndex& other) const { return postings_ == other.postings_; }

 private:
  std::map<std::string, PostingMap, std::less<>> postings_;
  std::map<std::string, std::set<std::string>, std::less<>> by_command_;
  std::size_t size_ = 0;
};

// Set union keyed by (tag, command, source); duplicates keep the earlier
// created_at. Commutative, associative, idempotent.
TagIndex merge_stores(const TagIndex& a, const TagIndex& b);

class DictionaryError : public std::runtime_error {
 public:
  explicit DictionaryError(const std::string& message) : std::runtime_error(message) {}
};

// Synonym groups for fallback query expansion. One group per line,
// whitespace-separated words, normalized on load. A word may appear in at
// most one group.
class SynonymDictionary {
 public:
  static SynonymDictionary parse(std::string_view text);
  static const SynonymDictionary& default_dictionary();

  const std::set<std::string>* group_for(std::string_view word) const;
  const std::vector<std::set<std::string>>& groups() const { return groups_; }

 private:
  std::vector<std::set<std::string>> groups_;
  std::map<std::string, std::size_t, std::less<>> word_to_group_;
};

// Scores are exact rationals over denominator 20: a distinct-tag match is
// worth 20, the usage-frequency bonus one unit per selection capped at 10.
struct RankedResult {
  std::string command;
  std::int64_t score_x20 = 0;
  std::vector<std::string> matched_tags;
  bool via_dictionary = false;

  bool operator==(const RankedResult&) const = default;
};

std::string format_score(std::int64_t score_x20);

using SelectionCounts = std::map<std::string, std::uint64_t>;

// Two-phase query: exact candidates first; dictionary expansion runs only
// when the exact phase matched nothing. Results sorted by descending score,
// ties broken lexicographically by command. Throws TagError(EmptyQuery)
// when no query tag survives normalization.
std::vector<RankedResult> lookup(const TagIndex& index,
                                 const std::vector<std::string>& query_tags,
                                 const SynonymDictionary* dictionary = nullptr,
                                 const SelectionCounts* selections = nullptr);

}  // namespace tagman
