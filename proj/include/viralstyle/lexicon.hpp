#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace viralstyle {

enum class EntryKind { Exact, Stem };

struct LexEntry {
  std::string pattern;  // lowercase letters, '*' already stripped for stems
  EntryKind kind = EntryKind::Exact;

  friend auto operator<=>(const LexEntry&, const LexEntry&) = default;
};

/// Immutable word-class dictionary: named categories of exact words and
/// wildcard stems, plus a set of labels excluded from analysis. Lookups go
/// through a prefix trie; concurrent reads are safe after construction.
class CategoryLexicon {
 public:
  CategoryLexicon() = default;

  /// Labels matching `word`: exact entries equal to it plus stem entries it
  /// starts with, unioned and sorted. Excluded labels are never returned.
  /// `word` is expected lowercase alphabetic.
  std::vector<std::string> categories_of(std::string_view word) const;

  const std::map<std::string, std::vector<LexEntry>>& categories() const {
    return categories_;
  }
  const std::set<std::string>& excluded_labels() const { return excluded_; }

  /// Sorted non-excluded labels; the row set of dominance reports.
  std::vector<std::string> active_labels() const;

  bool has_label(std::string_view label) const;
  bool is_excluded(std::string_view label) const;

  std::size_t entry_count() const;

 private:
  friend CategoryLexicon parse_lexicon(std::string_view text);

  void build_matcher();

  struct TrieNode {
    int next[26];
    std::vector<int> exact_here;  // category indices, deduplicated
    std::vector<int> stem_here;
    TrieNode() { for (int& n : next) n = -1; }
  };

  std::map<std::string, std::vector<LexEntry>> categories_;
  std::set<std::string> excluded_;
  std::vector<std::string> label_order_;  // index -> label, sorted
  std::vector<bool> label_excluded_;
  std::vector<TrieNode> trie_;
};

/// Parses the lexicon line format:
///   - '#' starts a comment, blank lines are ignored
///   - category line:  LABEL: entry, entry*, ...
///   - directive line: !exclude LABEL, LABEL, ...
/// Entries are case-insensitive and must be alphabetic, with an optional
/// trailing '*' marking a stem (prefix of length >= 2). Repeated labels merge
/// and duplicate (label, pattern) pairs collapse. Throws ParseError with the
/// offending line number on malformed input and DataError on empty categories.
CategoryLexicon parse_lexicon(std::string_view text);

}  // namespace viralstyle
