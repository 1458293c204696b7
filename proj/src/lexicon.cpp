#include "viralstyle/lexicon.hpp"

#include <algorithm>

#include "viralstyle/error.hpp"

namespace viralstyle {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_lower_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
}

std::string normalize_label(std::string_view raw, std::size_t line) {
  std::string label;
  for (char c : raw) {
    if (c >= 'a' && c <= 'z') c = char(c - 'a' + 'A');
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) throw ParseError("invalid category label '" + std::string(raw) + "'", line);
    label.push_back(c);
  }
  if (label.empty()) throw ParseError("empty category label", line);
  return label;
}

LexEntry parse_entry(std::string_view raw, std::size_t line) {
  std::string lowered;
  lowered.reserve(raw.size());
  for (char c : raw) lowered.push_back(c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : c);

  LexEntry entry;
  const auto star = lowered.find('*');
  if (star == std::string::npos) {
    entry.kind = EntryKind::Exact;
    entry.pattern = lowered;
  } else if (star == lowered.size() - 1) {
    entry.kind = EntryKind::Stem;
    entry.pattern = lowered.substr(0, star);
    if (entry.pattern.size() < 2) {
      throw ParseError("stem '" + std::string(raw) + "' needs at least 2 characters before '*'", line);
    }
  } else {
    throw ParseError("'*' is only allowed as the final character of an entry: '" +
                         std::string(raw) + "'", line);
  }
  if (!is_lower_alpha(entry.pattern)) {
    throw ParseError("entry '" + std::string(raw) + "' must be alphabetic", line);
  }
  return entry;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

CategoryLexicon parse_lexicon(std::string_view text) {
  CategoryLexicon lex;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '!') {
      constexpr std::string_view directive = "!exclude";
      if (line.substr(0, directive.size()) != directive) {
        throw ParseError("unknown directive '" + std::string(line) + "'", line_no);
      }
      for (auto part : split(line.substr(directive.size()), ',')) {
        part = trim(part);
        if (part.empty()) continue;
        lex.excluded_.insert(normalize_label(part, line_no));
      }
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'LABEL: entry, ...' but found '" + std::string(line) + "'",
                       line_no);
    }
    const std::string label = normalize_label(trim(line.substr(0, colon)), line_no);
    auto& entries = lex.categories_[label];
    for (auto part : split(line.substr(colon + 1), ',')) {
      part = trim(part);
      if (part.empty()) continue;
      entries.push_back(parse_entry(part, line_no));
    }
    if (entries.empty()) {
      throw ParseError("category " + label + " has no entries", line_no);
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  }

  lex.build_matcher();
  return lex;
}

void CategoryLexicon::build_matcher() {
  label_order_.clear();
  label_order_.reserve(categories_.size());
  for (const auto& [label, entries] : categories_) label_order_.push_back(label);
  label_excluded_.assign(label_order_.size(), false);
  for (std::size_t i = 0; i < label_order_.size(); ++i) {
    label_excluded_[i] = excluded_.count(label_order_[i]) > 0;
  }

  trie_.assign(1, TrieNode{});
  for (std::size_t idx = 0; idx < label_order_.size(); ++idx) {
    for (const auto& entry : categories_.at(label_order_[idx])) {
      int node = 0;
      for (char c : entry.pattern) {
        int next = trie_[node].next[c - 'a'];
        if (next < 0) {
          next = int(trie_.size());
          trie_[node].next[c - 'a'] = next;
          trie_.emplace_back();  // may reallocate; no references held across it
        }
        node = next;
      }
      auto& slot = entry.kind == EntryKind::Exact ? trie_[node].exact_here
                                                  : trie_[node].stem_here;
      if (std::find(slot.begin(), slot.end(), int(idx)) == slot.end()) {
        slot.push_back(int(idx));
      }
    }
  }
}

std::vector<std::string> CategoryLexicon::categories_of(std::string_view word) const {
  std::vector<std::string> result;
  if (trie_.empty() || word.empty()) return result;

  std::vector<bool> hit(label_order_.size(), false);
  int node = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c < 'a' || c > 'z') break;  // outside the pattern alphabet
    node = trie_[node].next[c - 'a'];
    if (node < 0) break;  // stem hits collected so far still count
    for (int idx : trie_[node].stem_here) hit[idx] = true;
    if (i + 1 == word.size()) {
      for (int idx : trie_[node].exact_here) hit[idx] = true;
    }
  }
  for (std::size_t idx = 0; idx < hit.size(); ++idx) {
    if (hit[idx] && !label_excluded_[idx]) result.push_back(label_order_[idx]);
  }
  return result;  // label_order_ is sorted, so the result is too
}

std::vector<std::string> CategoryLexicon::active_labels() const {
  std::vector<std::string> labels;
  for (const auto& [label, entries] : categories_) {
    if (!excluded_.count(label)) labels.push_back(label);
  }
  return labels;
}

bool CategoryLexicon::has_label(std::string_view label) const {
  return categories_.find(std::string(label)) != categories_.end();
}

bool CategoryLexicon::is_excluded(std::string_view label) const {
  return excluded_.count(std::string(label)) > 0;
}

std::size_t CategoryLexicon::entry_count() const {
  std::size_t n = 0;
  for (const auto& [label, entries] : categories_) n += entries.size();
  return n;
}

}  // namespace viralstyle
