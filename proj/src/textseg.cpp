#include "viralstyle/textseg.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

namespace viralstyle {

namespace {

// ASCII-only classification; locale must not leak into tokenization.
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
char to_lower(char c) { return is_upper(c) ? char(c - 'A' + 'a') : c; }
bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// Right single quotation mark U+2019, the common typographic apostrophe.
bool is_curly_apostrophe(std::string_view text, std::size_t i) {
  return i + 2 < text.size() && text[i] == '\xe2' && text[i + 1] == '\x80' &&
         text[i + 2] == '\x99';
}

// Sorted; periods after these never end a sentence.
constexpr std::array<std::string_view, 17> kAbbreviations = {
    "al.", "ca.", "cf.", "e.g.", "eq.", "eqs.", "etc.", "fig.", "figs.",
    "i.e.", "no.", "nos.", "ref.", "refs.", "resp.", "sec.", "vs."};
static_assert(std::is_sorted(kAbbreviations.begin(), kAbbreviations.end()));

bool is_abbreviation(std::string_view candidate) {
  return std::binary_search(kAbbreviations.begin(), kAbbreviations.end(), candidate);
}

struct PlacedToken {
  Token token;
  std::size_t offset;  // byte position of the first character
};

std::vector<PlacedToken> scan_tokens(std::string_view text) {
  std::vector<PlacedToken> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_letter(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::string normalized;
    while (i < n) {
      if (is_letter(text[i])) {
        normalized.push_back(to_lower(text[i]));
        ++i;
      } else if (i > start && text[i] == '\'' && i + 1 < n && is_letter(text[i + 1])) {
        ++i;  // internal apostrophe: kept in surface, dropped from normalized
      } else if (i > start && is_curly_apostrophe(text, i) && i + 3 < n &&
                 is_letter(text[i + 3])) {
        i += 3;
      } else {
        break;
      }
    }
    Token tok;
    tok.surface = std::string(text.substr(start, i - start));
    tok.normalized = std::move(normalized);
    tok.syllables = count_syllables(tok.normalized);
    out.push_back({std::move(tok), start});
  }
  return out;
}

// Byte positions just after each sentence terminator.
std::vector<std::size_t> scan_breaks(std::string_view text) {
  std::vector<std::size_t> breaks;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?' && c != ';') continue;
    if (c == '.') {
      if (i > 0 && i + 1 < n && is_digit(text[i - 1]) && is_digit(text[i + 1])) {
        continue;  // decimal point
      }
      std::size_t k = i;
      while (k > 0 && (is_letter(text[k - 1]) || text[k - 1] == '.')) --k;
      std::string candidate;
      candidate.reserve(i + 1 - k);
      for (std::size_t p = k; p <= i; ++p) candidate.push_back(to_lower(text[p]));
      if (is_abbreviation(candidate)) continue;
    }
    std::size_t j = i + 1;
    while (j < n && is_space(text[j])) ++j;
    if (j == n) {
      breaks.push_back(i + 1);
    } else if (j > i + 1 && is_upper(text[j])) {
      breaks.push_back(i + 1);
    }
  }
  return breaks;
}

std::vector<SentenceRange> bounds_from(const std::vector<PlacedToken>& tokens,
                                       const std::vector<std::size_t>& breaks,
                                       std::size_t text_size) {
  std::vector<SentenceRange> bounds;
  std::size_t ti = 0;
  auto close_segment = [&](std::size_t limit) {
    const std::size_t first = ti;
    while (ti < tokens.size() && tokens[ti].offset < limit) ++ti;
    if (ti > first) bounds.push_back({first, ti});
  };
  for (std::size_t b : breaks) close_segment(b);
  close_segment(text_size + 1);  // trailing text without a terminator
  return bounds;
}

}  // namespace

int count_syllables(std::string_view word) {
  int groups = 0;
  std::size_t last_start = 0, last_end = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (is_vowel(word[i])) {
      if (!in_group) {
        ++groups;
        in_group = true;
        last_start = i;
      }
      last_end = i + 1;
    } else {
      in_group = false;
    }
  }
  if (groups == 0) return 0;
  if (groups >= 2 && last_end - last_start == 1 && word[last_start] == 'e' &&
      word[last_start - 1] != 'l') {
    const std::string_view tail = word.substr(last_end);
    if (tail.empty() || tail == "s" || tail == "d") --groups;
  }
  return std::max(groups, 1);
}

bool is_complex(int syllables) { return syllables >= 3; }
bool is_complex(const Token& token) { return is_complex(token.syllables); }

TokenizedDocument tokenize(const RawDocument& doc) {
  TokenizedDocument out;
  out.doc_id = doc.id;
  auto placed = scan_tokens(doc.text);
  out.sentence_bounds = bounds_from(placed, scan_breaks(doc.text), doc.text.size());
  out.tokens.reserve(placed.size());
  for (auto& p : placed) out.tokens.push_back(std::move(p.token));
  return out;
}

std::vector<SentenceRange> segment_sentences(const RawDocument& doc) {
  return bounds_from(scan_tokens(doc.text), scan_breaks(doc.text), doc.text.size());
}

}  // namespace viralstyle
