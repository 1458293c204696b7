#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace viralstyle {

struct RawDocument {
  std::string id;
  std::string text;
};

struct Token {
  std::string surface;     // original substring, apostrophes and case kept
  std::string normalized;  // lowercase letters only
  int syllables = 0;
};

/// Half-open range [begin, end) of token indices forming one sentence.
struct SentenceRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const SentenceRange&, const SentenceRange&) = default;
};

struct TokenizedDocument {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<SentenceRange> sentence_bounds;  // disjoint, contiguous, covering
};

/// Splits text into maximal runs of ASCII letters. An apostrophe between two
/// letters extends the run; it is kept in `surface` and dropped from
/// `normalized`. Digits, punctuation and everything else separate tokens, so
/// hyphenated forms split. Sentence bounds are filled as by
/// segment_sentences(). Pure and deterministic; empty text gives an empty
/// document.
TokenizedDocument tokenize(const RawDocument& doc);

/// Sentence boundaries as token-index ranges. A sentence ends at '.', '!',
/// '?' or ';' followed by whitespace and a capital letter, or at end of
/// text. Periods inside decimal numbers and after known abbreviations
/// (e.g., i.e., et al., vs., Fig., Eq., cf., ...) do not end sentences.
/// Every document with at least one token yields at least one sentence.
std::vector<SentenceRange> segment_sentences(const RawDocument& doc);

/// Heuristic syllable count for a lowercase alphabetic word: the number of
/// maximal vowel-letter groups (a, e, i, o, u, y), minus one for a terminal
/// silent 'e' (word-final "-e", "-es" or "-ed") unless the 'e' follows an
/// 'l', so that a consonant + "-le" ending stays a pronounced group.
/// Words with at least one vowel letter count at least 1; vowel-free
/// strings count 0.
int count_syllables(std::string_view word);

/// Fog "complex word" test: three or more syllables.
bool is_complex(const Token& token);
bool is_complex(int syllables);

}  // namespace viralstyle
