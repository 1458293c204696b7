#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "viralstyle/lexicon.hpp"
#include "viralstyle/stats.hpp"
#include "viralstyle/textseg.hpp"

namespace viralstyle {

/// Token totals for one corpus: overall size and, for every non-excluded
/// class of the lexicon it was counted with, the number of token occurrences
/// belonging to that class. A token that matches several classes counts once
/// in each.
struct CorpusCounts {
  std::int64_t size = 0;
  std::map<std::string, std::int64_t> class_freq;
};

CorpusCounts corpus_counts(const std::vector<TokenizedDocument>& docs,
                           const CategoryLexicon& lex);

/// class_freq[label] / size. Throws DataError when size is 0. Labels absent
/// from the counts have coverage 0.
double class_coverage(const CorpusCounts& counts, const std::string& label);

enum class Band { Dominant, Avoided, Filtered, Undefined };

std::string_view band_name(Band band);

/// Classification of a defined dominance value: > 1.2 dominant, < 0.8
/// avoided, otherwise filtered.
Band band_for(double dominance);

struct DominanceRow {
  std::string label;
  double coverage_target = 0.0;
  double coverage_control = 0.0;
  std::optional<double> dominance;  // empty iff control coverage is 0
  Band band = Band::Undefined;
};

/// Dominance of one class: coverage in `target` over coverage in `control`.
/// Zero control coverage yields band Undefined with no ratio rather than a
/// division blow-up. Throws DataError when either corpus is empty.
DominanceRow dominance_score(const CorpusCounts& target,
                             const CorpusCounts& control,
                             const std::string& label);

/// One row per non-excluded lexicon class, sorted by label.
std::vector<DominanceRow> dominance_table(const CorpusCounts& target,
                                          const CorpusCounts& control,
                                          const CategoryLexicon& lex);

struct ReadabilityScores {
  double fog = 0.0;
  double flesch = 0.0;
};

/// Gunning Fog: 0.4 * (words/sentences + 100 * complex_words/words).
/// Throws DataError on documents without tokens or sentences.
double fog_index(const TokenizedDocument& doc);

/// Flesch Reading Ease:
/// 206.835 - 1.015 * (words/sentences) - 84.6 * (syllables/words).
/// Throws DataError on documents without tokens or sentences.
double flesch_index(const TokenizedDocument& doc);

ReadabilityScores score_readability(const TokenizedDocument& doc);

struct ReadabilitySummary {
  SampleSummary fog;
  SampleSummary flesch;
  std::size_t scored = 0;
  std::size_t skipped = 0;  // documents without tokens/sentences
  std::vector<double> fog_values;     // per scored document, input order
  std::vector<double> flesch_values;
};

/// Per-document scores first, then sample mean/stddev across documents.
/// Unscoreable documents are skipped and tallied. Throws DataError when
/// fewer than two documents are scoreable.
ReadabilitySummary readability_summary(const std::vector<TokenizedDocument>& docs);

enum class Direction { Dominant, Avoided };

std::string_view direction_name(Direction d);

/// Directional dominance targets used to score a single abstract.
struct ViralityProfile {
  std::map<std::string, Direction> targets;

  /// The built-in default: 14 classes, PAST avoided and the rest dominant.
  static ViralityProfile defaults();
};

/// Every profile label must exist in the lexicon and not be excluded.
/// Throws DataError otherwise.
void validate_profile(const ViralityProfile& profile, const CategoryLexicon& lex);

struct ProfileRow {
  std::string label;
  Direction direction = Direction::Dominant;
  double coverage_doc = 0.0;
  double coverage_control = 0.0;
  std::optional<double> dominance;
  Band band = Band::Undefined;
  bool met = false;  // band matches the profile direction; Undefined never meets
};

struct ProfileResult {
  std::vector<ProfileRow> rows;  // sorted by label
  std::size_t met = 0;
  std::size_t total = 0;

  double fraction() const { return total == 0 ? 0.0 : double(met) / double(total); }
};

/// Scores one document as a one-document corpus against `control`: a profile
/// class is met when its dominance band matches the profile direction.
/// Throws DataError when the document or the control corpus is empty.
ProfileResult profile_score(const TokenizedDocument& doc,
                            const CorpusCounts& control,
                            const ViralityProfile& profile,
                            const CategoryLexicon& lex);

}  // namespace viralstyle
