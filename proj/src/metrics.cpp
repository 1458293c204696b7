#include "viralstyle/metrics.hpp"

#include <algorithm>
#include <unordered_map>

#include "viralstyle/error.hpp"

namespace viralstyle {

CorpusCounts corpus_counts(const std::vector<TokenizedDocument>& docs,
                           const CategoryLexicon& lex) {
  CorpusCounts counts;
  for (const std::string& label : lex.active_labels()) counts.class_freq[label] = 0;

  std::unordered_map<std::string, std::int64_t> word_freq;
  for (const auto& doc : docs) {
    counts.size += std::int64_t(doc.tokens.size());
    for (const auto& tok : doc.tokens) ++word_freq[tok.normalized];
  }
  for (const auto& [word, freq] : word_freq) {
    for (const std::string& label : lex.categories_of(word)) {
      counts.class_freq[label] += freq;
    }
  }
  return counts;
}

double class_coverage(const CorpusCounts& counts, const std::string& label) {
  if (counts.size == 0) {
    throw DataError("coverage is undefined for an empty corpus");
  }
  const auto it = counts.class_freq.find(label);
  const std::int64_t freq = it == counts.class_freq.end() ? 0 : it->second;
  return double(freq) / double(counts.size);
}

std::string_view band_name(Band band) {
  switch (band) {
    case Band::Dominant: return "dominant";
    case Band::Avoided: return "avoided";
    case Band::Filtered: return "filtered";
    case Band::Undefined: return "undefined";
  }
  return "undefined";
}

Band band_for(double dominance) {
  if (dominance > 1.2) return Band::Dominant;
  if (dominance < 0.8) return Band::Avoided;
  return Band::Filtered;
}

DominanceRow dominance_score(const CorpusCounts& target,
                             const CorpusCounts& control,
                             const std::string& label) {
  DominanceRow row;
  row.label = label;
  row.coverage_target = class_coverage(target, label);
  row.coverage_control = class_coverage(control, label);
  if (row.coverage_control > 0.0) {
    row.dominance = row.coverage_target / row.coverage_control;
    row.band = band_for(*row.dominance);
  } else {
    row.band = Band::Undefined;
  }
  return row;
}

std::vector<DominanceRow> dominance_table(const CorpusCounts& target,
                                          const CorpusCounts& control,
                                          const CategoryLexicon& lex) {
  std::vector<DominanceRow> rows;
  for (const std::string& label : lex.active_labels()) {
    rows.push_back(dominance_score(target, control, label));
  }
  return rows;  // active_labels() is sorted
}

namespace {

struct DocShape {
  double words;
  double sentences;
  double complex_words;
  double syllables;
};

DocShape shape_of(const TokenizedDocument& doc) {
  if (doc.tokens.empty() || doc.sentence_bounds.empty()) {
    throw DataError("readability is undefined for a document without tokens or sentences");
  }
  DocShape s{double(doc.tokens.size()), double(doc.sentence_bounds.size()), 0.0, 0.0};
  for (const auto& tok : doc.tokens) {
    if (is_complex(tok)) s.complex_words += 1.0;
    s.syllables += double(tok.syllables);
  }
  return s;
}

}  // namespace

double fog_index(const TokenizedDocument& doc) {
  const DocShape s = shape_of(doc);
  return 0.4 * (s.words / s.sentences + 100.0 * s.complex_words / s.words);
}

double flesch_index(const TokenizedDocument& doc) {
  const DocShape s = shape_of(doc);
  return 206.835 - 1.015 * (s.words / s.sentences) - 84.6 * (s.syllables / s.words);
}

ReadabilityScores score_readability(const TokenizedDocument& doc) {
  return {fog_index(doc), flesch_index(doc)};
}

ReadabilitySummary readability_summary(const std::vector<TokenizedDocument>& docs) {
  ReadabilitySummary summary;
  for (const auto& doc : docs) {
    if (doc.tokens.empty() || doc.sentence_bounds.empty()) {
      ++summary.skipped;
      continue;
    }
    summary.fog_values.push_back(fog_index(doc));
    summary.flesch_values.push_back(flesch_index(doc));
  }
  summary.scored = summary.fog_values.size();
  if (summary.scored < 2) {
    throw DataError("readability summary needs at least 2 scoreable documents");
  }
  summary.fog = summarize(summary.fog_values);
  summary.flesch = summarize(summary.flesch_values);
  return summary;
}

std::string_view direction_name(Direction d) {
  return d == Direction::Dominant ? "dominant" : "avoided";
}

ViralityProfile ViralityProfile::defaults() {
  ViralityProfile p;
  for (const char* label :
       {"CERTAIN", "DISCREP", "EXCL", "FUTURE", "NEGATE", "OTHREF", "PRONOUN",
        "SELF", "SENSES", "SIMILES", "SOCIAL", "TENTAT", "WE"}) {
    p.targets[label] = Direction::Dominant;
  }
  p.targets["PAST"] = Direction::Avoided;
  return p;
}

void validate_profile(const ViralityProfile& profile, const CategoryLexicon& lex) {
  for (const auto& [label, direction] : profile.targets) {
    if (!lex.has_label(label)) {
      throw DataError("profile class " + label + " is not in the lexicon");
    }
    if (lex.is_excluded(label)) {
      throw DataError("profile class " + label + " is excluded by the lexicon");
    }
  }
  if (profile.targets.empty()) throw DataError("profile has no classes");
}

ProfileResult profile_score(const TokenizedDocument& doc,
                            const CorpusCounts& control,
                            const ViralityProfile& profile,
                            const CategoryLexicon& lex) {
  if (doc.tokens.empty()) throw DataError("cannot profile an empty document");
  if (control.size == 0) throw DataError("profile control corpus is empty");
  validate_profile(profile, lex);

  const CorpusCounts doc_counts = corpus_counts({doc}, lex);
  ProfileResult result;
  result.total = profile.targets.size();
  for (const auto& [label, direction] : profile.targets) {
    ProfileRow row;
    row.label = label;
    row.direction = direction;
    const DominanceRow dom = dominance_score(doc_counts, control, label);
    row.coverage_doc = dom.coverage_target;
    row.coverage_control = dom.coverage_control;
    row.dominance = dom.dominance;
    row.band = dom.band;
    row.met = (direction == Direction::Dominant && row.band == Band::Dominant) ||
              (direction == Direction::Avoided && row.band == Band::Avoided);
    if (row.met) ++result.met;
    result.rows.push_back(std::move(row));
  }
  return result;  // targets map is ordered, so rows are sorted by label
}

}  // namespace viralstyle
