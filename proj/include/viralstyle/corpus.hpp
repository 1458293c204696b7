#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace viralstyle {

struct PaperRecord {
  std::string id;
  std::string abstract_text;
  std::int64_t downloads = 0;
  std::int64_t citations = 0;
  std::int64_t bookmarks = 0;
};

struct CollectionSpec {
  std::int64_t cite_min = 350;
  std::int64_t download_min = 330;
  std::int64_t bookmark_min = 8;
  std::size_t control_size = 3000;
  std::uint64_t seed = 0;
  std::size_t viral_cap = 0;  // 0 = uncapped; otherwise keep the top N per indicator
};

/// Record ids per collection, in input-file order. Controls never overlap a
/// viral collection and score 0 on all three indicators.
struct CollectionSet {
  std::vector<std::string> cited;
  std::vector<std::string> downloaded;
  std::vector<std::string> bookmarked;
  std::vector<std::string> control;
};

/// Parses newline-delimited JSON records, one object per line with exactly
/// the fields id, abstract, downloads, citations, bookmarks. Blank lines are
/// ignored. Order is preserved. Throws ParseError with the line number on
/// malformed lines, missing/unknown fields, negative counts, and duplicate
/// ids (citing both lines).
std::vector<PaperRecord> parse_records(std::string_view text);

/// Header-free CSV alternative, columns id,abstract,downloads,citations,
/// bookmarks. RFC 4180 quoting within a line; embedded newlines are not
/// supported.
std::vector<PaperRecord> parse_records_csv(std::string_view text);

/// Threshold membership is inclusive and independent per indicator, so a
/// record may sit in several viral collections. The control collection is a
/// seeded uniform sample of the records scoring 0 on all three indicators;
/// throws DataError when no such record exists (or when `records` is empty).
CollectionSet build_collections(const std::vector<PaperRecord>& records,
                                const CollectionSpec& spec);

/// Uniform sample without replacement of `size` ids, reproducible for a
/// fixed seed and identical across platforms. Returns all candidates when
/// size >= candidate count; output keeps the candidates' order.
std::vector<std::string> control_sample(const std::vector<std::string>& candidates,
                                        std::size_t size, std::uint64_t seed);

}  // namespace viralstyle
