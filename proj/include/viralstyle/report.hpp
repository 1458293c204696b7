#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "viralstyle/corpus.hpp"
#include "viralstyle/metrics.hpp"
#include "viralstyle/stats.hpp"

namespace viralstyle {

enum class Format { Md, Json, Csv };

/// Accepts "md", "json", "csv". Throws DataError otherwise.
Format parse_format(std::string_view name);

/// FNV-1a 64-bit digest of a byte string, 16 hex characters. Used to pin
/// input identity into report metadata.
std::string fnv1a_digest(std::string_view bytes);

struct InputRef {
  std::string role;    // "corpus", "lexicon", ...
  std::string path;
  std::string digest;
};

struct ReportMeta {
  std::string kind;  // "dominance" | "readability" | "profile" | "collections"
  std::vector<InputRef> inputs;
  std::vector<std::pair<std::string, std::string>> params;  // echoed settings
};

struct DominanceReport {
  ReportMeta meta;
  std::vector<DominanceRow> rows;  // sorted by label
};

struct ReadabilityRow {
  std::string dataset;
  std::string index;  // "fog" | "flesch"
  std::size_t n = 0;
  std::size_t skipped = 0;
  double mean = 0.0;
  double stddev = 0.0;
  TestResult t_vs_control;
  TestResult f_vs_control;
  std::string marker;  // "*" when t-test p < 0.001, else dagger
};

struct ReadabilityReport {
  ReportMeta meta;
  std::vector<ReadabilityRow> rows;  // sorted by dataset, fog before flesch
};

struct ProfileReport {
  ReportMeta meta;
  std::vector<ProfileRow> rows;  // sorted by label
  std::size_t met = 0;
  std::size_t total = 0;
  double fraction = 0.0;
  double fog = 0.0;
  double flesch = 0.0;
  std::size_t words = 0;
  std::size_t sentences = 0;
};

/// Renderers are byte-stable: identical report values give identical bytes.
/// Markdown prints scores to two decimals; JSON and CSV keep full precision
/// (shortest round-trip form).
std::string render(const DominanceReport& report, Format format);
std::string render(const ReadabilityReport& report, Format format);
std::string render(const ProfileReport& report, Format format);

}  // namespace viralstyle
