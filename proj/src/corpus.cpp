#include "viralstyle/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include <json.hpp>

#include "viralstyle/error.hpp"

namespace viralstyle {

namespace {

constexpr std::array<std::string_view, 5> kFields = {"id", "abstract", "downloads",
                                                     "citations", "bookmarks"};

std::int64_t require_count(const nlohmann::json& obj, const char* field,
                           std::size_t line) {
  const auto& value = obj.at(field);
  if (!value.is_number_integer() || value.is_boolean()) {
    throw ParseError(std::string("field '") + field + "' must be an integer", line);
  }
  const auto n = value.get<std::int64_t>();
  if (n < 0) {
    throw ParseError(std::string("field '") + field + "' must be non-negative", line);
  }
  return n;
}

PaperRecord record_from_json(const nlohmann::json& obj, std::size_t line) {
  if (!obj.is_object()) throw ParseError("record is not an object", line);
  for (const auto& field : kFields) {
    if (!obj.contains(field)) {
      throw ParseError("missing field '" + std::string(field) + "'", line);
    }
  }
  for (const auto& [key, value] : obj.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      throw ParseError("unexpected field '" + key + "'", line);
    }
  }
  PaperRecord rec;
  if (!obj.at("id").is_string() || obj.at("id").get<std::string>().empty()) {
    throw ParseError("field 'id' must be a nonempty string", line);
  }
  if (!obj.at("abstract").is_string()) {
    throw ParseError("field 'abstract' must be a string", line);
  }
  rec.id = obj.at("id").get<std::string>();
  rec.abstract_text = obj.at("abstract").get<std::string>();
  rec.downloads = require_count(obj, "downloads", line);
  rec.citations = require_count(obj, "citations", line);
  rec.bookmarks = require_count(obj, "bookmarks", line);
  return rec;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

void check_duplicates(std::vector<PaperRecord>& records,
                      const std::vector<std::size_t>& lines) {
  std::map<std::string_view, std::size_t> seen;  // id -> index
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto [it, inserted] = seen.emplace(records[i].id, i);
    if (!inserted) {
      throw ParseError("duplicate id '" + records[i].id + "' first seen on line " +
                           std::to_string(lines[it->second]),
                       lines[i]);
    }
  }
}

// One CSV line -> fields, RFC 4180 quoting (no embedded newlines).
std::vector<std::string> csv_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i <= n) {
    if (i == n) {
      if (quoted) throw ParseError("unterminated quoted field", line_no);
      fields.push_back(std::move(current));
      break;
    }
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && line[i + 1] == '"') {
          current.push_back('"');
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        current.push_back(c);
        ++i;
      }
    } else if (c == '"' && current.empty()) {
      quoted = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      ++i;
    } else {
      current.push_back(c);
      ++i;
    }
  }
  return fields;
}

std::int64_t parse_count(const std::string& field, const char* name, std::size_t line) {
  std::int64_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("field '") + name + "' must be an integer", line);
  }
  if (value < 0) {
    throw ParseError(std::string("field '") + name + "' must be non-negative", line);
  }
  return value;
}

}  // namespace

std::vector<PaperRecord> parse_records(std::string_view text) {
  std::vector<PaperRecord> records;
  std::vector<std::size_t> record_lines;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON record: ") + e.what(), line_no);
    }
    records.push_back(record_from_json(obj, line_no));
    record_lines.push_back(line_no);
  }
  check_duplicates(records, record_lines);
  return records;
}

std::vector<PaperRecord> parse_records_csv(std::string_view text) {
  std::vector<PaperRecord> records;
  std::vector<std::size_t> record_lines;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (blank(line)) continue;
    auto fields = csv_fields(line, line_no);
    if (fields.size() != kFields.size()) {
      throw ParseError("expected 5 fields (id,abstract,downloads,citations,bookmarks), found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    if (fields[0].empty()) throw ParseError("field 'id' must be nonempty", line_no);
    PaperRecord rec;
    rec.id = std::move(fields[0]);
    rec.abstract_text = std::move(fields[1]);
    rec.downloads = parse_count(fields[2], "downloads", line_no);
    rec.citations = parse_count(fields[3], "citations", line_no);
    rec.bookmarks = parse_count(fields[4], "bookmarks", line_no);
    records.push_back(std::move(rec));
    record_lines.push_back(line_no);
  }
  check_duplicates(records, record_lines);
  return records;
}

namespace {

// Rejection-sampled bound keeps the draw uniform and portable; mt19937_64 is
// specified by the standard, distributions are not.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = gen();
  } while (draw >= limit);
  return draw % n;
}

std::vector<std::string> top_by(const std::vector<PaperRecord>& records,
                                std::vector<std::size_t> indices,
                                std::int64_t PaperRecord::*indicator,
                                std::size_t cap) {
  if (cap > 0 && indices.size() > cap) {
    std::stable_sort(indices.begin(), indices.end(),
                     [&](std::size_t a, std::size_t b) {
                       return records[a].*indicator > records[b].*indicator;
                     });
    indices.resize(cap);
    std::sort(indices.begin(), indices.end());
  }
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  for (std::size_t i : indices) ids.push_back(records[i].id);
  return ids;
}

}  // namespace

std::vector<std::string> control_sample(const std::vector<std::string>& candidates,
                                        std::size_t size, std::uint64_t seed) {
  if (candidates.empty()) throw DataError("control_sample needs candidates");
  if (size >= candidates.size()) return candidates;

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < size; ++i) {  // partial Fisher-Yates
    const std::size_t j = i + std::size_t(uniform_below(gen, order.size() - i));
    std::swap(order[i], order[j]);
  }
  order.resize(size);
  std::sort(order.begin(), order.end());
  std::vector<std::string> sample;
  sample.reserve(size);
  for (std::size_t i : order) sample.push_back(candidates[i]);
  return sample;
}

CollectionSet build_collections(const std::vector<PaperRecord>& records,
                                const CollectionSpec& spec) {
  if (records.empty()) throw DataError("cannot build collections from an empty record set");
  if (spec.cite_min < 1 || spec.download_min < 1 || spec.bookmark_min < 1) {
    throw DataError("collection thresholds must be at least 1");
  }
  if (spec.control_size < 1) throw DataError("control_size must be at least 1");

  std::vector<std::size_t> cited, downloaded, bookmarked;
  std::vector<std::string> zero_scored;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.citations >= spec.cite_min) cited.push_back(i);
    if (r.downloads >= spec.download_min) downloaded.push_back(i);
    if (r.bookmarks >= spec.bookmark_min) bookmarked.push_back(i);
    if (r.downloads == 0 && r.citations == 0 && r.bookmarks == 0) {
      zero_scored.push_back(r.id);
    }
  }
  if (zero_scored.empty()) {
    throw DataError("no zero-score records available for the control collection");
  }

  CollectionSet set;
  set.cited = top_by(records, std::move(cited), &PaperRecord::citations, spec.viral_cap);
  set.downloaded =
      top_by(records, std::move(downloaded), &PaperRecord::downloads, spec.viral_cap);
  set.bookmarked =
      top_by(records, std::move(bookmarked), &PaperRecord::bookmarks, spec.viral_cap);
  set.control = control_sample(zero_scored, spec.control_size, spec.seed);
  return set;
}

}  // namespace viralstyle
