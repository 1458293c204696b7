#include "viralstyle/report.hpp"

#include <charconv>
#include <cstdint>

#include <json.hpp>

#include "viralstyle/error.hpp"
#include "viralstyle/version.hpp"

namespace viralstyle {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip form, locale-free.
std::string num(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

// Fixed decimals for the human-readable tables.
std::string fixed(double value, int precision) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

std::string opt_num(const std::optional<double>& value) {
  return value ? num(*value) : std::string();
}

ordered_json meta_json(const ReportMeta& meta) {
  ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  ordered_json inputs = ordered_json::array();
  for (const auto& in : meta.inputs) {
    inputs.push_back({{"role", in.role}, {"path", in.path}, {"digest", in.digest}});
  }
  j["inputs"] = std::move(inputs);
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : meta.params) params[key] = value;
  j["params"] = std::move(params);
  return j;
}

void meta_md(std::string& out, const ReportMeta& meta) {
  out += "- tool: ";
  out += kToolName;
  out += " ";
  out += kToolVersion;
  out += "\n";
  for (const auto& in : meta.inputs) {
    out += "- " + in.role + ": " + in.path + " (fnv1a:" + in.digest + ")\n";
  }
  for (const auto& [key, value] : meta.params) {
    out += "- " + key + ": " + value + "\n";
  }
  out += "\n";
}

void meta_csv(std::string& out, const ReportMeta& meta) {
  out += "# ";
  out += kToolName;
  out += " ";
  out += kToolVersion;
  out += " ";
  out += meta.kind;
  out += "\n";
  for (const auto& in : meta.inputs) {
    out += "# " + in.role + ": " + in.path + " fnv1a:" + in.digest + "\n";
  }
  for (const auto& [key, value] : meta.params) {
    out += "# " + key + ": " + value + "\n";
  }
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "md") return Format::Md;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw DataError("unknown format '" + std::string(name) + "' (expected md, json or csv)");
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return std::string(buf, 16);
}

std::string render(const DominanceReport& report, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["kind"] = "dominance";
      j["metadata"] = meta_json(report.meta);
      ordered_json rows = ordered_json::array();
      for (const auto& row : report.rows) {
        ordered_json r;
        r["class"] = row.label;
        r["coverage_target"] = row.coverage_target;
        r["coverage_control"] = row.coverage_control;
        if (row.dominance) r["dominance"] = *row.dominance;
        else r["dominance"] = nullptr;
        r["band"] = std::string(band_name(row.band));
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out;
      meta_csv(out, report.meta);
      out += "class,coverage_target,coverage_control,dominance,band\n";
      for (const auto& row : report.rows) {
        out += csv_quote(row.label) + "," + num(row.coverage_target) + "," +
               num(row.coverage_control) + "," + opt_num(row.dominance) + "," +
               std::string(band_name(row.band)) + "\n";
      }
      return out;
    }
    case Format::Md: {
      std::string out = "# Dominance report\n\n";
      meta_md(out, report.meta);
      out += "| class | coverage target | coverage control | dominance | band |\n";
      out += "|---|---:|---:|---:|---|\n";
      for (const auto& row : report.rows) {
        out += "| " + row.label + " | " + fixed(row.coverage_target, 4) + " | " +
               fixed(row.coverage_control, 4) + " | " +
               (row.dominance ? fixed(*row.dominance, 2) : std::string("-")) + " | " +
               std::string(band_name(row.band)) + " |\n";
      }
      return out;
    }
  }
  throw DataError("unreachable format");
}

std::string render(const ReadabilityReport& report, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["kind"] = "readability";
      j["metadata"] = meta_json(report.meta);
      ordered_json rows = ordered_json::array();
      for (const auto& row : report.rows) {
        ordered_json r;
        r["dataset"] = row.dataset;
        r["index"] = row.index;
        r["n"] = row.n;
        r["skipped"] = row.skipped;
        r["mean"] = row.mean;
        r["stddev"] = row.stddev;
        r["t"] = {{"statistic", row.t_vs_control.statistic},
                  {"df", row.t_vs_control.df1},
                  {"p", row.t_vs_control.p_value}};
        r["f"] = {{"statistic", row.f_vs_control.statistic},
                  {"df1", row.f_vs_control.df1},
                  {"df2", row.f_vs_control.df2},
                  {"p", row.f_vs_control.p_value}};
        r["marker"] = row.marker;
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out;
      meta_csv(out, report.meta);
      out += "dataset,index,n,skipped,mean,stddev,t_statistic,t_df,t_p,"
             "f_statistic,f_df1,f_df2,f_p,marker\n";
      for (const auto& row : report.rows) {
        out += csv_quote(row.dataset) + "," + row.index + "," + std::to_string(row.n) +
               "," + std::to_string(row.skipped) + "," + num(row.mean) + "," +
               num(row.stddev) + "," + num(row.t_vs_control.statistic) + "," +
               num(row.t_vs_control.df1) + "," + num(row.t_vs_control.p_value) + "," +
               num(row.f_vs_control.statistic) + "," + num(row.f_vs_control.df1) + "," +
               num(row.f_vs_control.df2) + "," + num(row.f_vs_control.p_value) + "," +
               csv_quote(row.marker) + "\n";
      }
      return out;
    }
    case Format::Md: {
      std::string out = "# Readability report\n\n";
      meta_md(out, report.meta);
      out += "| dataset | index | n | mean | stddev | t | p(t) | F | p(F) | sig |\n";
      out += "|---|---|---:|---:|---:|---:|---:|---:|---:|---|\n";
      for (const auto& row : report.rows) {
        out += "| " + row.dataset + " | " + row.index + " | " + std::to_string(row.n) +
               " | " + fixed(row.mean, 2) + row.marker + " | " + fixed(row.stddev, 2) +
               " | " + fixed(row.t_vs_control.statistic, 2) + " | " +
               fixed(row.t_vs_control.p_value, 4) + " | " +
               fixed(row.f_vs_control.statistic, 2) + " | " +
               fixed(row.f_vs_control.p_value, 4) + " | " + row.marker + " |\n";
      }
      return out;
    }
  }
  throw DataError("unreachable format");
}

std::string render(const ProfileReport& report, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["kind"] = "profile";
      j["metadata"] = meta_json(report.meta);
      ordered_json rows = ordered_json::array();
      for (const auto& row : report.rows) {
        ordered_json r;
        r["class"] = row.label;
        r["direction"] = std::string(direction_name(row.direction));
        r["coverage_doc"] = row.coverage_doc;
        r["coverage_control"] = row.coverage_control;
        if (row.dominance) r["dominance"] = *row.dominance;
        else r["dominance"] = nullptr;
        r["band"] = std::string(band_name(row.band));
        r["met"] = row.met;
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      j["summary"] = {{"met", report.met},
                      {"total", report.total},
                      {"fraction", report.fraction},
                      {"fog", report.fog},
                      {"flesch", report.flesch},
                      {"words", report.words},
                      {"sentences", report.sentences}};
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out;
      meta_csv(out, report.meta);
      out += "# met: " + std::to_string(report.met) + "/" + std::to_string(report.total) +
             " fraction: " + num(report.fraction) + "\n";
      out += "# fog: " + num(report.fog) + " flesch: " + num(report.flesch) +
             " words: " + std::to_string(report.words) +
             " sentences: " + std::to_string(report.sentences) + "\n";
      out += "class,direction,coverage_doc,coverage_control,dominance,band,met\n";
      for (const auto& row : report.rows) {
        out += csv_quote(row.label) + "," + std::string(direction_name(row.direction)) +
               "," + num(row.coverage_doc) + "," + num(row.coverage_control) + "," +
               opt_num(row.dominance) + "," + std::string(band_name(row.band)) + "," +
               (row.met ? "true" : "false") + "\n";
      }
      return out;
    }
    case Format::Md: {
      std::string out = "# Virality profile\n\n";
      meta_md(out, report.meta);
      out += "Met " + std::to_string(report.met) + "/" + std::to_string(report.total) +
             " targets (" + fixed(100.0 * report.fraction, 1) + "%). Fog " +
             fixed(report.fog, 2) + ", Flesch " + fixed(report.flesch, 2) + " (" +
             std::to_string(report.words) + " words, " +
             std::to_string(report.sentences) + " sentences).\n\n";
      out += "| class | direction | doc | control | dominance | band | met |\n";
      out += "|---|---|---:|---:|---:|---|---|\n";
      for (const auto& row : report.rows) {
        out += "| " + row.label + " | " + std::string(direction_name(row.direction)) +
               " | " + fixed(row.coverage_doc, 4) + " | " +
               fixed(row.coverage_control, 4) + " | " +
               (row.dominance ? fixed(*row.dominance, 2) : std::string("-")) + " | " +
               std::string(band_name(row.band)) + " | " + (row.met ? "yes" : "no") +
               " |\n";
      }
      return out;
    }
  }
  throw DataError("unreachable format");
}

}  // namespace viralstyle
