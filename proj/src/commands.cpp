#include "viralstyle/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "viralstyle/error.hpp"
#include "viralstyle/lexicon.hpp"
#include "viralstyle/textseg.hpp"
#include "viralstyle/version.hpp"

namespace viralstyle {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("error while reading '" + path + "'");
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write file '" + path + "'");
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw DataError("error while writing '" + path + "'");
}

namespace {

std::string trim_copy(std::string s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> read_id_list(const std::string& path) {
  const std::string content = read_file(path);
  std::vector<std::string> ids;
  std::set<std::string> seen;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const std::string id = trim_copy(line);
    if (id.empty() || id.front() == '#') continue;
    if (!seen.insert(id).second) {
      throw DataError("duplicate id '" + id + "' in '" + path + "'");
    }
    ids.push_back(id);
  }
  return ids;
}

std::vector<PaperRecord> load_records(const std::string& path, bool csv,
                                      std::string* digest_out) {
  const std::string content = read_file(path);
  if (digest_out) *digest_out = fnv1a_digest(content);
  return csv ? parse_records_csv(content) : parse_records(content);
}

std::map<std::string, const PaperRecord*> index_records(
    const std::vector<PaperRecord>& records) {
  std::map<std::string, const PaperRecord*> index;
  for (const auto& r : records) index.emplace(r.id, &r);
  return index;
}

std::vector<TokenizedDocument> docs_for(
    const std::vector<std::string>& ids,
    const std::map<std::string, const PaperRecord*>& index,
    const std::string& list_path) {
  std::vector<TokenizedDocument> docs;
  docs.reserve(ids.size());
  for (const auto& id : ids) {
    const auto it = index.find(id);
    if (it == index.end()) {
      throw DataError("id '" + id + "' from '" + list_path + "' is not in the corpus");
    }
    docs.push_back(tokenize({id, it->second->abstract_text}));
  }
  return docs;
}

CategoryLexicon load_lexicon(const std::string& path, std::string* digest_out) {
  const std::string content = read_file(path);
  if (digest_out) *digest_out = fnv1a_digest(content);
  return parse_lexicon(content);
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

InputRef input_ref(std::string role, const std::string& path) {
  return {std::move(role), path, fnv1a_digest(read_file(path))};
}

}  // namespace

CollectionsOutcome cmd_collections(const CollectionsArgs& args) {
  std::string digest;
  const auto records = load_records(args.input_path, args.csv, &digest);
  CollectionsOutcome outcome;
  outcome.set = build_collections(records, args.spec);

  fs::create_directories(args.out_dir);
  const std::vector<std::pair<std::string, const std::vector<std::string>*>> parts = {
      {"cited", &outcome.set.cited},
      {"downloaded", &outcome.set.downloaded},
      {"bookmarked", &outcome.set.bookmarked},
      {"control", &outcome.set.control},
  };

  ordered_json manifest;
  manifest["tool"] = std::string(kToolName);
  manifest["version"] = std::string(kToolVersion);
  manifest["input"] = {{"path", args.input_path}, {"digest", digest}};
  manifest["spec"] = {{"cite_min", args.spec.cite_min},
                      {"download_min", args.spec.download_min},
                      {"bookmark_min", args.spec.bookmark_min},
                      {"control_size", args.spec.control_size},
                      {"seed", args.spec.seed},
                      {"viral_cap", args.spec.viral_cap}};
  ordered_json collections = ordered_json::array();
  for (const auto& [name, ids] : parts) {
    const std::string file = (fs::path(args.out_dir) / (name + ".ids")).string();
    std::string body;
    for (const auto& id : *ids) {
      body += id;
      body += '\n';
    }
    write_file(file, body);
    outcome.files.push_back(file);
    collections.push_back({{"name", name}, {"file", name + ".ids"}, {"size", ids->size()}});
  }
  manifest["collections"] = std::move(collections);
  outcome.manifest_path = (fs::path(args.out_dir) / "manifest.json").string();
  write_file(outcome.manifest_path, manifest.dump(2) + "\n");
  return outcome;
}

DominanceReport cmd_dominance(const DominanceArgs& args) {
  std::string corpus_digest, lexicon_digest;
  const auto records = load_records(args.corpus_path, args.csv, &corpus_digest);
  const auto index = index_records(records);
  const auto lex = load_lexicon(args.lexicon_path, &lexicon_digest);

  const auto target_ids = read_id_list(args.target_ids_path);
  const auto control_ids = read_id_list(args.control_ids_path);
  const auto target = corpus_counts(docs_for(target_ids, index, args.target_ids_path), lex);
  const auto control =
      corpus_counts(docs_for(control_ids, index, args.control_ids_path), lex);
  if (control.size == 0) throw DataError("control collection has no tokens");
  if (target.size == 0) throw DataError("target collection has no tokens");

  DominanceReport report;
  report.meta.kind = "dominance";
  report.meta.inputs = {
      {"corpus", args.corpus_path, corpus_digest},
      input_ref("target", args.target_ids_path),
      input_ref("control", args.control_ids_path),
      {"lexicon", args.lexicon_path, lexicon_digest},
  };
  report.meta.params = {
      {"target_size", std::to_string(target.size)},
      {"control_size", std::to_string(control.size)},
  };
  report.rows = dominance_table(target, control, lex);
  return report;
}

ReadabilityOutcome cmd_readability(const ReadabilityArgs& args) {
  std::string corpus_digest;
  const auto records = load_records(args.corpus_path, args.csv, &corpus_digest);
  const auto index = index_records(records);

  struct Dataset {
    std::string name;
    std::string path;
    bool is_control = false;
  };
  std::vector<Dataset> datasets;
  datasets.push_back({stem_of(args.control_ids_path), args.control_ids_path, true});
  for (const auto& path : args.target_ids_paths) {
    datasets.push_back({stem_of(path), path, false});
  }
  std::sort(datasets.begin(), datasets.end(),
            [](const Dataset& a, const Dataset& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < datasets.size(); ++i) {
    if (datasets[i].name == datasets[i - 1].name) {
      throw DataError("duplicate dataset name '" + datasets[i].name + "'");
    }
  }

  const auto control_docs = docs_for(read_id_list(args.control_ids_path), index,
                                     args.control_ids_path);
  ReadabilitySummary control_summary;
  try {
    control_summary = readability_summary(control_docs);
  } catch (const DataError&) {
    throw DataError("control collection needs at least 2 scoreable documents");
  }

  ReadabilityOutcome outcome;
  outcome.report.meta.kind = "readability";
  outcome.report.meta.inputs.push_back({"corpus", args.corpus_path, corpus_digest});
  for (const auto& ds : datasets) {
    outcome.report.meta.inputs.push_back(
        input_ref(ds.is_control ? "control" : "dataset", ds.path));
  }

  for (const auto& ds : datasets) {
    ReadabilitySummary summary;
    if (ds.is_control) {
      summary = control_summary;
    } else {
      try {
        summary = readability_summary(docs_for(read_id_list(ds.path), index, ds.path));
      } catch (const DataError& e) {
        outcome.warnings.push_back("dataset " + ds.name + " omitted: " + e.what());
        continue;
      }
    }
    const auto add_row = [&](const std::string& index_name, const SampleSummary& s,
                             const std::vector<double>& values,
                             const std::vector<double>& control_values) {
      ReadabilityRow row;
      row.dataset = ds.name;
      row.index = index_name;
      row.n = summary.scored;
      row.skipped = summary.skipped;
      row.mean = s.mean;
      row.stddev = s.stddev;
      row.t_vs_control = welch_t_test(values, control_values);
      row.f_vs_control = f_test_variance(values, control_values);
      row.marker = row.t_vs_control.p_value < 0.001 ? "*" : "†";
      outcome.report.rows.push_back(std::move(row));
    };
    try {
      add_row("fog", summary.fog, summary.fog_values, control_summary.fog_values);
      add_row("flesch", summary.flesch, summary.flesch_values,
              control_summary.flesch_values);
    } catch (const DataError& e) {
      outcome.warnings.push_back("dataset " + ds.name + " omitted: " + e.what());
      std::erase_if(outcome.report.rows,
                    [&](const ReadabilityRow& row) { return row.dataset == ds.name; });
    }
  }
  return outcome;
}

ViralityProfile parse_profile(std::string_view text) {
  ViralityProfile profile;
  std::size_t line_no = 0;
  std::string content(text);
  std::istringstream in(content);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim_copy(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'LABEL: dominant|avoided'", line_no);
    }
    std::string label = trim_copy(line.substr(0, colon));
    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) {
      return c >= 'a' && c <= 'z' ? char(c - 'a' + 'A') : char(c);
    });
    std::string dir = trim_copy(line.substr(colon + 1));
    std::transform(dir.begin(), dir.end(), dir.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    if (label.empty()) throw ParseError("empty profile label", line_no);
    Direction direction;
    if (dir == "dominant") direction = Direction::Dominant;
    else if (dir == "avoided") direction = Direction::Avoided;
    else throw ParseError("direction must be 'dominant' or 'avoided'", line_no);
    if (!profile.targets.emplace(label, direction).second) {
      throw ParseError("duplicate profile label '" + label + "'", line_no);
    }
  }
  if (profile.targets.empty()) throw DataError("profile file has no classes");
  return profile;
}

ProfileReport cmd_coach(const CoachArgs& args) {
  const std::string abstract_text = read_file(args.abstract_path);
  std::string corpus_digest, lexicon_digest;
  const auto records = load_records(args.corpus_path, args.csv, &corpus_digest);
  const auto index = index_records(records);
  const auto lex = load_lexicon(args.lexicon_path, &lexicon_digest);

  std::vector<TokenizedDocument> control_docs;
  if (args.control_ids_path.empty()) {
    for (const auto& r : records) control_docs.push_back(tokenize({r.id, r.abstract_text}));
  } else {
    control_docs =
        docs_for(read_id_list(args.control_ids_path), index, args.control_ids_path);
  }

  ViralityProfile profile = args.profile_path.empty()
                                ? ViralityProfile::defaults()
                                : parse_profile(read_file(args.profile_path));

  const TokenizedDocument doc = tokenize({stem_of(args.abstract_path), abstract_text});
  if (doc.tokens.empty()) throw DataError("abstract has no tokens");
  const CorpusCounts control = corpus_counts(control_docs, lex);
  if (control.size == 0) throw DataError("control collection has no tokens");

  const ProfileResult result = profile_score(doc, control, profile, lex);

  ProfileReport report;
  report.meta.kind = "profile";
  report.meta.inputs = {
      {"abstract", args.abstract_path, fnv1a_digest(abstract_text)},
      {"corpus", args.corpus_path, corpus_digest},
      {"lexicon", args.lexicon_path, lexicon_digest},
  };
  if (!args.control_ids_path.empty()) {
    report.meta.inputs.push_back(input_ref("control", args.control_ids_path));
  }
  report.meta.params = {
      {"profile", args.profile_path.empty() ? std::string("default") : args.profile_path},
  };
  report.rows = result.rows;
  report.met = result.met;
  report.total = result.total;
  report.fraction = result.fraction();
  report.fog = fog_index(doc);
  report.flesch = flesch_index(doc);
  report.words = doc.tokens.size();
  report.sentences = doc.sentence_bounds.size();
  return report;
}

}  // namespace viralstyle
