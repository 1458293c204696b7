#pragma once

#include <string>
#include <vector>

#include "viralstyle/corpus.hpp"
#include "viralstyle/report.hpp"

namespace viralstyle {

/// Command-level operations behind the CLI subcommands. They read and write
/// files, throw viralstyle::Error on bad input, and return the assembled
/// report so tests can inspect it without a subprocess.

struct CollectionsArgs {
  std::string input_path;
  bool csv = false;
  std::string out_dir;
  CollectionSpec spec;
};

struct CollectionsOutcome {
  CollectionSet set;
  std::string manifest_path;
  std::vector<std::string> files;  // id-list files, in manifest order
};

/// Validates and splits the corpus, then writes one id-list file per
/// collection plus manifest.json into out_dir. Nothing is written until the
/// input has parsed and the split succeeded.
CollectionsOutcome cmd_collections(const CollectionsArgs& args);

struct DominanceArgs {
  std::string corpus_path;
  bool csv = false;
  std::string target_ids_path;
  std::string control_ids_path;
  std::string lexicon_path;
};

DominanceReport cmd_dominance(const DominanceArgs& args);

struct ReadabilityArgs {
  std::string corpus_path;
  bool csv = false;
  std::vector<std::string> target_ids_paths;
  std::string control_ids_path;
};

struct ReadabilityOutcome {
  ReadabilityReport report;
  std::vector<std::string> warnings;  // per-collection rows omitted, and why
};

ReadabilityOutcome cmd_readability(const ReadabilityArgs& args);

struct CoachArgs {
  std::string abstract_path;
  std::string corpus_path;
  bool csv = false;
  std::string control_ids_path;  // empty: every corpus record is control
  std::string lexicon_path;
  std::string profile_path;  // empty: built-in default profile
};

ProfileReport cmd_coach(const CoachArgs& args);

/// Profile file format: one "LABEL: dominant|avoided" per line, '#' comments
/// and blank lines ignored.
ViralityProfile parse_profile(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace viralstyle
