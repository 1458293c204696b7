#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "viralstyle/commands.hpp"
#include "viralstyle/error.hpp"
#include "viralstyle/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    viralstyle::write_file(out_path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus analytics for abstract virality: word-class dominance, "
               "readability indices, and collection building."};
  app.set_version_flag("--version", std::string(viralstyle::kToolVersion));
  app.require_subcommand(1);

  std::string format_name = "md";
  std::string out_path;

  // collections
  auto* collections = app.add_subcommand(
      "collections", "Split a record file into viral and control collections");
  viralstyle::CollectionsArgs collections_args;
  collections->add_option("input", collections_args.input_path, "record file")->required();
  collections->add_option("-o,--out-dir", collections_args.out_dir,
                          "output directory for id lists and manifest")->required();
  collections->add_flag("--csv", collections_args.csv, "input is header-free CSV");
  collections->add_option("--cite-min", collections_args.spec.cite_min,
                          "citation threshold (inclusive)");
  collections->add_option("--download-min", collections_args.spec.download_min,
                          "download threshold (inclusive)");
  collections->add_option("--bookmark-min", collections_args.spec.bookmark_min,
                          "bookmark threshold (inclusive)");
  collections->add_option("--control-size", collections_args.spec.control_size,
                          "control sample size");
  collections->add_option("--viral-cap", collections_args.spec.viral_cap,
                          "cap per viral collection, keeping the top records (0 = uncapped)");
  collections->add_option("--seed", collections_args.spec.seed, "control sampling seed");

  // dominance
  auto* dominance = app.add_subcommand(
      "dominance", "Word-class dominance of a target collection vs the control");
  viralstyle::DominanceArgs dominance_args;
  dominance->add_option("corpus", dominance_args.corpus_path, "record file")->required();
  dominance->add_option("--target", dominance_args.target_ids_path, "target id-list file")
      ->required();
  dominance->add_option("--control", dominance_args.control_ids_path,
                        "control id-list file")->required();
  dominance->add_option("--lexicon", dominance_args.lexicon_path, "lexicon file")
      ->required();
  dominance->add_flag("--csv", dominance_args.csv, "corpus is header-free CSV");
  dominance->add_option("--format", format_name, "md, json or csv");
  dominance->add_option("-o,--output", out_path, "write the report here instead of stdout");

  // readability
  auto* readability = app.add_subcommand(
      "readability", "Fog/Flesch statistics per collection, tested against the control");
  viralstyle::ReadabilityArgs readability_args;
  readability->add_option("corpus", readability_args.corpus_path, "record file")
      ->required();
  readability->add_option("--target", readability_args.target_ids_paths,
                          "target id-list file (repeatable)")->required();
  readability->add_option("--control", readability_args.control_ids_path,
                          "control id-list file")->required();
  readability->add_flag("--csv", readability_args.csv, "corpus is header-free CSV");
  readability->add_option("--format", format_name, "md, json or csv");
  readability->add_option("-o,--output", out_path, "write the report here instead of stdout");

  // coach
  auto* coach = app.add_subcommand(
      "coach", "Score one abstract against the virality profile and a control corpus");
  viralstyle::CoachArgs coach_args;
  coach->add_option("abstract", coach_args.abstract_path, "text file with the abstract")
      ->required();
  coach->add_option("corpus", coach_args.corpus_path, "record file with control abstracts")
      ->required();
  coach->add_option("--control", coach_args.control_ids_path,
                    "control id-list file (default: every corpus record)");
  coach->add_option("--lexicon", coach_args.lexicon_path, "lexicon file")->required();
  coach->add_option("--profile", coach_args.profile_path,
                    "profile file (default: built-in 14-class profile)");
  coach->add_flag("--csv", coach_args.csv, "corpus is header-free CSV");
  coach->add_option("--format", format_name, "md, json or csv");
  coach->add_option("-o,--output", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    const viralstyle::Format format = viralstyle::parse_format(format_name);
    if (collections->parsed()) {
      const auto outcome = viralstyle::cmd_collections(collections_args);
      std::cout << "wrote " << outcome.files.size() << " collections and "
                << outcome.manifest_path << "\n";
    } else if (dominance->parsed()) {
      emit(viralstyle::render(viralstyle::cmd_dominance(dominance_args), format), out_path);
    } else if (readability->parsed()) {
      const auto outcome = viralstyle::cmd_readability(readability_args);
      for (const auto& warning : outcome.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      emit(viralstyle::render(outcome.report, format), out_path);
    } else if (coach->parsed()) {
      emit(viralstyle::render(viralstyle::cmd_coach(coach_args), format), out_path);
    }
  } catch (const viralstyle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}
