#pragma once

// Shared test utilities: seeded generators, naive reference oracles kept
// independent of the library's optimized paths, and a small subprocess
// runner for CLI checks.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "viralstyle/lexicon.hpp"
#include "viralstyle/metrics.hpp"
#include "viralstyle/textseg.hpp"

namespace testsupport {

inline std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t n) {
  return gen() % n;  // tests only; tiny modulo bias is irrelevant here
}

inline double draw_unit(std::mt19937_64& gen) {
  return double(gen() >> 11) * 0x1.0p-53;
}

// Box-Muller; good enough for synthetic-collection tests.
inline double draw_normal(std::mt19937_64& gen, double mu, double sigma) {
  double u1 = draw_unit(gen);
  while (u1 <= 0.0) u1 = draw_unit(gen);
  const double u2 = draw_unit(gen);
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
  return mu + sigma * z;
}

inline std::vector<double> gaussian_sample(std::mt19937_64& gen, double mu, double sigma,
                                           std::size_t n) {
  std::vector<double> xs(n);
  for (auto& x : xs) x = draw_normal(gen, mu, sigma);
  return xs;
}

inline std::string random_word(std::mt19937_64& gen, std::size_t min_len = 2,
                               std::size_t max_len = 8) {
  const std::size_t len = min_len + draw_below(gen, max_len - min_len + 1);
  std::string word;
  for (std::size_t i = 0; i < len; ++i) word.push_back(char('a' + draw_below(gen, 26)));
  return word;
}

// Random sentence-ish text over a fixed vocabulary; always tokenizable.
inline std::string random_text(std::mt19937_64& gen, const std::vector<std::string>& vocab,
                               std::size_t n_words) {
  std::string text;
  for (std::size_t i = 0; i < n_words; ++i) {
    if (!text.empty()) text += ' ';
    text += vocab[draw_below(gen, vocab.size())];
    if (draw_below(gen, 7) == 0) text += '.';
  }
  return text;
}

// Brute-force lexicon membership: scan every entry of every category.
inline std::vector<std::string> naive_categories_of(const viralstyle::CategoryLexicon& lex,
                                                    std::string_view word) {
  std::set<std::string> labels;
  for (const auto& [label, entries] : lex.categories()) {
    if (lex.excluded_labels().count(label)) continue;
    for (const auto& entry : entries) {
      const bool match = entry.kind == viralstyle::EntryKind::Exact
                             ? word == entry.pattern
                             : word.substr(0, entry.pattern.size()) == entry.pattern;
      if (match) labels.insert(label);
    }
  }
  return {labels.begin(), labels.end()};
}

// Per-token, per-entry double loop for coverage; the dominance oracle is the
// plain ratio of the two coverages.
inline double naive_coverage(const std::vector<viralstyle::TokenizedDocument>& docs,
                             const viralstyle::CategoryLexicon& lex,
                             const std::string& label) {
  std::int64_t size = 0;
  std::int64_t freq = 0;
  for (const auto& doc : docs) {
    for (const auto& tok : doc.tokens) {
      ++size;
      for (const auto& hit : naive_categories_of(lex, tok.normalized)) {
        if (hit == label) ++freq;
      }
    }
  }
  return double(freq) / double(size);
}

inline std::string data_path(const std::string& rel) {
  return std::string(VIRALSTYLE_DATA_DIR) + "/" + rel;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

// Runs the built CLI with the given arguments from directory `cwd`.
inline CommandResult run_cli(const std::string& args, const std::string& cwd = {}) {
  namespace fs = std::filesystem;
  static std::uint64_t call_count = 0;
  const fs::path out = fs::temp_directory_path() /
                       ("viralstyle_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(call_count++) + ".out");
  std::string cmd;
  if (!cwd.empty()) cmd += "cd '" + cwd + "' && ";
  cmd += std::string("'") + VIRALSTYLE_CLI_PATH + "' " + args + " > '" + out.string() +
         "' 2>&1";
  const int status = std::system(cmd.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(out.string());
  fs::remove(out);
  return result;
}

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  static std::uint64_t counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("viralstyle_" + tag + "_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace testsupport
