#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "viralstyle/corpus.hpp"
#include "viralstyle/error.hpp"
#include "viralstyle/lexicon.hpp"
#include "viralstyle/metrics.hpp"
#include "viralstyle/stats.hpp"
#include "viralstyle/textseg.hpp"
#include "viralstyle/version.hpp"

namespace py = pybind11;
using namespace viralstyle;

PYBIND11_MODULE(_viralstyle, m) {
  m.doc() = "Word-class dominance and readability analytics for abstracts";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  // --- text segmentation ---------------------------------------------------
  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("normalized", &Token::normalized)
      .def_readonly("syllables", &Token::syllables)
      .def("__repr__", [](const Token& t) {
        return "Token('" + t.normalized + "', " + std::to_string(t.syllables) + ")";
      });

  py::class_<SentenceRange>(m, "SentenceRange")
      .def_readonly("begin", &SentenceRange::begin)
      .def_readonly("end", &SentenceRange::end);

  py::class_<TokenizedDocument>(m, "TokenizedDocument")
      .def_readonly("doc_id", &TokenizedDocument::doc_id)
      .def_readonly("tokens", &TokenizedDocument::tokens)
      .def_readonly("sentence_bounds", &TokenizedDocument::sentence_bounds)
      .def("__len__", [](const TokenizedDocument& d) { return d.tokens.size(); });

  m.def(
      "tokenize",
      [](const std::string& text, const std::string& doc_id) {
        return tokenize({doc_id, text});
      },
      py::arg("text"), py::arg("doc_id") = "doc");
  m.def(
      "segment_sentences",
      [](const std::string& text) { return segment_sentences({"doc", text}); },
      py::arg("text"));
  m.def("count_syllables", &count_syllables, py::arg("word"));
  m.def(
      "is_complex", [](const std::string& word) { return is_complex(count_syllables(word)); },
      py::arg("word"));

  // --- lexicon ---------------------------------------------------------------
  py::class_<CategoryLexicon>(m, "CategoryLexicon")
      .def("categories_of", &CategoryLexicon::categories_of, py::arg("word"))
      .def("active_labels", &CategoryLexicon::active_labels)
      .def("has_label", &CategoryLexicon::has_label)
      .def("is_excluded", &CategoryLexicon::is_excluded)
      .def_property_readonly("excluded_labels", &CategoryLexicon::excluded_labels)
      .def("entry_count", &CategoryLexicon::entry_count);

  m.def("parse_lexicon", &parse_lexicon, py::arg("text"));

  // --- metrics ---------------------------------------------------------------
  py::enum_<Band>(m, "Band")
      .value("DOMINANT", Band::Dominant)
      .value("AVOIDED", Band::Avoided)
      .value("FILTERED", Band::Filtered)
      .value("UNDEFINED", Band::Undefined);

  py::enum_<Direction>(m, "Direction")
      .value("DOMINANT", Direction::Dominant)
      .value("AVOIDED", Direction::Avoided);

  py::class_<CorpusCounts>(m, "CorpusCounts")
      .def_readonly("size", &CorpusCounts::size)
      .def_readonly("class_freq", &CorpusCounts::class_freq);

  py::class_<DominanceRow>(m, "DominanceRow")
      .def_readonly("label", &DominanceRow::label)
      .def_readonly("coverage_target", &DominanceRow::coverage_target)
      .def_readonly("coverage_control", &DominanceRow::coverage_control)
      .def_readonly("dominance", &DominanceRow::dominance)
      .def_readonly("band", &DominanceRow::band);

  py::class_<ViralityProfile>(m, "ViralityProfile")
      .def(py::init<>())
      .def_readwrite("targets", &ViralityProfile::targets)
      .def_static("defaults", &ViralityProfile::defaults);

  py::class_<ProfileRow>(m, "ProfileRow")
      .def_readonly("label", &ProfileRow::label)
      .def_readonly("direction", &ProfileRow::direction)
      .def_readonly("coverage_doc", &ProfileRow::coverage_doc)
      .def_readonly("coverage_control", &ProfileRow::coverage_control)
      .def_readonly("dominance", &ProfileRow::dominance)
      .def_readonly("band", &ProfileRow::band)
      .def_readonly("met", &ProfileRow::met);

  py::class_<ProfileResult>(m, "ProfileResult")
      .def_readonly("rows", &ProfileResult::rows)
      .def_readonly("met", &ProfileResult::met)
      .def_readonly("total", &ProfileResult::total)
      .def("fraction", &ProfileResult::fraction);

  m.def("corpus_counts", &corpus_counts, py::arg("docs"), py::arg("lexicon"));
  m.def("class_coverage", &class_coverage, py::arg("counts"), py::arg("label"));
  m.def("band_for", &band_for, py::arg("dominance"));
  m.def("dominance_score", &dominance_score, py::arg("target"), py::arg("control"),
        py::arg("label"));
  m.def("dominance_table", &dominance_table, py::arg("target"), py::arg("control"),
        py::arg("lexicon"));
  m.def("fog_index", &fog_index, py::arg("doc"));
  m.def("flesch_index", &flesch_index, py::arg("doc"));

  py::class_<ReadabilitySummary>(m, "ReadabilitySummary")
      .def_readonly("fog", &ReadabilitySummary::fog)
      .def_readonly("flesch", &ReadabilitySummary::flesch)
      .def_readonly("scored", &ReadabilitySummary::scored)
      .def_readonly("skipped", &ReadabilitySummary::skipped)
      .def_readonly("fog_values", &ReadabilitySummary::fog_values)
      .def_readonly("flesch_values", &ReadabilitySummary::flesch_values);

  m.def("readability_summary", &readability_summary, py::arg("docs"));
  m.def("profile_score", &profile_score, py::arg("doc"), py::arg("control"),
        py::arg("profile"), py::arg("lexicon"));

  // --- statistics ------------------------------------------------------------
  py::class_<SampleSummary>(m, "SampleSummary")
      .def_readonly("n", &SampleSummary::n)
      .def_readonly("mean", &SampleSummary::mean)
      .def_readonly("stddev", &SampleSummary::stddev);

  py::class_<TestResult>(m, "TestResult")
      .def_readonly("statistic", &TestResult::statistic)
      .def_readonly("df1", &TestResult::df1)
      .def_readonly("df2", &TestResult::df2)
      .def_readonly("p_value", &TestResult::p_value)
      .def_readonly("degenerate", &TestResult::degenerate)
      .def("significant_at", &TestResult::significant_at);

  m.def(
      "summarize",
      [](const std::vector<double>& xs) { return summarize(xs); }, py::arg("sample"));
  m.def(
      "welch_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return welch_t_test(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "f_test_variance",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return f_test_variance(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def("regularized_incomplete_beta", &regularized_incomplete_beta, py::arg("a"),
        py::arg("b"), py::arg("x"));

  // --- corpus ----------------------------------------------------------------
  py::class_<PaperRecord>(m, "PaperRecord")
      .def(py::init<>())
      .def_readwrite("id", &PaperRecord::id)
      .def_readwrite("abstract_text", &PaperRecord::abstract_text)
      .def_readwrite("downloads", &PaperRecord::downloads)
      .def_readwrite("citations", &PaperRecord::citations)
      .def_readwrite("bookmarks", &PaperRecord::bookmarks);

  py::class_<CollectionSpec>(m, "CollectionSpec")
      .def(py::init<>())
      .def_readwrite("cite_min", &CollectionSpec::cite_min)
      .def_readwrite("download_min", &CollectionSpec::download_min)
      .def_readwrite("bookmark_min", &CollectionSpec::bookmark_min)
      .def_readwrite("control_size", &CollectionSpec::control_size)
      .def_readwrite("seed", &CollectionSpec::seed)
      .def_readwrite("viral_cap", &CollectionSpec::viral_cap);

  py::class_<CollectionSet>(m, "CollectionSet")
      .def_readonly("cited", &CollectionSet::cited)
      .def_readonly("downloaded", &CollectionSet::downloaded)
      .def_readonly("bookmarked", &CollectionSet::bookmarked)
      .def_readonly("control", &CollectionSet::control);

  m.def("parse_records", &parse_records, py::arg("text"));
  m.def("parse_records_csv", &parse_records_csv, py::arg("text"));
  m.def("build_collections", &build_collections, py::arg("records"), py::arg("spec"));
  m.def("control_sample", &control_sample, py::arg("candidates"), py::arg("size"),
        py::arg("seed"));
}
