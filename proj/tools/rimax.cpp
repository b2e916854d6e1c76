// rimax: build a rhyming dictionary for Mexican Spanish and rank a word's
// assonant and consonant rhymes by the similarity of their definitions.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rimax/errors.hpp"
#include "rimax/lexicon_io.hpp"
#include "rimax/questionnaire.hpp"
#include "rimax/ranker.hpp"
#include "rimax/rhyme_index.hpp"
#include "rimax/utf8.hpp"

namespace fs = std::filesystem;
using namespace rimax;

namespace {

ExceptionLexicon load_exceptions_opt(const std::string& path) {
  if (path.empty()) return {};
  return load_exception_lexicon(path);
}

std::vector<PhonWord> analyze_lexicon(const Lexicon& lex, const ExceptionLexicon& exceptions) {
  std::vector<PhonWord> words;
  words.reserve(lex.entries.size());
  for (const LexiconEntry& entry : lex.entries) {
    words.push_back(analyze(entry.orthography, exceptions));
  }
  return words;
}

struct QuerySetup {
  ControlFile control;
  fs::path control_path;
  Lexicon lexicon;
  RhymeDictionary dict;
  DefinitionTable defs;
  std::optional<fs::path> cache_path;
};

QuerySetup prepare(const std::string& control_path, const std::string& exceptions_path,
                   const std::string& stoplist_path, const std::string& lemmas_path,
                   const std::string& measure_override, const std::string& seuil_override,
                   const std::string& mode_override, const std::string& cache_override) {
  QuerySetup s;
  s.control_path = control_path;
  s.control = load_control(s.control_path);
  if (!measure_override.empty()) s.control.measure = parse_measure(measure_override);
  if (!seuil_override.empty()) {
    ControlFile tmp = parse_control("seuil=" + seuil_override + "\n");
    s.control.seuil = tmp.seuil;
  }
  if (!mode_override.empty()) s.control.mode = parse_mode(mode_override);

  if (s.control.lexicon.empty()) {
    throw DomainError(control_path + ": missing required key \"lexicon\"");
  }
  s.lexicon = load_lexicon(resolve_relative(s.control_path, s.control.lexicon));

  ExceptionLexicon exceptions = load_exceptions_opt(exceptions_path);
  s.dict = RhymeDictionary::build(analyze_lexicon(s.lexicon, exceptions));

  Stoplist stoplist = stoplist_path.empty() ? default_stoplist() : load_stoplist(stoplist_path);
  LemmaDict lemmas = lemmas_path.empty() ? LemmaDict{} : load_lemma_dict(lemmas_path);
  s.defs = build_definition_table(s.lexicon, stoplist, lemmas, s.control.mode);

  // control-file paths resolve against the control file, flag paths as given
  if (!cache_override.empty()) {
    s.cache_path = fs::path(cache_override);
  } else if (!s.control.cache.empty()) {
    s.cache_path = resolve_relative(s.control_path, s.control.cache);
  }
  return s;
}

RankConfig rank_config(const ControlFile& cf, std::optional<std::size_t> limit) {
  return RankConfig{cf.measure, cf.seuil, cf.mode, limit};
}

std::vector<std::string> load_word_list(const fs::path& path) {
  std::vector<std::string> words;
  std::string text = read_file(path);
  std::string line;
  auto flush = [&]() {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') words.push_back(utf8::to_lower(line));
    line.clear();
  };
  for (char c : text) {
    if (c == '\n') flush();
    else line += c;
  }
  flush();
  return words;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rimax: a rhyming dictionary with definition-similarity ranking"};
  app.require_subcommand(1);

  // ---- build ----
  auto* cmd_build = app.add_subcommand("build", "transcribe a lexicon and write the rhyme index");
  std::string b_lexicon, b_exceptions, b_out;
  cmd_build->add_option("--lexicon", b_lexicon, "lexicon file (word<TAB>sense<TAB>definition)")
      ->required();
  cmd_build->add_option("--exceptions", b_exceptions, "exception lexicon for loanwords");
  cmd_build->add_option("--out", b_out, "output path for the index dump")->required();

  // ---- query ----
  auto* cmd_query = app.add_subcommand("query", "print ranked rhymes of a word");
  std::string q_control, q_word, q_kind = "consonant", q_exceptions, q_stoplist, q_lemmas;
  std::string q_measure, q_seuil, q_mode, q_cache;
  std::size_t q_k = 10;
  cmd_query->add_option("--control", q_control, "control file")->required();
  cmd_query->add_option("word", q_word, "query word")->required();
  cmd_query->add_option("--kind", q_kind, "assonant|consonant")
      ->check(CLI::IsMember({"assonant", "consonant"}));
  cmd_query->add_option("--k", q_k, "maximum list length");
  cmd_query->add_option("--measure", q_measure, "override the control file's measure");
  cmd_query->add_option("--seuil", q_seuil, "override the similarity threshold");
  cmd_query->add_option("--mode", q_mode, "override the normalization mode");
  cmd_query->add_option("--cache", q_cache, "override the cache path");
  cmd_query->add_option("--exceptions", q_exceptions, "exception lexicon");
  cmd_query->add_option("--stoplist", q_stoplist, "stoplist file (default: built-in)");
  cmd_query->add_option("--lemmas", q_lemmas, "lemmatization dictionary");

  // ---- transcribe ----
  auto* cmd_tr = app.add_subcommand("transcribe", "show the phonological analysis of words");
  std::vector<std::string> t_words;
  std::string t_exceptions;
  cmd_tr->add_option("words", t_words, "words to transcribe")->required();
  cmd_tr->add_option("--exceptions", t_exceptions, "exception lexicon");

  // ---- questionnaire ----
  auto* cmd_qn = app.add_subcommand("questionnaire", "generate an evaluation questionnaire");
  std::string n_control, n_words, n_out, n_answers, n_exceptions, n_stoplist, n_lemmas;
  std::string n_measure, n_seuil, n_mode, n_cache;
  std::size_t n_k = 5;
  std::uint32_t n_seed = 0;
  cmd_qn->add_option("--control", n_control, "control file")->required();
  cmd_qn->add_option("--words", n_words, "file with one query word per line")->required();
  cmd_qn->add_option("--k", n_k, "words per option set");
  cmd_qn->add_option("--seed", n_seed, "shuffle seed");
  cmd_qn->add_option("--out", n_out, "questionnaire output file")->required();
  cmd_qn->add_option("--answers", n_answers, "answer-key output file")->required();
  cmd_qn->add_option("--measure", n_measure, "override the control file's measure");
  cmd_qn->add_option("--seuil", n_seuil, "override the similarity threshold");
  cmd_qn->add_option("--mode", n_mode, "override the normalization mode");
  cmd_qn->add_option("--cache", n_cache, "override the cache path");
  cmd_qn->add_option("--exceptions", n_exceptions, "exception lexicon");
  cmd_qn->add_option("--stoplist", n_stoplist, "stoplist file (default: built-in)");
  cmd_qn->add_option("--lemmas", n_lemmas, "lemmatization dictionary");

  try {
    app.parse(argc, argv);

    if (cmd_build->parsed()) {
      Lexicon lex = load_lexicon(b_lexicon);
      ExceptionLexicon exceptions = load_exceptions_opt(b_exceptions);
      RhymeDictionary dict = RhymeDictionary::build(analyze_lexicon(lex, exceptions));
      write_file(b_out, dict.export_text());
      auto sizes = dict.group_sizes();
      std::cout << "oxytones\t" << sizes[0] << "\n"
                << "paroxytones\t" << sizes[1] << "\n"
                << "proparoxytones\t" << sizes[2] << "\n";
      return 0;
    }

    if (cmd_query->parsed()) {
      QuerySetup s = prepare(q_control, q_exceptions, q_stoplist, q_lemmas, q_measure, q_seuil,
                             q_mode, q_cache);
      SimilarityCache cache;
      SimilarityCache* cache_ptr = nullptr;
      if (s.cache_path) {
        if (fs::exists(*s.cache_path)) {
          cache.load(*s.cache_path, s.control.measure, s.control.mode);
        }
        cache_ptr = &cache;
      }
      RhymeKind kind = q_kind == "assonant" ? RhymeKind::assonant : RhymeKind::consonant;
      std::optional<std::size_t> limit;
      if (q_k >= 1) limit = q_k;  // k=0 still validates the query, prints nothing
      RankedRhymeList list = rank_rhymes(s.dict, s.defs, utf8::to_lower(q_word), kind,
                                         rank_config(s.control, limit), cache_ptr);
      for (std::size_t n = 0; n < list.entries.size() && n < q_k; ++n) {
        const RankedEntry& e = list.entries[n];
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.4f", e.score);
        std::cout << e.word << '\t' << buf << '\n';
      }
      if (s.cache_path) cache.save(*s.cache_path, s.control.measure, s.control.mode);
      return 0;
    }

    if (cmd_tr->parsed()) {
      ExceptionLexicon exceptions = load_exceptions_opt(t_exceptions);
      for (const std::string& word : t_words) {
        PhonWord w = analyze(word, exceptions);
        std::cout << w.orthography << '\t' << render_word(w) << '\t'
                  << stress_class_name(w.stress_class) << '\n';
      }
      return 0;
    }

    if (cmd_qn->parsed()) {
      QuerySetup s = prepare(n_control, n_exceptions, n_stoplist, n_lemmas, n_measure, n_seuil,
                             n_mode, n_cache);
      SimilarityCache cache;
      SimilarityCache* cache_ptr = nullptr;
      if (s.cache_path) {
        if (fs::exists(*s.cache_path)) {
          cache.load(*s.cache_path, s.control.measure, s.control.mode);
        }
        cache_ptr = &cache;
      }
      std::vector<std::string> words = load_word_list(n_words);
      Questionnaire q = make_questionnaire(s.dict, s.defs, words, n_k, n_seed,
                                           rank_config(s.control, std::nullopt), cache_ptr);
      write_file(n_out, render_questionnaire(q));
      write_file(n_answers, render_answer_key(q));
      for (const QuestionnaireItem& item : q.items) {
        for (const std::string& warning : item.warnings) {
          std::cerr << "warning: " << warning << "\n";
        }
      }
      if (s.cache_path) cache.save(*s.cache_path, s.control.measure, s.control.mode);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage counts as an I/O-level failure
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
