#ifndef RIMAX_LEXICON_IO_HPP
#define RIMAX_LEXICON_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rimax/defsim.hpp"
#include "rimax/phonology.hpp"

namespace rimax {

struct SenseDefinition {
  std::string word;
  int sense_index = 1;
  std::string text;
};

struct LexiconEntry {
  std::string orthography;
  std::vector<SenseDefinition> senses;  // may be empty: headword-only entry
};

// The nomenclature plus its sense definitions, in file order.
struct Lexicon {
  std::vector<LexiconEntry> entries;

  const LexiconEntry* find(const std::string& word) const;
};

// Lexicon file: UTF-8, one sense per line, `word<TAB>sense<TAB>definition`.
// A line holding just a word declares a headword without definitions.
// Blank lines and lines starting with # are skipped. All errors name the
// file and line.
Lexicon load_lexicon(const std::filesystem::path& path);

// One word per line, # comments allowed.
Stoplist load_stoplist(const std::filesystem::path& path);

// `surface<TAB>lemma` per line.
LemmaDict load_lemma_dict(const std::filesystem::path& path);

// `word<TAB>pronunciation` per line, pronunciation dotted and stress-marked
// (e.g. "flash<TAB>ˈflaʃ").
ExceptionLexicon load_exception_lexicon(const std::filesystem::path& path);

///////////////////////////////////////////////////////////////
///  Experiment control file: key=value lines with keys
///  measure, seuil, mode, lexicon, cache. Omitted keys take
///  the defaults below (the evaluation setup: cosine, 0).
///////////////////////////////////////////////////////////////
struct ControlFile {
  Measure measure = Measure::cosine;
  double seuil = 0.0;
  NormalizeMode mode;         // lemma
  std::string lexicon;        // path, possibly relative to the control file
  std::string cache;          // optional; empty disables the cache

  friend bool operator==(const ControlFile&, const ControlFile&) = default;
};

ControlFile parse_control(const std::string& text);
std::string render_control(const ControlFile& cf);

ControlFile load_control(const std::filesystem::path& path);
void save_control(const ControlFile& cf, const std::filesystem::path& path);

// Paths inside a control file are resolved against the file's directory.
std::filesystem::path resolve_relative(const std::filesystem::path& base_file,
                                       const std::string& path);

std::string read_file(const std::filesystem::path& path);   // IoError if unreadable
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace rimax

#endif  // RIMAX_LEXICON_IO_HPP
