#ifndef RIMAX_PHONOLOGY_HPP
#define RIMAX_PHONOLOGY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rimax/phoneme.hpp"

namespace rimax {

struct Syllable {
  PhonemeSequence onset;
  PhonemeSequence nucleus;  // glides and vowels; exactly one syllabic vowel
  PhonemeSequence coda;

  PhonemeSequence phonemes() const;
  // The vowel that carries the syllable's assonance: the first strong
  // vowel (a/e/o) in the nucleus, else its last plain vowel.
  Phone nucleus_vowel() const;
  std::size_t nucleus_vowel_pos() const;  // index within the nucleus
};

enum class StressClass { oxytone, paroxytone, proparoxytone };

std::string_view stress_class_name(StressClass c);

struct PhonWord {
  std::string orthography;
  PhonemeSequence phonemes;
  std::vector<Syllable> syllables;
  int stress_index = 1;  // counted from the end: 1 = last syllable
  StressClass stress_class = StressClass::oxytone;
};

///////////////////////////////////////////////////////////////
///  Exception lexicon for words pronounced against the rules
///  (mostly loanwords that keep their original spelling).
///  Entries bypass the rule engine entirely.
///////////////////////////////////////////////////////////////
class ExceptionLexicon {
 public:
  struct Entry {
    std::vector<Syllable> syllables;
    int stress_index;
  };

  // `pron` is the dotted, stress-marked form, e.g. "es.ˈkwaʃ".
  void add(const std::string& word, std::string_view pron);
  const Entry* find(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Entry> entries_;
};

// Grapheme-to-phoneme conversion. Exception entries are returned verbatim;
// otherwise standard Mexican Spanish correspondences apply (seseo, yeísmo,
// silent h, x → /ks/). Throws DomainError on characters outside Spanish
// orthography.
PhonemeSequence transcribe(const std::string& word, const ExceptionLexicon& exceptions);

// Onset-maximizing syllabification. Accented weak vowels break diphthongs;
// adjacent strong vowels are hiatus. Throws DomainError when the sequence
// has no vowel.
std::vector<Syllable> syllabify(const PhonemeSequence& phonemes);

// Orthographic accent wins; otherwise vowel/n/s ending means penult, any
// other ending means last; monosyllables are oxytone. Exception entries
// override everything.
std::pair<int, StressClass> assign_stress(const std::string& word,
                                          const std::vector<Syllable>& syllables,
                                          const ExceptionLexicon& exceptions);

// Full pipeline: transcription, syllabification, stress.
PhonWord analyze(const std::string& word, const ExceptionLexicon& exceptions);

// "ko.ˈlor": syllables joined with dots, ˈ before the stressed one.
std::string render_word(const PhonWord& w);

// Parses a dotted, stress-marked pronunciation ("ko.ˈlaʃ") into syllables.
// Requires exactly one ˈ and one vowel group per syllable.
std::pair<std::vector<Syllable>, int> parse_pronunciation(std::string_view pron);

StressClass stress_class_from_index(int index_from_end);

}  // namespace rimax

#endif  // RIMAX_PHONOLOGY_HPP
