#ifndef RIMAX_PHONEME_HPP
#define RIMAX_PHONEME_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rimax {

///////////////////////////////////////////////////////////////
///  Mexican Spanish phoneme inventory.
///
///  The enum order is the canonical symbol order used for
///  reverse-phonetic sorting: vowels, glides, then consonants.
///////////////////////////////////////////////////////////////
enum class Phone : std::uint8_t {
  a, e, i, o, u,     // vowels
  j, w,              // glides (rising diphthongs: tie-rra, cua-tro)
  b, d, f, g, k, l, m, n,
  enye,              // ɲ  (año)
  p,
  trill,             // r  (perro, rosa, onset clusters, codas)
  tap,               // ɾ  (single intervocalic r: pero)
  s, t,
  che,               // tʃ (chile)
  x,                 // x  (jalapeño, gente)
  ye,                // ʝ  (llama, yo: yeísmo)
  esh,               // ʃ  (loanwords: flash)
};

inline constexpr int kPhoneCount = static_cast<int>(Phone::esh) + 1;

struct Phoneme {
  Phone phone;
  // Orthographic accent (or the exception file's ˈ mark) travels with the
  // vowel so syllabification can detect hiatus. Rhyme keys ignore it.
  bool stressed = false;

  friend bool operator==(const Phoneme& a, const Phoneme& b) {
    return a.phone == b.phone && a.stressed == b.stressed;
  }
};

using PhonemeSequence = std::vector<Phoneme>;

std::string_view phone_symbol(Phone p);

bool is_vowel(Phone p);
bool is_glide(Phone p);
bool is_strong_vowel(Phone p);  // a, e, o

// "mano" for {m,a,n,o}; stress flags are not rendered.
std::string render_phonemes(const PhonemeSequence& seq);

// Parses a run of phoneme symbols (no dots, no stress marks), longest
// symbol first so tʃ wins over t. Throws DomainError on unknown symbols.
PhonemeSequence parse_phonemes(std::string_view text);

// Lexicographic comparison of reversed phoneme sequences in canonical
// symbol order; the rhyming-dictionary page order.
bool reverse_phonetic_less(const PhonemeSequence& a, const PhonemeSequence& b);

}  // namespace rimax

#endif  // RIMAX_PHONEME_HPP
