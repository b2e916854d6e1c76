#include "rimax/phoneme.hpp"

#include <algorithm>
#include <array>

#include "rimax/errors.hpp"

namespace rimax {

namespace {

constexpr std::array<std::string_view, kPhoneCount> kSymbols = {
    "a", "e", "i", "o", "u",
    "j", "w",
    "b", "d", "f", "g", "k", "l", "m", "n",
    "ɲ",
    "p",
    "r",
    "ɾ",
    "s", "t",
    "tʃ",
    "x",
    "ʝ",
    "ʃ",
};

}  // namespace

std::string_view phone_symbol(Phone p) { return kSymbols[static_cast<int>(p)]; }

bool is_vowel(Phone p) { return p <= Phone::u; }

bool is_glide(Phone p) { return p == Phone::j || p == Phone::w; }

bool is_strong_vowel(Phone p) {
  return p == Phone::a || p == Phone::e || p == Phone::o;
}

std::string render_phonemes(const PhonemeSequence& seq) {
  std::string out;
  for (const Phoneme& ph : seq) out += phone_symbol(ph.phone);
  return out;
}

PhonemeSequence parse_phonemes(std::string_view text) {
  PhonemeSequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (int k = 0; k < kPhoneCount; ++k) {
      std::string_view sym = kSymbols[k];
      if (sym.size() > best_len && text.substr(i, sym.size()) == sym) {
        best = k;
        best_len = sym.size();
      }
    }
    if (best < 0) {
      throw DomainError("unknown phoneme symbol at \"" + std::string(text.substr(i)) + "\"");
    }
    out.push_back({static_cast<Phone>(best), false});
    i += best_len;
  }
  return out;
}

bool reverse_phonetic_less(const PhonemeSequence& a, const PhonemeSequence& b) {
  auto ra = a.rbegin();
  auto rb = b.rbegin();
  for (; ra != a.rend() && rb != b.rend(); ++ra, ++rb) {
    if (ra->phone != rb->phone) return ra->phone < rb->phone;
  }
  return a.size() < b.size();
}

}  // namespace rimax
