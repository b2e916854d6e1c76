#include "rimax/phonology.hpp"

#include <algorithm>
#include <cstddef>

#include "rimax/errors.hpp"
#include "rimax/utf8.hpp"

namespace rimax {

namespace {

constexpr char32_t kStressMark = U'ˈ';  // U+02C8

bool is_vowel_letter(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

// Legal two-consonant onsets: stop or /f/ plus liquid. tl counts as an
// onset in Mexican Spanish (a.tlas).
bool legal_onset_pair(Phone c1, Phone c2) {
  bool liquid = c2 == Phone::l || c2 == Phone::trill;
  if (!liquid) return false;
  switch (c1) {
    case Phone::p: case Phone::b: case Phone::f:
    case Phone::k: case Phone::g:
      return true;
    case Phone::t:
      return true;  // tr, tl
    case Phone::d:
      return c2 == Phone::trill;  // dr but never dl
    default:
      return false;
  }
}

bool vocalic(Phone p) { return is_vowel(p) || is_glide(p); }

// Splits one maximal run of vowels/glides into nuclei. Hiatus between two
// strong vowels and around an accented weak vowel; glides stick to the
// vowel they precede.
std::vector<PhonemeSequence> split_nuclei(const PhonemeSequence& run) {
  std::vector<PhonemeSequence> nuclei;
  nuclei.push_back({run[0]});
  for (std::size_t t = 1; t < run.size(); ++t) {
    const Phoneme& s = run[t];
    PhonemeSequence& cur = nuclei.back();
    const Phoneme& p = cur.back();
    bool cur_has_vowel =
        std::any_of(cur.begin(), cur.end(), [](const Phoneme& q) { return is_vowel(q.phone); });
    if (is_glide(s.phone)) {
      bool vowel_follows = t + 1 < run.size() && is_vowel(run[t + 1].phone);
      if (vowel_follows && cur_has_vowel) {
        nuclei.push_back({s});  // prevocalic glide opens the next nucleus
      } else {
        cur.push_back(s);  // offglide
      }
      continue;
    }
    if (!cur_has_vowel || is_glide(p.phone)) {
      cur.push_back(s);
      continue;
    }
    bool p_strong = is_strong_vowel(p.phone);
    bool s_strong = is_strong_vowel(s.phone);
    bool hiatus = (p_strong && s_strong) || (p_strong && !s_strong && s.stressed) ||
                  (!p_strong && p.stressed && s_strong);
    if (hiatus) {
      nuclei.push_back({s});
    } else {
      cur.push_back(s);
    }
  }
  return nuclei;
}

}  // namespace

PhonemeSequence Syllable::phonemes() const {
  PhonemeSequence out = onset;
  out.insert(out.end(), nucleus.begin(), nucleus.end());
  out.insert(out.end(), coda.begin(), coda.end());
  return out;
}

std::size_t Syllable::nucleus_vowel_pos() const {
  for (std::size_t k = 0; k < nucleus.size(); ++k) {
    if (is_strong_vowel(nucleus[k].phone)) return k;
  }
  for (std::size_t k = nucleus.size(); k-- > 0;) {
    if (is_vowel(nucleus[k].phone)) return k;
  }
  // glide-only nucleus cannot be built by syllabify; fall back anyway
  return nucleus.size() - 1;
}

Phone Syllable::nucleus_vowel() const {
  Phone p = nucleus[nucleus_vowel_pos()].phone;
  if (p == Phone::w) return Phone::u;
  if (p == Phone::j) return Phone::i;
  return p;
}

std::string_view stress_class_name(StressClass c) {
  switch (c) {
    case StressClass::oxytone: return "oxytone";
    case StressClass::paroxytone: return "paroxytone";
    default: return "proparoxytone";
  }
}

StressClass stress_class_from_index(int index_from_end) {
  switch (index_from_end) {
    case 1: return StressClass::oxytone;
    case 2: return StressClass::paroxytone;
    default: return StressClass::proparoxytone;
  }
}

///////////////////////////////////////////////////////////////
///  Grapheme-to-phoneme rules
///////////////////////////////////////////////////////////////

PhonemeSequence transcribe(const std::string& word, const ExceptionLexicon& exceptions) {
  if (word.empty()) throw DomainError("untranscribable word: empty input");
  std::string lower = utf8::to_lower(word);
  if (const ExceptionLexicon::Entry* entry = exceptions.find(lower)) {
    PhonemeSequence out;
    for (const Syllable& syl : entry->syllables) {
      PhonemeSequence part = syl.phonemes();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::u32string cps = utf8::decode(lower);
  for (char32_t c : cps) {
    if (!utf8::is_spanish_letter(c)) {
      throw DomainError("untranscribable word \"" + word + "\": character '" +
                        utf8::encode(c) + "' outside Spanish orthography");
    }
  }

  PhonemeSequence out;
  auto emit = [&out](Phone p, bool stressed = false) { out.push_back({p, stressed}); };
  auto at = [&cps](std::size_t k) -> char32_t { return k < cps.size() ? cps[k] : 0; };

  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t c = cps[i];
    char32_t n1 = at(i + 1);
    switch (c) {
      case U'a': emit(Phone::a); break;
      case U'á': emit(Phone::a, true); break;
      case U'e': emit(Phone::e); break;
      case U'é': emit(Phone::e, true); break;
      case U'o': emit(Phone::o); break;
      case U'ó': emit(Phone::o, true); break;
      case U'í': emit(Phone::i, true); break;
      case U'ú': emit(Phone::u, true); break;
      case U'i':
        // unaccented weak vowel before another vowel letter: glide
        if (is_vowel_letter(n1) && n1 != U'i') emit(Phone::j);
        else emit(Phone::i);
        break;
      case U'u':
        if (is_vowel_letter(n1) && n1 != U'u') emit(Phone::w);
        else emit(Phone::u);
        break;
      case U'ü': emit(Phone::w); break;
      case U'b': case U'v': emit(Phone::b); break;
      case U'c':
        if (n1 == U'h') { emit(Phone::che); ++i; }
        else if (n1 == U'e' || n1 == U'é' || n1 == U'i' || n1 == U'í') emit(Phone::s);  // seseo
        else emit(Phone::k);
        break;
      case U'd': emit(Phone::d); break;
      case U'f': emit(Phone::f); break;
      case U'g':
        if (n1 == U'e' || n1 == U'é' || n1 == U'i' || n1 == U'í') emit(Phone::x);
        else if (n1 == U'u' && (at(i + 2) == U'e' || at(i + 2) == U'é' ||
                                at(i + 2) == U'i' || at(i + 2) == U'í')) {
          emit(Phone::g);
          ++i;  // silent u: guerra, anguila
        } else emit(Phone::g);
        break;
      case U'h': break;  // silent
      case U'j': emit(Phone::x); break;
      case U'k': emit(Phone::k); break;
      case U'l':
        if (n1 == U'l') { emit(Phone::ye); ++i; }  // yeísmo
        else emit(Phone::l);
        break;
      case U'm': emit(Phone::m); break;
      case U'n': emit(Phone::n); break;
      case U'ñ': emit(Phone::enye); break;
      case U'p': emit(Phone::p); break;
      case U'q':
        emit(Phone::k);
        if (n1 == U'u' && (at(i + 2) == U'e' || at(i + 2) == U'é' ||
                           at(i + 2) == U'i' || at(i + 2) == U'í')) {
          ++i;  // silent u: queso; quásar keeps its glide
        }
        break;
      case U'r':
        if (n1 == U'r') { emit(Phone::trill); ++i; }
        else emit(Phone::tap);  // provisional; fixed in the rhotic pass below
        break;
      case U's': emit(Phone::s); break;
      case U't': emit(Phone::t); break;
      case U'w': emit(Phone::w); break;
      case U'x': emit(Phone::k); emit(Phone::s); break;
      case U'y':
        if (is_vowel_letter(n1)) emit(Phone::ye);
        else emit(Phone::i);  // rey, muy, the conjunction y
        break;
      case U'z': emit(Phone::s); break;
      default:
        throw DomainError("untranscribable word \"" + word + "\": character '" +
                          utf8::encode(c) + "' outside Spanish orthography");
    }
    ++i;
  }

  if (out.empty()) {
    throw DomainError("untranscribable word \"" + word + "\": no pronounceable content");
  }

  // Rhotic pass: single r is a tap only between vocalic sounds; word
  // boundaries, codas and clusters take the trill symbol, the broad
  // transcription for the non-contrastive positions.
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].phone != Phone::tap) continue;
    bool prev_vowel = k > 0 && is_vowel(out[k - 1].phone);
    bool next_vocalic = k + 1 < out.size() && vocalic(out[k + 1].phone);
    if (!prev_vowel || !next_vocalic) out[k].phone = Phone::trill;
  }

  return out;
}

///////////////////////////////////////////////////////////////
///  Syllabification
///////////////////////////////////////////////////////////////

std::vector<Syllable> syllabify(const PhonemeSequence& phonemes) {
  bool any_vowel = std::any_of(phonemes.begin(), phonemes.end(),
                               [](const Phoneme& p) { return is_vowel(p.phone); });
  if (!any_vowel) {
    throw DomainError("no nucleus: /" + render_phonemes(phonemes) + "/ has no vowel");
  }

  // Nuclei with the consonant spans between them.
  std::vector<PhonemeSequence> nuclei;
  std::vector<PhonemeSequence> gaps;  // gaps[k] precedes nuclei[k]; +1 trailing
  PhonemeSequence gap;
  std::size_t i = 0;
  while (i < phonemes.size()) {
    if (!vocalic(phonemes[i].phone)) {
      gap.push_back(phonemes[i]);
      ++i;
      continue;
    }
    PhonemeSequence run;
    while (i < phonemes.size() && vocalic(phonemes[i].phone)) run.push_back(phonemes[i++]);
    for (PhonemeSequence& nucleus : split_nuclei(run)) {
      gaps.push_back(std::move(gap));
      gap.clear();
      nuclei.push_back(std::move(nucleus));
    }
  }
  gaps.push_back(std::move(gap));  // word-final consonants

  std::vector<Syllable> syllables(nuclei.size());
  for (std::size_t k = 0; k < nuclei.size(); ++k) syllables[k].nucleus = std::move(nuclei[k]);

  // Word-initial consonants all join the first onset.
  syllables.front().onset = std::move(gaps.front());
  syllables.back().coda = std::move(gaps.back());

  // Interior clusters: maximize the onset of the right-hand syllable.
  for (std::size_t k = 1; k < syllables.size(); ++k) {
    PhonemeSequence& cluster = gaps[k];
    std::size_t onset_len = 0;
    if (cluster.size() == 1) {
      onset_len = 1;
    } else if (cluster.size() >= 2) {
      onset_len = legal_onset_pair(cluster[cluster.size() - 2].phone,
                                   cluster[cluster.size() - 1].phone)
                      ? 2
                      : 1;
    }
    std::size_t coda_len = cluster.size() - onset_len;
    syllables[k - 1].coda.assign(cluster.begin(), cluster.begin() + coda_len);
    syllables[k].onset.assign(cluster.begin() + coda_len, cluster.end());
  }
  return syllables;
}

///////////////////////////////////////////////////////////////
///  Stress assignment
///////////////////////////////////////////////////////////////

std::pair<int, StressClass> assign_stress(const std::string& word,
                                          const std::vector<Syllable>& syllables,
                                          const ExceptionLexicon& exceptions) {
  if (syllables.empty()) throw DomainError("no nucleus: empty syllable list");
  std::string lower = utf8::to_lower(word);
  if (const ExceptionLexicon::Entry* entry = exceptions.find(lower)) {
    return {entry->stress_index, stress_class_from_index(entry->stress_index)};
  }

  int count = static_cast<int>(syllables.size());
  for (int k = 0; k < count; ++k) {
    for (const Phoneme& ph : syllables[k].nucleus) {
      if (ph.stressed) {
        int index = count - k;
        if (index > 3) {
          throw DomainError("unsupported stress: \"" + word +
                            "\" is accented before the antepenultimate syllable");
        }
        return {index, stress_class_from_index(index)};
      }
    }
  }

  if (count == 1) return {1, StressClass::oxytone};
  std::u32string cps = utf8::decode(lower);
  char32_t last = cps.back();
  bool penult = is_vowel_letter(last) || last == U'n' || last == U's';
  int index = penult ? 2 : 1;
  return {index, stress_class_from_index(index)};
}

PhonWord analyze(const std::string& word, const ExceptionLexicon& exceptions) {
  PhonWord w;
  w.orthography = utf8::to_lower(word);
  if (const ExceptionLexicon::Entry* entry = exceptions.find(w.orthography)) {
    w.syllables = entry->syllables;
    w.stress_index = entry->stress_index;
    w.stress_class = stress_class_from_index(entry->stress_index);
    for (const Syllable& syl : w.syllables) {
      PhonemeSequence part = syl.phonemes();
      w.phonemes.insert(w.phonemes.end(), part.begin(), part.end());
    }
    return w;
  }
  w.phonemes = transcribe(w.orthography, exceptions);
  w.syllables = syllabify(w.phonemes);
  auto [index, cls] = assign_stress(w.orthography, w.syllables, exceptions);
  w.stress_index = index;
  w.stress_class = cls;
  return w;
}

std::string render_word(const PhonWord& w) {
  std::string out;
  int count = static_cast<int>(w.syllables.size());
  int stressed_pos = count - w.stress_index;
  for (int k = 0; k < count; ++k) {
    if (k > 0) out += '.';
    if (k == stressed_pos) out += utf8::encode(kStressMark);
    out += render_phonemes(w.syllables[k].phonemes());
  }
  return out;
}

///////////////////////////////////////////////////////////////
///  Pronunciation strings and the exception lexicon
///////////////////////////////////////////////////////////////

std::pair<std::vector<Syllable>, int> parse_pronunciation(std::string_view pron) {
  std::u32string cps = utf8::decode(pron);
  std::vector<std::u32string> parts;
  parts.emplace_back();
  for (char32_t c : cps) {
    if (c == U'.') parts.emplace_back();
    else parts.back().push_back(c);
  }

  std::vector<Syllable> syllables;
  int stressed_pos = -1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::u32string part = parts[k];
    if (part.empty()) throw DomainError("malformed pronunciation \"" + std::string(pron) +
                                        "\": empty syllable");
    if (part.front() == kStressMark) {
      if (stressed_pos >= 0) {
        throw DomainError("malformed pronunciation \"" + std::string(pron) +
                          "\": more than one stress mark");
      }
      stressed_pos = static_cast<int>(k);
      part.erase(part.begin());
    }
    PhonemeSequence seq = parse_phonemes(utf8::encode(part));
    // exactly one vocalic group per syllable
    Syllable syl;
    std::size_t t = 0;
    while (t < seq.size() && !vocalic(seq[t].phone)) syl.onset.push_back(seq[t++]);
    while (t < seq.size() && vocalic(seq[t].phone)) syl.nucleus.push_back(seq[t++]);
    while (t < seq.size() && !vocalic(seq[t].phone)) syl.coda.push_back(seq[t++]);
    if (t != seq.size() || syl.nucleus.empty() ||
        std::none_of(syl.nucleus.begin(), syl.nucleus.end(),
                     [](const Phoneme& p) { return is_vowel(p.phone); })) {
      throw DomainError("malformed pronunciation \"" + std::string(pron) +
                        "\": syllable \"" + utf8::encode(parts[k]) +
                        "\" must contain exactly one vowel group");
    }
    syllables.push_back(std::move(syl));
  }
  if (stressed_pos < 0) {
    throw DomainError("malformed pronunciation \"" + std::string(pron) +
                      "\": missing stress mark");
  }
  int stress_index = static_cast<int>(syllables.size()) - stressed_pos;
  if (stress_index > 3) {
    throw DomainError("malformed pronunciation \"" + std::string(pron) +
                      "\": stress before the antepenultimate syllable");
  }
  // mark the stressed syllable's vowels so downstream consumers see them
  for (Phoneme& ph : syllables[stressed_pos].nucleus) {
    if (is_vowel(ph.phone)) ph.stressed = true;
  }
  return {std::move(syllables), stress_index};
}

void ExceptionLexicon::add(const std::string& word, std::string_view pron) {
  auto [syllables, stress_index] = parse_pronunciation(pron);
  entries_[utf8::to_lower(word)] = Entry{std::move(syllables), stress_index};
}

const ExceptionLexicon::Entry* ExceptionLexicon::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace rimax
