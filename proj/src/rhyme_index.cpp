#include "rimax/rhyme_index.hpp"

#include <algorithm>

#include "rimax/errors.hpp"

namespace rimax {

namespace {

std::string accented_vowel(Phone p) {
  switch (p) {
    case Phone::a: return "á";
    case Phone::e: return "é";
    case Phone::i: return "í";
    case Phone::o: return "ó";
    case Phone::u: return "ú";
    default: return std::string(phone_symbol(p));
  }
}

}  // namespace

std::string AssonantKey::render() const {
  std::string out = "*";
  for (std::size_t k = 0; k < vowels.size(); ++k) {
    out += '.';
    out += k == 0 ? accented_vowel(vowels[k]) : std::string(phone_symbol(vowels[k]));
  }
  return out;
}

std::string ConsonantKey::render() const {
  std::string out = "~";
  for (std::size_t k = 0; k < suffix.size(); ++k) {
    out += k == 0 ? accented_vowel(suffix[k]) : std::string(phone_symbol(suffix[k]));
  }
  return out;
}

AssonantKey assonant_key(const PhonWord& w) {
  AssonantKey key;
  int count = static_cast<int>(w.syllables.size());
  for (int k = count - w.stress_index; k < count; ++k) {
    key.vowels.push_back(w.syllables[k].nucleus_vowel());
  }
  return key;
}

ConsonantKey consonant_key(const PhonWord& w) {
  int count = static_cast<int>(w.syllables.size());
  int stressed_pos = count - w.stress_index;

  // locate the stressed vowel inside the full phoneme sequence
  std::size_t offset = 0;
  for (int k = 0; k < stressed_pos; ++k) offset += w.syllables[k].phonemes().size();
  const Syllable& stressed = w.syllables[stressed_pos];
  offset += stressed.onset.size() + stressed.nucleus_vowel_pos();

  ConsonantKey key;
  for (std::size_t k = offset; k < w.phonemes.size(); ++k) {
    key.suffix.push_back(w.phonemes[k].phone);
  }
  return key;
}

RhymeDictionary RhymeDictionary::build(const std::vector<PhonWord>& lexicon) {
  RhymeDictionary dict;
  for (const PhonWord& w : lexicon) {
    if (!dict.registry_.emplace(w.orthography, w).second) {
      throw DomainError("duplicate entry: \"" + w.orthography + "\"");
    }
  }
  for (const auto& [word, w] : dict.registry_) {
    Group& group = dict.groups_[static_cast<int>(w.stress_class)];
    group.assonant[assonant_key(w)].push_back(word);
    group.consonant[consonant_key(w)].push_back(word);
  }
  auto page_order = [&dict](const std::string& a, const std::string& b) {
    const PhonemeSequence& pa = dict.registry_.at(a).phonemes;
    const PhonemeSequence& pb = dict.registry_.at(b).phonemes;
    if (reverse_phonetic_less(pa, pb)) return true;
    if (reverse_phonetic_less(pb, pa)) return false;
    return a < b;  // homophones: plain codepoint order
  };
  for (Group& group : dict.groups_) {
    for (auto& [key, members] : group.assonant) std::sort(members.begin(), members.end(), page_order);
    for (auto& [key, members] : group.consonant) std::sort(members.begin(), members.end(), page_order);
  }
  return dict;
}

const PhonWord& RhymeDictionary::lookup(const std::string& word) const {
  auto it = registry_.find(word);
  if (it == registry_.end()) throw DomainError("word not in lexicon: \"" + word + "\"");
  return it->second;
}

bool RhymeDictionary::contains(const std::string& word) const {
  return registry_.count(word) > 0;
}

StressClass RhymeDictionary::stress_group(const std::string& word) const {
  return lookup(word).stress_class;
}

std::vector<std::string> RhymeDictionary::assonant_rhymes(const std::string& word) const {
  const PhonWord& w = lookup(word);
  const auto& members = group(w.stress_class).assonant.at(assonant_key(w));
  std::vector<std::string> out;
  out.reserve(members.size() - 1);
  for (const std::string& m : members) {
    if (m != word) out.push_back(m);
  }
  return out;
}

std::vector<std::string> RhymeDictionary::consonant_rhymes(const std::string& word) const {
  const PhonWord& w = lookup(word);
  const auto& members = group(w.stress_class).consonant.at(consonant_key(w));
  std::vector<std::string> out;
  out.reserve(members.size() - 1);
  for (const std::string& m : members) {
    if (m != word) out.push_back(m);
  }
  return out;
}

std::vector<std::string> RhymeDictionary::rhymes(const std::string& word, RhymeKind kind) const {
  return kind == RhymeKind::assonant ? assonant_rhymes(word) : consonant_rhymes(word);
}

std::array<std::size_t, 3> RhymeDictionary::group_sizes() const {
  std::array<std::size_t, 3> sizes{0, 0, 0};
  for (const auto& [word, w] : registry_) sizes[static_cast<int>(w.stress_class)]++;
  return sizes;
}

std::string RhymeDictionary::export_text() const {
  std::string out;
  for (int g = 0; g < 3; ++g) {
    StressClass cls = static_cast<StressClass>(g);
    auto append = [&out, cls](const std::string& key, const std::vector<std::string>& members) {
      out += stress_class_name(cls);
      out += '\t';
      out += key;
      out += '\t';
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k > 0) out += ',';
        out += members[k];
      }
      out += '\n';
    };
    for (const auto& [key, members] : groups_[g].assonant) append(key.render(), members);
    for (const auto& [key, members] : groups_[g].consonant) append(key.render(), members);
  }
  return out;
}

}  // namespace rimax
