#ifndef RIMAX_RHYME_INDEX_HPP
#define RIMAX_RHYME_INDEX_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rimax/phonology.hpp"

namespace rimax {

// Nucleus vowels from the stressed syllable to the last one; the assonant
// equivalence class. Length 1/2/3 for oxytones/paroxytones/proparoxytones.
struct AssonantKey {
  std::vector<Phone> vowels;

  auto operator<=>(const AssonantKey&) const = default;
  std::string render() const;  // "*.ú.u.a"
};

// Phoneme suffix from the stressed vowel (not its syllable onset, nor a
// preceding glide) to the end of the word; the consonant equivalence class.
struct ConsonantKey {
  std::vector<Phone> suffix;

  auto operator<=>(const ConsonantKey&) const = default;
  std::string render() const;  // "~ámaɾa"
};

AssonantKey assonant_key(const PhonWord& w);
ConsonantKey consonant_key(const PhonWord& w);

enum class RhymeKind { assonant, consonant };

///////////////////////////////////////////////////////////////
///  The rhyming dictionary R: oxytone, paroxytone and
///  proparoxytone groups, each indexed by assonant and
///  consonant keys. Class members are kept in reverse-phonetic
///  order. Immutable once built; safe for concurrent reads.
///////////////////////////////////////////////////////////////
class RhymeDictionary {
 public:
  struct Group {
    std::map<AssonantKey, std::vector<std::string>> assonant;
    std::map<ConsonantKey, std::vector<std::string>> consonant;
  };

  // Throws DomainError on duplicate orthographies.
  static RhymeDictionary build(const std::vector<PhonWord>& lexicon);

  const PhonWord& lookup(const std::string& word) const;  // DomainError if absent
  bool contains(const std::string& word) const;

  StressClass stress_group(const std::string& word) const;

  // All words sharing the query's key, in reverse-phonetic order, the
  // query itself excluded. DomainError for unknown words.
  std::vector<std::string> assonant_rhymes(const std::string& word) const;
  std::vector<std::string> consonant_rhymes(const std::string& word) const;
  std::vector<std::string> rhymes(const std::string& word, RhymeKind kind) const;

  const Group& group(StressClass c) const { return groups_[static_cast<int>(c)]; }
  const std::map<std::string, PhonWord>& registry() const { return registry_; }
  std::size_t size() const { return registry_.size(); }
  std::array<std::size_t, 3> group_sizes() const;

  // Deterministic text dump, one line per class:
  //   <stress_class>\t<key>\t<member,member,...>
  std::string export_text() const;

 private:
  std::map<std::string, PhonWord> registry_;
  std::array<Group, 3> groups_;
};

}  // namespace rimax

#endif  // RIMAX_RHYME_INDEX_HPP
