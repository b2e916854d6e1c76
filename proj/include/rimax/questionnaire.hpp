#ifndef RIMAX_QUESTIONNAIRE_HPP
#define RIMAX_QUESTIONNAIRE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rimax/ranker.hpp"

namespace rimax {

// Where each option set came from. Hidden from the respondent; written to
// the answer key.
enum class OptionSource { rimax_consonant, rimax_assonant, baseline };

std::string_view option_source_name(OptionSource s);

struct QuestionnaireItem {
  std::string query;
  // options[k] is printed with letter 'a'+k after shuffling
  std::array<std::vector<std::string>, 3> options;
  std::array<OptionSource, 3> provenance;
  std::vector<std::string> warnings;  // sets shorter than k
};

struct Questionnaire {
  std::uint32_t seed = 0;
  std::size_t k = 5;
  std::vector<QuestionnaireItem> items;
};

// One evaluation question per word: top-k ranked consonant rhymes, top-k
// ranked assonant rhymes, and an unranked reverse-phonetic baseline (what a
// printed rhyming dictionary shows on its pages). The three sets are kept
// disjoint by letting the ranked consonant set pick first, the baseline
// next, the assonant set last. Dissonant words are rejected.
Questionnaire make_questionnaire(const RhymeDictionary& dict, const DefinitionTable& defs,
                                 const std::vector<std::string>& words, std::size_t k,
                                 std::uint32_t seed, const RankConfig& cfg,
                                 SimilarityCache* cache);

// Printable questionnaire document and its answer key
// (`word<TAB>letter<TAB>provenance` lines).
std::string render_questionnaire(const Questionnaire& q);
std::string render_answer_key(const Questionnaire& q);

}  // namespace rimax

#endif  // RIMAX_QUESTIONNAIRE_HPP
