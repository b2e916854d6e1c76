#ifndef RIMAX_DEFSIM_HPP
#define RIMAX_DEFSIM_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rimax {

enum class Measure { cosine, dice, euclidean, manhattan, levenshtein, jaccard };

std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);  // DomainError on unknown names
bool is_distance(Measure m);  // euclidean, manhattan, levenshtein, jaccard

// How definition tokens are reduced before counting: dictionary
// lemmatization or ultrastemming (truncation to the first n characters).
struct NormalizeMode {
  enum class Kind { lemma, ultrastem };
  Kind kind = Kind::lemma;
  int stem_length = 4;  // ultrastem only

  friend bool operator==(const NormalizeMode&, const NormalizeMode&) = default;
  std::string render() const;  // "lemma" or "ultrastem-4"
};
NormalizeMode parse_mode(std::string_view text);

using Stoplist = std::set<std::string>;
using LemmaDict = std::map<std::string, std::string>;

// Lowercases, strips punctuation, drops stopwords, then lemmatizes
// (unknown words pass through) or ultrastems the survivors.
std::vector<std::string> normalize_definition(std::string_view text,
                                              const Stoplist& stoplist,
                                              const LemmaDict& lemmas,
                                              const NormalizeMode& mode);

// Term-frequency vector of one sense definition. The ordered term list is
// retained because the Levenshtein measure works on token sequences.
struct DefinitionVector {
  std::vector<std::string> terms;
  std::map<std::string, int> counts;

  bool empty() const { return counts.empty(); }
};

DefinitionVector vectorize(std::vector<std::string> terms);

// Raw score of one measure: similarity for cosine/dice, distance for the
// rest. Two empty vectors give 0 (no similarity, no distance).
double similarity(Measure m, const DefinitionVector& u, const DefinitionVector& v);

// Word-level score over all sense pairs: distances become 1/(1+d),
// similarities pass through, and the maximum over pairs wins. Always in
// [0,1]. DomainError when either word has no definitions.
double word_similarity(Measure m, std::span<const DefinitionVector> senses1,
                       std::span<const DefinitionVector> senses2);

// The bundled Spanish function-word list (data/stopwords_es.txt mirrors it).
const Stoplist& default_stoplist();

}  // namespace rimax

#endif  // RIMAX_DEFSIM_HPP
