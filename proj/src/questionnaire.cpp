#include "rimax/questionnaire.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rimax/errors.hpp"

namespace rimax {

std::string_view option_source_name(OptionSource s) {
  switch (s) {
    case OptionSource::rimax_consonant: return "rimax-consonant";
    case OptionSource::rimax_assonant: return "rimax-assonant";
    default: return "baseline";
  }
}

namespace {

std::vector<std::string> take(const std::vector<std::string>& pool,
                              const std::set<std::string>& used, std::size_t k) {
  std::vector<std::string> out;
  for (const std::string& w : pool) {
    if (out.size() == k) break;
    if (!used.count(w)) out.push_back(w);
  }
  return out;
}

// std::shuffle is implementation-defined; a hand-rolled Fisher-Yates keeps
// questionnaires byte-identical across platforms.
template <typename T, std::size_t N>
void shuffle_array(std::array<T, N>& arr, std::mt19937& gen) {
  for (std::size_t i = N - 1; i > 0; --i) {
    std::size_t j = gen() % (i + 1);
    std::swap(arr[i], arr[j]);
  }
}

}  // namespace

Questionnaire make_questionnaire(const RhymeDictionary& dict, const DefinitionTable& defs,
                                 const std::vector<std::string>& words, std::size_t k,
                                 std::uint32_t seed, const RankConfig& cfg,
                                 SimilarityCache* cache) {
  Questionnaire q;
  q.seed = seed;
  q.k = k;
  std::mt19937 gen(seed);

  RankConfig full = cfg;
  full.limit.reset();  // need complete orderings to allocate disjoint sets

  for (const std::string& word : words) {
    std::vector<std::string> consonant_pool = dict.consonant_rhymes(word);
    if (consonant_pool.empty()) {
      throw DomainError("dissonant word: \"" + word + "\" has no consonant rhymes");
    }

    RankedRhymeList cons = rank_rhymes(dict, defs, word, RhymeKind::consonant, full, cache);
    RankedRhymeList asso = rank_rhymes(dict, defs, word, RhymeKind::assonant, full, cache);

    std::set<std::string> used;
    QuestionnaireItem item;
    item.query = word;

    std::vector<std::string> ranked_cons;
    for (const RankedEntry& e : cons.entries) ranked_cons.push_back(e.word);
    std::vector<std::string> set_cons = take(ranked_cons, used, k);
    used.insert(set_cons.begin(), set_cons.end());

    // baseline: the consonant class as a printed dictionary lists it,
    // reverse-phonetic order, no ranking
    std::vector<std::string> set_base = take(consonant_pool, used, k);
    used.insert(set_base.begin(), set_base.end());

    std::vector<std::string> ranked_asso;
    for (const RankedEntry& e : asso.entries) ranked_asso.push_back(e.word);
    std::vector<std::string> set_asso = take(ranked_asso, used, k);
    used.insert(set_asso.begin(), set_asso.end());

    std::array<std::pair<std::vector<std::string>, OptionSource>, 3> slots = {{
        {std::move(set_cons), OptionSource::rimax_consonant},
        {std::move(set_asso), OptionSource::rimax_assonant},
        {std::move(set_base), OptionSource::baseline},
    }};
    shuffle_array(slots, gen);

    for (std::size_t s = 0; s < 3; ++s) {
      if (slots[s].first.size() < k) {
        item.warnings.push_back(std::string(option_source_name(slots[s].second)) + " set for \"" +
                                word + "\" has only " + std::to_string(slots[s].first.size()) +
                                " of " + std::to_string(k) + " words");
      }
      item.options[s] = std::move(slots[s].first);
      item.provenance[s] = slots[s].second;
    }
    q.items.push_back(std::move(item));
  }
  return q;
}

std::string render_questionnaire(const Questionnaire& q) {
  std::string out;
  out += "# seed: " + std::to_string(q.seed) + "\n";
  out += "# k: " + std::to_string(q.k) + "\n";
  for (std::size_t n = 0; n < q.items.size(); ++n) {
    const QuestionnaireItem& item = q.items[n];
    out += "\n";
    out += std::to_string(n + 1) + ". ¿Qué conjunto de rimas se relaciona mejor con la palabra “" +
           item.query + "”?\n";
    for (std::size_t s = 0; s < 3; ++s) {
      out += "   ";
      out += static_cast<char>('a' + s);
      out += ") ";
      for (std::size_t w = 0; w < item.options[s].size(); ++w) {
        if (w > 0) out += ", ";
        out += item.options[s][w];
      }
      out += "\n";
    }
  }
  return out;
}

std::string render_answer_key(const Questionnaire& q) {
  std::string out;
  for (const QuestionnaireItem& item : q.items) {
    for (std::size_t s = 0; s < 3; ++s) {
      out += item.query;
      out += '\t';
      out += static_cast<char>('a' + s);
      out += '\t';
      out += option_source_name(item.provenance[s]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace rimax
