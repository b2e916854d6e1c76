#ifndef RIMAX_RANKER_HPP
#define RIMAX_RANKER_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rimax/defsim.hpp"
#include "rimax/lexicon_io.hpp"
#include "rimax/rhyme_index.hpp"

namespace rimax {

struct RankConfig {
  Measure measure = Measure::cosine;
  double threshold = 0.0;  // seuil; entries scoring below it are dropped
  NormalizeMode mode;
  std::optional<std::size_t> limit;  // max list length
};

struct RankedEntry {
  std::string word;
  double score;
};

struct RankedRhymeList {
  std::string query;
  RhymeKind kind;
  std::vector<RankedEntry> entries;      // scores non-increasing
  std::size_t skipped_undefined = 0;     // candidates without definitions
};

///////////////////////////////////////////////////////////////
///  Pairwise word-similarity cache, keyed by measure, mode
///  and the unordered word pair. Values are deterministic so
///  concurrent readers plus serialized writers are safe.
///////////////////////////////////////////////////////////////
class SimilarityCache {
 public:
  double get_or_compute(Measure m, const NormalizeMode& mode, const std::string& w1,
                        const std::string& w2, const std::function<double()>& compute);
  std::optional<double> find(Measure m, const NormalizeMode& mode, const std::string& w1,
                             const std::string& w2) const;
  void store(Measure m, const NormalizeMode& mode, const std::string& w1,
             const std::string& w2, double score);

  std::size_t size() const;

  // Cache file: header `measure<TAB>mode`, then `w1<TAB>w2<TAB>score`
  // lines with w1 < w2 and 9 decimal places.
  void save(const std::filesystem::path& path, Measure m, const NormalizeMode& mode) const;
  // Merges the file's entries; the header must match the given scope.
  void load(const std::filesystem::path& path, Measure m, const NormalizeMode& mode);

 private:
  struct Key {
    std::string scope;  // "<measure>\t<mode>"
    std::string w1, w2;
    auto operator<=>(const Key&) const = default;
  };
  static Key make_key(Measure m, const NormalizeMode& mode, std::string w1, std::string w2);

  mutable std::shared_mutex mutex_;
  std::map<Key, double> values_;
};

// Sense vectors per word, the ranking side of the lexicon.
using DefinitionTable = std::map<std::string, std::vector<DefinitionVector>>;

// Builds sense vectors for every defined word under one normalization mode.
DefinitionTable build_definition_table(const Lexicon& lex, const Stoplist& stoplist,
                                       const LemmaDict& lemmas, const NormalizeMode& mode);

// Scores the query's rhymes of the given kind by definition similarity,
// filters by threshold, sorts best-first (alphabetical tie-break) and
// truncates to the limit. Candidates without definitions are skipped and
// counted. The cache may be null.
RankedRhymeList rank_rhymes(const RhymeDictionary& dict, const DefinitionTable& defs,
                            const std::string& query, RhymeKind kind, const RankConfig& cfg,
                            SimilarityCache* cache);

}  // namespace rimax

#endif  // RIMAX_RANKER_HPP
