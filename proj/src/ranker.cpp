#include "rimax/ranker.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <sstream>

#include "rimax/errors.hpp"

namespace rimax {

SimilarityCache::Key SimilarityCache::make_key(Measure m, const NormalizeMode& mode,
                                               std::string w1, std::string w2) {
  if (w2 < w1) std::swap(w1, w2);
  return Key{std::string(measure_name(m)) + "\t" + mode.render(), std::move(w1), std::move(w2)};
}

double SimilarityCache::get_or_compute(Measure m, const NormalizeMode& mode,
                                       const std::string& w1, const std::string& w2,
                                       const std::function<double()>& compute) {
  Key key = make_key(m, mode, w1, w2);
  {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  double score = compute();  // deterministic: redundant computation is harmless
  std::unique_lock lock(mutex_);
  values_.emplace(std::move(key), score);
  return score;
}

std::optional<double> SimilarityCache::find(Measure m, const NormalizeMode& mode,
                                            const std::string& w1, const std::string& w2) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(make_key(m, mode, w1, w2));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void SimilarityCache::store(Measure m, const NormalizeMode& mode, const std::string& w1,
                            const std::string& w2, double score) {
  std::unique_lock lock(mutex_);
  values_.insert_or_assign(make_key(m, mode, w1, w2), score);
}

std::size_t SimilarityCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void SimilarityCache::save(const std::filesystem::path& path, Measure m,
                           const NormalizeMode& mode) const {
  std::string scope = std::string(measure_name(m)) + "\t" + mode.render();
  std::string out = scope + "\n";
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, score] : values_) {
      if (key.scope != scope) continue;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.9f", score);
      out += key.w1 + "\t" + key.w2 + "\t" + buf + "\n";
    }
  }
  write_file(path, out);
}

void SimilarityCache::load(const std::filesystem::path& path, Measure m,
                           const NormalizeMode& mode) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DomainError(path.string() + ": empty cache file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string scope = std::string(measure_name(m)) + "\t" + mode.render();
  if (line != scope) {
    throw DomainError(path.string() + ": cache header \"" + line +
                      "\" does not match configuration \"" + scope + "\"");
  }
  std::size_t lineno = 1;
  std::unique_lock lock(mutex_);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw DomainError(path.string() + ":" + std::to_string(lineno) +
                        ": expected `w1<TAB>w2<TAB>score`");
    }
    std::string w1 = line.substr(0, t1);
    std::string w2 = line.substr(t1 + 1, t2 - t1 - 1);
    double score = 0;
    try {
      std::size_t pos = 0;
      score = std::stod(line.substr(t2 + 1), &pos);
      if (pos != line.size() - t2 - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw DomainError(path.string() + ":" + std::to_string(lineno) + ": bad score");
    }
    values_.insert_or_assign(Key{scope, std::move(w1), std::move(w2)}, score);
  }
}

DefinitionTable build_definition_table(const Lexicon& lex, const Stoplist& stoplist,
                                       const LemmaDict& lemmas, const NormalizeMode& mode) {
  DefinitionTable table;
  for (const LexiconEntry& entry : lex.entries) {
    if (entry.senses.empty()) continue;
    std::vector<DefinitionVector>& vectors = table[entry.orthography];
    for (const SenseDefinition& sense : entry.senses) {
      vectors.push_back(vectorize(normalize_definition(sense.text, stoplist, lemmas, mode)));
    }
  }
  return table;
}

RankedRhymeList rank_rhymes(const RhymeDictionary& dict, const DefinitionTable& defs,
                            const std::string& query, RhymeKind kind, const RankConfig& cfg,
                            SimilarityCache* cache) {
  RankedRhymeList out{query, kind, {}, 0};
  if (cfg.limit && *cfg.limit < 1) throw DomainError("limit must be >= 1");
  auto qdefs = defs.find(query);
  if (!dict.contains(query)) throw DomainError("word not in lexicon: \"" + query + "\"");
  if (qdefs == defs.end()) throw DomainError("no definitions for \"" + query + "\"");

  for (const std::string& candidate : dict.rhymes(query, kind)) {
    auto cdefs = defs.find(candidate);
    if (cdefs == defs.end()) {
      ++out.skipped_undefined;
      continue;
    }
    auto compute = [&]() {
      return word_similarity(cfg.measure, qdefs->second, cdefs->second);
    };
    double score = cache
                       ? cache->get_or_compute(cfg.measure, cfg.mode, query, candidate, compute)
                       : compute();
    if (score >= cfg.threshold) out.entries.push_back({candidate, score});
  }

  std::sort(out.entries.begin(), out.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  if (cfg.limit && out.entries.size() > *cfg.limit) out.entries.resize(*cfg.limit);
  return out;
}

}  // namespace rimax
