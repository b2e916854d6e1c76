#include "rimax/defsim.hpp"

#include <algorithm>
#include <cmath>

#include "rimax/errors.hpp"
#include "rimax/utf8.hpp"

namespace rimax {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::cosine: return "cosine";
    case Measure::dice: return "dice";
    case Measure::euclidean: return "euclidean";
    case Measure::manhattan: return "manhattan";
    case Measure::levenshtein: return "levenshtein";
    default: return "jaccard";
  }
}

Measure parse_measure(std::string_view name) {
  for (Measure m : {Measure::cosine, Measure::dice, Measure::euclidean, Measure::manhattan,
                    Measure::levenshtein, Measure::jaccard}) {
    if (name == measure_name(m)) return m;
  }
  throw DomainError("unknown similarity measure \"" + std::string(name) + "\"");
}

bool is_distance(Measure m) {
  return m == Measure::euclidean || m == Measure::manhattan || m == Measure::levenshtein ||
         m == Measure::jaccard;
}

std::string NormalizeMode::render() const {
  if (kind == Kind::lemma) return "lemma";
  return "ultrastem-" + std::to_string(stem_length);
}

NormalizeMode parse_mode(std::string_view text) {
  if (text == "lemma") return {NormalizeMode::Kind::lemma, 4};
  constexpr std::string_view prefix = "ultrastem-";
  if (text.substr(0, prefix.size()) == prefix) {
    int n = 0;
    for (char c : text.substr(prefix.size())) {
      if (c < '0' || c > '9') throw DomainError("bad mode \"" + std::string(text) + "\"");
      n = n * 10 + (c - '0');
    }
    if (n < 1) throw DomainError("bad mode \"" + std::string(text) + "\": length must be >= 1");
    return {NormalizeMode::Kind::ultrastem, n};
  }
  throw DomainError("bad mode \"" + std::string(text) +
                    "\" (expected \"lemma\" or \"ultrastem-<n>\")");
}

std::vector<std::string> normalize_definition(std::string_view text, const Stoplist& stoplist,
                                              const LemmaDict& lemmas,
                                              const NormalizeMode& mode) {
  std::u32string cps = utf8::decode(text);
  std::vector<std::string> out;
  std::u32string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::string word = utf8::encode(token);
    token.clear();
    if (stoplist.count(word)) return;
    if (mode.kind == NormalizeMode::Kind::lemma) {
      auto it = lemmas.find(word);
      out.push_back(it == lemmas.end() ? word : it->second);
    } else {
      std::u32string stem = utf8::decode(word);
      if (static_cast<int>(stem.size()) > mode.stem_length) {
        stem.resize(mode.stem_length);
      }
      out.push_back(utf8::encode(stem));
    }
  };
  for (char32_t c : cps) {
    if (utf8::is_spanish_letter(c)) token.push_back(utf8::to_lower(c));
    else flush();
  }
  flush();
  return out;
}

DefinitionVector vectorize(std::vector<std::string> terms) {
  DefinitionVector v;
  for (const std::string& t : terms) v.counts[t]++;
  v.terms = std::move(terms);
  return v;
}

namespace {

double cosine_similarity(const DefinitionVector& u, const DefinitionVector& v) {
  double dot = 0, nu = 0, nv = 0;
  for (const auto& [t, c] : u.counts) {
    nu += double(c) * c;
    auto it = v.counts.find(t);
    if (it != v.counts.end()) dot += double(c) * it->second;
  }
  for (const auto& [t, c] : v.counts) nv += double(c) * c;
  if (nu == 0 || nv == 0) return 0;
  // sqrt of the product keeps results exact for integer-count vectors
  // (cosine(v,v) is 1.0, 1/5 is 0.2), which the >= threshold relies on
  return dot / std::sqrt(nu * nv);
}

std::size_t support_intersection(const DefinitionVector& u, const DefinitionVector& v) {
  std::size_t n = 0;
  for (const auto& [t, c] : u.counts) n += v.counts.count(t);
  return n;
}

double dice_coefficient(const DefinitionVector& u, const DefinitionVector& v) {
  std::size_t su = u.counts.size(), sv = v.counts.size();
  if (su + sv == 0) return 0;
  return 2.0 * double(support_intersection(u, v)) / double(su + sv);
}

double jaccard_distance(const DefinitionVector& u, const DefinitionVector& v) {
  std::size_t inter = support_intersection(u, v);
  std::size_t uni = u.counts.size() + v.counts.size() - inter;
  if (uni == 0) return 0;
  return 1.0 - double(inter) / double(uni);
}

double minkowski_distance(const DefinitionVector& u, const DefinitionVector& v, bool squared) {
  double acc = 0;
  auto iu = u.counts.begin();
  auto iv = v.counts.begin();
  auto add = [&acc, squared](double d) { acc += squared ? d * d : std::abs(d); };
  while (iu != u.counts.end() || iv != v.counts.end()) {
    if (iv == v.counts.end() || (iu != u.counts.end() && iu->first < iv->first)) {
      add(iu->second);
      ++iu;
    } else if (iu == u.counts.end() || iv->first < iu->first) {
      add(iv->second);
      ++iv;
    } else {
      add(double(iu->second) - double(iv->second));
      ++iu;
      ++iv;
    }
  }
  return squared ? std::sqrt(acc) : acc;
}

double levenshtein_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<double> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = double(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    double diag = row[0];
    row[0] = double(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      double cost = a[i - 1] == b[j - 1] ? 0 : 1;
      double next = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

}  // namespace

double similarity(Measure m, const DefinitionVector& u, const DefinitionVector& v) {
  switch (m) {
    case Measure::cosine: return cosine_similarity(u, v);
    case Measure::dice: return dice_coefficient(u, v);
    case Measure::euclidean: return minkowski_distance(u, v, true);
    case Measure::manhattan: return minkowski_distance(u, v, false);
    case Measure::levenshtein: return levenshtein_distance(u.terms, v.terms);
    default: return jaccard_distance(u, v);
  }
}

double word_similarity(Measure m, std::span<const DefinitionVector> senses1,
                       std::span<const DefinitionVector> senses2) {
  if (senses1.empty() || senses2.empty()) throw DomainError("no definitions");
  double best = 0;
  bool first = true;
  for (const DefinitionVector& u : senses1) {
    for (const DefinitionVector& v : senses2) {
      double raw = similarity(m, u, v);
      double s = is_distance(m) ? 1.0 / (1.0 + raw) : raw;
      if (first || s > best) best = s;
      first = false;
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

const Stoplist& default_stoplist() {
  // keep in sync with data/stopwords_es.txt (pinned by a test)
  static const Stoplist stoplist = {
      "a",      "al",      "algo",    "ante",   "aquel",   "aquella", "aquello",
      "cada",   "como",    "con",     "contra", "cual",    "cuando",  "cuya",
      "cuyo",   "de",      "del",     "desde",  "donde",   "dos",     "e",
      "el",     "ella",    "ello",    "en",     "entre",   "es",      "esa",
      "ese",    "eso",     "esta",    "este",   "esto",    "ha",      "hacia",
      "han",    "hasta",   "hay",     "la",     "las",     "le",      "les",
      "lo",     "los",     "más",     "me",     "mediante", "menos",  "mi",
      "muy",    "ni",      "no",      "nos",    "o",       "os",      "otra",
      "otro",   "para",    "pero",    "por",    "porque",  "pues",    "que",
      "quien",  "se",      "segun",   "según",  "ser",     "si",      "sin",
      "sobre",  "son",     "su",      "sus",    "tal",     "también", "tan",
      "te",     "tras",    "u",       "un",     "una",     "unas",    "uno",
      "unos",   "y",       "ya",
  };
  return stoplist;
}

}  // namespace rimax
