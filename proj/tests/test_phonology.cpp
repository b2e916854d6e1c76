#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rimax/errors.hpp"
#include "rimax/phonology.hpp"
#include "rimax/utf8.hpp"

using namespace rimax;
using rimax::test::WordGenerator;

namespace {

ExceptionLexicon bundled_exceptions() {
  return load_exception_lexicon(rimax::test::data_file("exceptions_es.tsv"));
}

std::string pron(const std::string& word, const ExceptionLexicon& exc = {}) {
  return render_word(analyze(word, exc));
}

// The orthographic stress rule, restated independently of assign_stress.
int expected_stress_index(const std::string& word, const PhonWord& w) {
  std::u32string cps = utf8::decode(word);
  int accent_syllable = -1;
  int count = static_cast<int>(w.syllables.size());
  for (int k = 0; k < count; ++k) {
    for (const Phoneme& ph : w.syllables[k].nucleus) {
      if (ph.stressed) accent_syllable = k;
    }
  }
  if (accent_syllable >= 0) return count - accent_syllable;
  if (count == 1) return 1;
  char32_t last = cps.back();
  bool penult = last == U'a' || last == U'e' || last == U'i' || last == U'o' || last == U'u' ||
                last == U'n' || last == U's';
  return penult ? 2 : 1;
}

}  // namespace

TEST_CASE("golden transcriptions") {
  CHECK(pron("color") == "ko.ˈlor");
  CHECK(pron("mano") == "ˈma.no");
  CHECK(pron("brújula") == "ˈbru.xu.la");
  CHECK(pron("esdrújula") == "es.ˈdru.xu.la");
  CHECK(pron("cámara") == "ˈka.ma.ɾa");
  CHECK(pron("púrpura") == "ˈpur.pu.ɾa");

  CHECK(analyze("color", {}).stress_class == StressClass::oxytone);
  CHECK(analyze("mano", {}).stress_class == StressClass::paroxytone);
  CHECK(analyze("brújula", {}).stress_class == StressClass::proparoxytone);
}

TEST_CASE("raw phoneme sequences") {
  CHECK(render_phonemes(transcribe("mano", {})) == "mano");
  CHECK(render_phonemes(transcribe("a", {})) == "a");
  CHECK(render_phonemes(transcribe("brújula", {})) == "bruxula");
  CHECK(render_phonemes(transcribe("quesadilla", {})) == "kesadiʝa");
  CHECK(render_phonemes(transcribe("gente", {})) == "xente");
  CHECK(render_phonemes(transcribe("cereza", {})) == "seɾesa");
  CHECK(render_phonemes(transcribe("chamula", {})) == "tʃamula");
  CHECK(render_phonemes(transcribe("año", {})) == "aɲo");
  CHECK(render_phonemes(transcribe("vaca", {})) == "baka");
  CHECK(render_phonemes(transcribe("taxi", {})) == "taksi");
  CHECK(render_phonemes(transcribe("huevo", {})) == "webo");
  CHECK(render_phonemes(transcribe("guerra", {})) == "gera");
  CHECK(render_phonemes(transcribe("vergüenza", {})) == "bergwensa");
}

TEST_CASE("trill and tap distribution") {
  CHECK(render_phonemes(transcribe("pero", {})) == "peɾo");    // intervocalic tap
  CHECK(render_phonemes(transcribe("perro", {})) == "pero");   // rr trill
  CHECK(render_phonemes(transcribe("rosa", {})) == "rosa");    // initial trill
  CHECK(render_phonemes(transcribe("honra", {})) == "onra");   // after n
  CHECK(render_phonemes(transcribe("brisa", {})) == "brisa");  // cluster
  CHECK(render_phonemes(transcribe("amor", {})) == "amor");    // coda
  CHECK(render_phonemes(transcribe("paria", {})) == "paɾja");  // tap before glide
}

TEST_CASE("loanwords via the exception lexicon") {
  ExceptionLexicon exc = bundled_exceptions();
  CHECK(pron("flash", exc) == "ˈflaʃ");
  CHECK(pron("collage", exc) == "ko.ˈlaʃ");
  CHECK(pron("garage", exc) == "ga.ˈraʃ");
  CHECK(pron("cottage", exc) == "ko.ˈtaʃ");
  CHECK(pron("squash", exc) == "es.ˈkwaʃ");
  CHECK(pron("méxico", exc) == "ˈme.xi.ko");

  PhonWord squash = analyze("squash", exc);
  CHECK(squash.stress_index == 1);
  CHECK(squash.stress_class == StressClass::oxytone);

  // entries come back verbatim, not through the rules
  CHECK(render_phonemes(transcribe("flash", exc)) == "flaʃ");
  // and without the exception the rules give something else
  CHECK(render_phonemes(transcribe("flash", {})) == "flas");
}

TEST_CASE("diphthongs and hiatus") {
  CHECK(pron("día") == "ˈdi.a");        // accented weak vowel breaks the diphthong
  CHECK(pron("país") == "pa.ˈis");
  CHECK(pron("baúl") == "ba.ˈul");
  CHECK(pron("maíz") == "ma.ˈis");
  CHECK(pron("ciudad") == "sju.ˈdad");  // weak + weak, one syllable
  CHECK(pron("agua") == "ˈa.gwa");
  CHECK(pron("aire") == "ˈai.ɾe");      // falling diphthong
  CHECK(pron("auto") == "ˈau.to");
  CHECK(pron("buey") == "ˈbwei");       // triphthong
  CHECK(pron("león") == "le.ˈon");      // strong + strong hiatus
  CHECK(pron("leer") == "le.ˈer");
  CHECK(pron("museo") == "mu.ˈse.o");
  CHECK(pron("tierra") == "ˈtje.ra");
  CHECK(pron("cuídate") == "ˈkwi.da.te");  // accented weak after glide stays a diphthong
}

TEST_CASE("syllabification clusters") {
  CHECK(pron("atlas") == "ˈa.tlas");        // tl onset in Mexican Spanish
  CHECK(pron("construir") == "kons.ˈtrwir");
  CHECK(pron("texto") == "ˈteks.to");
  CHECK(pron("axila") == "ak.ˈsi.la");
  CHECK(pron("instante") == "ins.ˈtan.te");
  CHECK(pron("sombra") == "ˈsom.bra");
}

TEST_CASE("syllabify rejects vowelless input") {
  PhonemeSequence consonants = parse_phonemes("pst");
  CHECK_THROWS_WITH_AS(syllabify(consonants), doctest::Contains("no nucleus"), DomainError);
}

TEST_CASE("transcribe rejects foreign characters") {
  CHECK_THROWS_WITH_AS(transcribe("año2000", {}), doctest::Contains("untranscribable"),
                       DomainError);
  CHECK_THROWS_WITH_AS(transcribe("coca-cola", {}), doctest::Contains("'-'"), DomainError);
  CHECK_THROWS_AS(transcribe("", {}), DomainError);
  CHECK_THROWS_AS(transcribe("garçon", {}), DomainError);
  // silent letters only: nothing to pronounce
  CHECK_THROWS_WITH_AS(transcribe("h", {}), doctest::Contains("no pronounceable"), DomainError);
}

TEST_CASE("stress assignment rules") {
  ExceptionLexicon none;
  auto cls = [&none](const std::string& w) { return analyze(w, none).stress_class; };
  CHECK(cls("color") == StressClass::oxytone);        // ends in consonant
  CHECK(cls("mano") == StressClass::paroxytone);      // ends in vowel
  CHECK(cls("orden") == StressClass::paroxytone);     // ends in n
  CHECK(cls("lunes") == StressClass::paroxytone);     // ends in s
  CHECK(cls("sol") == StressClass::oxytone);          // monosyllable
  CHECK(cls("césped") == StressClass::paroxytone);    // accent wins
  CHECK(cls("brújula") == StressClass::proparoxytone);
  CHECK(analyze("sí", none).stress_index == 1);

  CHECK_THROWS_WITH_AS(analyze("cuéntamelo", none), doctest::Contains("antepenultimate"),
                       DomainError);
}

TEST_CASE("uppercase input is normalized") {
  CHECK(pron("Brújula") == "ˈbru.xu.la");
  CHECK(analyze("MANO", {}).orthography == "mano");
}

TEST_CASE("exception pronunciation parsing is strict") {
  ExceptionLexicon exc;
  CHECK_THROWS_WITH_AS(exc.add("x", "flaʃ"), doctest::Contains("missing stress mark"),
                       DomainError);
  CHECK_THROWS_WITH_AS(exc.add("x", "ˈflZʃ"), doctest::Contains("unknown phoneme"), DomainError);
  CHECK_THROWS_WITH_AS(exc.add("x", "ˈpst"), doctest::Contains("vowel"), DomainError);
  CHECK_THROWS_WITH_AS(exc.add("x", "ˈa..to"), doctest::Contains("empty syllable"), DomainError);
  CHECK_THROWS_WITH_AS(exc.add("x", "ˈa.ˈto"), doctest::Contains("more than one stress"),
                       DomainError);
  CHECK_THROWS_WITH_AS(exc.add("x", "ˈa.be.se.de.o"), doctest::Contains("antepenultimate"),
                       DomainError);
}

TEST_CASE("a penultimate-stress word family lands in one group") {
  for (const std::string& w : {"bula", "gula", "angula", "chula", "mula", "chamula"}) {
    PhonWord pw = analyze(w, {});
    CHECK(pw.stress_class == StressClass::paroxytone);
  }
}

TEST_CASE("pipeline invariants over the sample lexicon") {
  ExceptionLexicon exc = bundled_exceptions();
  Lexicon lex = load_lexicon(rimax::test::data_file("sample_lexicon.tsv"));
  REQUIRE(lex.entries.size() == 200);
  for (const LexiconEntry& entry : lex.entries) {
    PhonWord w = analyze(entry.orthography, exc);
    CHECK(!w.phonemes.empty());
    CHECK(w.stress_index >= 1);
    CHECK(w.stress_index <= 3);
    CHECK(w.stress_index <= static_cast<int>(w.syllables.size()));
    CHECK(w.stress_class == stress_class_from_index(w.stress_index));
    // rule-derived words obey the orthographic stress rule
    if (transcribe(entry.orthography, {}) == w.phonemes) {
      CHECK(w.stress_index == expected_stress_index(entry.orthography, w));
    }

    // syllables concatenate back to the phoneme sequence
    PhonemeSequence joined;
    for (const Syllable& syl : w.syllables) {
      PhonemeSequence part = syl.phonemes();
      joined.insert(joined.end(), part.begin(), part.end());
    }
    CHECK(joined == w.phonemes);

    // every syllable has exactly one vowel group
    for (const Syllable& syl : w.syllables) {
      int vowels = 0;
      for (const Phoneme& ph : syl.nucleus) {
        if (is_vowel(ph.phone)) ++vowels;
      }
      CHECK(vowels >= 1);
      CHECK(syl.nucleus.size() <= 3);
    }
  }
}

TEST_CASE("random words: determinism, round-trip, stress rule") {
  WordGenerator gen(20240816);
  ExceptionLexicon none;
  for (int n = 0; n < 500; ++n) {
    std::string word = gen.next();
    CAPTURE(word);
    PhonWord w1 = analyze(word, none);
    PhonWord w2 = analyze(word, none);
    CHECK(render_word(w1) == render_word(w2));

    PhonemeSequence joined;
    for (const Syllable& syl : w1.syllables) {
      PhonemeSequence part = syl.phonemes();
      joined.insert(joined.end(), part.begin(), part.end());
    }
    CHECK(joined == w1.phonemes);
    CHECK(w1.stress_index == expected_stress_index(word, w1));
  }
}
