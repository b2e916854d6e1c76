#ifndef RIMAX_TESTS_HELPERS_HPP
#define RIMAX_TESTS_HELPERS_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rimax/lexicon_io.hpp"
#include "rimax/phonology.hpp"

namespace rimax::test {

inline std::filesystem::path data_dir() { return RIMAX_DATA_DIR; }

inline std::filesystem::path data_file(const std::string& name) { return data_dir() / name; }

// Scratch directory removed when the object dies.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("rimax_" + tag + "_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::filesystem::path file(const std::string& name) const { return path / name; }
};

inline std::string slurp(const std::filesystem::path& p) { return read_file(p); }

#ifdef RIMAX_BIN
struct CliResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

inline CliResult run_cli(const std::filesystem::path& capture, const std::string& args) {
  std::string cmd = std::string(RIMAX_BIN) + " " + args + " > " + capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && (status & 0x7f) == 0) ? ((status >> 8) & 0xff) : -1;
  return {code, read_file(capture)};
}
#endif

// Random orthographic Spanish-like words, always transcribable, at most
// three syllables so any accent stays within the stress window.
class WordGenerator {
 public:
  explicit WordGenerator(std::uint32_t seed) : gen_(seed) {}

  std::string next() {
    static const std::vector<std::string> onsets = {
        "",   "b",  "c",  "d",  "f",  "g",  "l",  "m",  "n",  "p",
        "r",  "s",  "t",  "ch", "ll", "ñ",  "j",  "qu", "br", "tr",
        "pl", "gr", "fl", "v",  "z",  "rr"};
    static const std::vector<std::string> vowels = {"a", "e", "i", "o", "u"};
    static const std::vector<std::string> accented = {"á", "é", "í", "ó", "ú"};
    static const std::vector<std::string> codas = {"", "", "", "n", "s", "l", "r", "d"};

    int syllables = 1 + static_cast<int>(gen_() % 3);
    int accent_at = gen_() % 2 == 0 ? static_cast<int>(gen_() % syllables) : -1;
    std::string word;
    for (int k = 0; k < syllables; ++k) {
      std::string onset = pick(onsets);
      if (k > 0 && (onset == "rr" || onset == "qu")) onset = "t";
      if (k == 0 && onset == "rr") onset = "r";
      word += onset;
      word += k == accent_at ? pick(accented) : pick(vowels);
      if (k + 1 == syllables) word += pick(codas);
    }
    // qu must precede e/i; patch other vowels
    for (std::size_t p = 0; (p = word.find("qu", p)) != std::string::npos; p += 2) {
      std::size_t v = p + 2;
      if (v < word.size() && word.compare(v, 1, "e") != 0 && word.compare(v, 1, "i") != 0) {
        word.replace(v, replacement_len(word, v), "e");
      }
    }
    return word;
  }

  std::mt19937& rng() { return gen_; }

 private:
  static std::size_t replacement_len(const std::string& word, std::size_t at) {
    unsigned char c = static_cast<unsigned char>(word[at]);
    return c < 0x80 ? 1 : 2;  // accented vowels are two bytes
  }
  const std::string& pick(const std::vector<std::string>& xs) { return xs[gen_() % xs.size()]; }

  std::mt19937 gen_;
};

}  // namespace rimax::test

#endif  // RIMAX_TESTS_HELPERS_HPP
