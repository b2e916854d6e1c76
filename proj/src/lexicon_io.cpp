#include "rimax/lexicon_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rimax/errors.hpp"
#include "rimax/utf8.hpp"

namespace rimax {

namespace {

// Splits into lines, tolerating CRLF. The final newline is optional.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
  }
  return lines;
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t lineno,
                       const std::string& what) {
  throw DomainError(path.string() + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

const LexiconEntry* Lexicon::find(const std::string& word) const {
  for (const LexiconEntry& e : entries) {
    if (e.orthography == word) return &e;
  }
  return nullptr;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  Lexicon lex;
  std::map<std::string, std::size_t> index;  // word -> entry position
  std::set<std::pair<std::string, int>> seen_senses;

  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (skippable(line)) continue;
    std::vector<std::string> fields = split_tabs(line);
    std::string word = utf8::to_lower(fields[0]);
    if (word.empty()) fail(path, n + 1, "empty word field");

    if (fields.size() == 1) {  // headword without definitions
      if (index.count(word)) fail(path, n + 1, "duplicate entry: \"" + word + "\"");
      index[word] = lex.entries.size();
      lex.entries.push_back({word, {}});
      continue;
    }
    if (fields.size() != 3) {
      fail(path, n + 1, "expected `word<TAB>sense<TAB>definition`, got " +
                            std::to_string(fields.size()) + " field(s)");
    }
    int sense = 0;
    try {
      std::size_t pos = 0;
      sense = std::stoi(fields[1], &pos);
      if (pos != fields[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(path, n + 1, "bad sense index \"" + fields[1] + "\"");
    }
    if (sense < 1) fail(path, n + 1, "sense index must be >= 1");
    if (fields[2].empty()) fail(path, n + 1, "empty definition");
    if (!seen_senses.insert({word, sense}).second) {
      fail(path, n + 1, "duplicate sense " + std::to_string(sense) + " for \"" + word + "\"");
    }
    auto it = index.find(word);
    if (it == index.end()) {
      index[word] = lex.entries.size();
      lex.entries.push_back({word, {}});
      it = index.find(word);
    } else if (lex.entries[it->second].senses.empty()) {
      fail(path, n + 1, "duplicate entry: \"" + word + "\"");
    }
    lex.entries[it->second].senses.push_back({word, sense, fields[2]});
  }
  return lex;
}

Stoplist load_stoplist(const std::filesystem::path& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  Stoplist out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (skippable(lines[n])) continue;
    if (lines[n].find('\t') != std::string::npos) {
      fail(path, n + 1, "stoplist lines hold a single word");
    }
    out.insert(utf8::to_lower(lines[n]));
  }
  return out;
}

LemmaDict load_lemma_dict(const std::filesystem::path& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  LemmaDict out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (skippable(lines[n])) continue;
    std::vector<std::string> fields = split_tabs(lines[n]);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      fail(path, n + 1, "expected `surface<TAB>lemma`");
    }
    std::string surface = utf8::to_lower(fields[0]);
    auto [it, inserted] = out.emplace(surface, utf8::to_lower(fields[1]));
    if (!inserted) fail(path, n + 1, "duplicate surface form \"" + surface + "\"");
  }
  return out;
}

ExceptionLexicon load_exception_lexicon(const std::filesystem::path& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  ExceptionLexicon out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (skippable(lines[n])) continue;
    std::vector<std::string> fields = split_tabs(lines[n]);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      fail(path, n + 1, "expected `word<TAB>pronunciation`");
    }
    if (out.find(utf8::to_lower(fields[0]))) {
      fail(path, n + 1, "duplicate entry: \"" + fields[0] + "\"");
    }
    try {
      out.add(fields[0], fields[1]);
    } catch (const DomainError& e) {
      fail(path, n + 1, e.what());
    }
  }
  return out;
}

///////////////////////////////////////////////////////////////
///  Control file
///////////////////////////////////////////////////////////////

ControlFile parse_control(const std::string& text) {
  ControlFile cf;
  std::vector<std::string> lines = split_lines(text);
  std::set<std::string> seen;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (skippable(line)) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("control line " + std::to_string(n + 1) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (!seen.insert(key).second) {
      throw DomainError("control line " + std::to_string(n + 1) + ": duplicate key \"" + key + "\"");
    }
    try {
      if (key == "measure") {
        cf.measure = parse_measure(value);
      } else if (key == "seuil") {
        try {
          std::size_t pos = 0;
          cf.seuil = std::stod(value, &pos);
          if (pos != value.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw DomainError("bad seuil \"" + value + "\"");
        }
        if (cf.seuil < 0.0 || cf.seuil > 1.0) {
          throw DomainError("seuil out of range [0,1]: " + value);
        }
      } else if (key == "mode") {
        cf.mode = parse_mode(value);
      } else if (key == "lexicon") {
        cf.lexicon = value;
      } else if (key == "cache") {
        cf.cache = value;
      } else {
        throw DomainError("unknown control key \"" + key + "\"");
      }
    } catch (const DomainError& e) {
      throw DomainError("control line " + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return cf;
}

std::string render_control(const ControlFile& cf) {
  std::ostringstream out;
  out << "measure=" << measure_name(cf.measure) << "\n";
  out.precision(17);
  out << "seuil=" << cf.seuil << "\n";
  out << "mode=" << cf.mode.render() << "\n";
  out << "lexicon=" << cf.lexicon << "\n";
  out << "cache=" << cf.cache << "\n";
  return out.str();
}

ControlFile load_control(const std::filesystem::path& path) {
  try {
    return parse_control(read_file(path));
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

void save_control(const ControlFile& cf, const std::filesystem::path& path) {
  write_file(path, render_control(cf));
}

std::filesystem::path resolve_relative(const std::filesystem::path& base_file,
                                       const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  return base_file.parent_path() / p;
}

}  // namespace rimax
