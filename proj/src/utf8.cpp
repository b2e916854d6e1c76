#include "rimax/utf8.hpp"

#include "rimax/errors.hpp"

namespace rimax::utf8 {

namespace {

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw DomainError("invalid UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > text.size()) throw DomainError("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(text[i + k]);
      if (!is_continuation(b)) throw DomainError("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    if (len == 2 && cp < 0x80) throw DomainError("overlong UTF-8 sequence");
    if (len == 3 && cp < 0x800) throw DomainError("overlong UTF-8 sequence");
    if (len == 4 && cp < 0x10000) throw DomainError("overlong UTF-8 sequence");
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string encode(const std::u32string& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) out += encode(cp);
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  switch (cp) {
    case U'Á': return U'á';
    case U'É': return U'é';
    case U'Í': return U'í';
    case U'Ó': return U'ó';
    case U'Ú': return U'ú';
    case U'Ü': return U'ü';
    case U'Ñ': return U'ñ';
    default: return cp;
  }
}

std::string to_lower(std::string_view text) {
  std::u32string cps = decode(text);
  for (char32_t& cp : cps) cp = to_lower(cp);
  return encode(cps);
}

bool is_spanish_letter(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  if (cp >= U'A' && cp <= U'Z') return true;
  switch (cp) {
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü': case U'ñ':
    case U'Á': case U'É': case U'Í': case U'Ó': case U'Ú': case U'Ü': case U'Ñ':
      return true;
    default:
      return false;
  }
}

}  // namespace rimax::utf8
