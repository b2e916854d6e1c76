#ifndef RIMAX_UTF8_HPP
#define RIMAX_UTF8_HPP

#include <string>
#include <string_view>

namespace rimax::utf8 {

// Decodes a UTF-8 string into codepoints. Throws DomainError on malformed
// input; no replacement characters, loaders are expected to be strict.
std::u32string decode(std::string_view text);

std::string encode(char32_t cp);
std::string encode(const std::u32string& cps);

// Lowercase for the Spanish alphabet (ASCII letters plus Á É Í Ó Ú Ü Ñ).
// Everything else passes through unchanged.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

bool is_spanish_letter(char32_t cp);

}  // namespace rimax::utf8

#endif  // RIMAX_UTF8_HPP
