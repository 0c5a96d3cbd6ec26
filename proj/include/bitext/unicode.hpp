#ifndef BITEXT_UNICODE_HPP
#define BITEXT_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

// Decoded UTF-8 text with the byte offset of each scalar, so segmenters can
// report byte spans into the original buffer.
struct DecodedText {
    std::u32string scalars;
    std::vector<std::size_t> offsets;  // byte offset of scalars[i]
    std::size_t byte_size = 0;
};

// Throws std::invalid_argument on malformed UTF-8.
DecodedText decode_utf8_with_offsets(std::string_view text);
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view scalars);
std::string encode_utf8(char32_t scalar);

bool is_space_scalar(char32_t c);
bool is_digit_scalar(char32_t c);   // ASCII digits plus Devanagari digits
bool is_letter_scalar(char32_t c);
bool is_word_scalar(char32_t c);    // letter or digit
char32_t to_lower_scalar(char32_t c);

}  // namespace bitext

#endif
