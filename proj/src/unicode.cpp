#include "bitext/unicode.hpp"

#include <stdexcept>

namespace bitext {

namespace {

[[noreturn]] void bad_utf8(std::size_t at) {
    throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(at));
}

}  // namespace

DecodedText decode_utf8_with_offsets(std::string_view text) {
    DecodedText out;
    out.byte_size = text.size();
    out.scalars.reserve(text.size());
    out.offsets.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto b0 = static_cast<unsigned char>(text[i]);
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
            bad_utf8(i);
        }
        if (i + len > text.size()) bad_utf8(i);
        for (std::size_t k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) bad_utf8(i + k);
            cp = (cp << 6) | (b & 0x3F);
        }
        // reject overlong forms and surrogates
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            bad_utf8(i);
        }
        out.scalars.push_back(cp);
        out.offsets.push_back(i);
        i += len;
    }
    return out;
}

std::u32string decode_utf8(std::string_view text) {
    return decode_utf8_with_offsets(text).scalars;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode_utf8(std::u32string_view scalars) {
    std::string out;
    out.reserve(scalars.size());
    for (char32_t cp : scalars) out += encode_utf8(cp);
    return out;
}

bool is_space_scalar(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
           c == U'\v' || c == 0x00A0;
}

bool is_digit_scalar(char32_t c) {
    return (c >= U'0' && c <= U'9') || (c >= 0x0966 && c <= 0x096F);
}

bool is_letter_scalar(char32_t c) {
    if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
    if (c < 0x80) return false;
    if (is_space_scalar(c) || is_digit_scalar(c)) return false;
    // Non-ASCII scalars count as letters except common punctuation ranges.
    if (c == 0x0964 || c == 0x0965) return false;          // danda, double danda
    if (c >= 0x2000 && c <= 0x206F) return false;          // general punctuation
    if (c == 0x00A1 || c == 0x00BF || c == 0x00AB || c == 0x00BB) return false;
    return true;
}

bool is_word_scalar(char32_t c) { return is_letter_scalar(c) || is_digit_scalar(c); }

char32_t to_lower_scalar(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 32;
    return c;
}

}  // namespace bitext
