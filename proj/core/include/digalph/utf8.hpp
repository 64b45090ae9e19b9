#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace digalph::utf8 {

// Strict decoder: rejects overlong forms, surrogates and values above U+10FFFF.
// Returns std::nullopt on malformed input and stores the byte offset of the first bad
// sequence in `bad_offset` when provided.
std::optional<std::u32string> decode(std::string_view bytes, std::size_t* bad_offset = nullptr);

bool valid(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view text);

// "U+0629"
std::string code_point_label(char32_t cp);

}  // namespace digalph::utf8
