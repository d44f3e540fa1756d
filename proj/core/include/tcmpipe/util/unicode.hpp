#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace tcmpipe::util {

// Decodes UTF-8 into Unicode scalar values. Invalid byte sequences decode to
// U+FFFD (one replacement per rejected byte).
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

// Number of Unicode scalar values in a UTF-8 string. Lengths throughout the
// pipeline are counted in scalar values, never bytes.
std::size_t char_count(std::string_view text);

// Canonical composition (NFC).
std::string normalize_nfc(std::string_view text);

// Ingest normalization: CRLF -> LF, then NFC.
std::string normalize_ingest(std::string_view text);

} // namespace tcmpipe::util
