#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace stylochron::utf8 {

struct Decoded {
  char32_t cp = 0;
  int len = 0;  // 0 signals an invalid sequence at this position
};

/// Decode one codepoint starting at byte offset i. Rejects overlong forms,
/// surrogates and values above U+10FFFF.
Decoded decode(std::string_view s, std::size_t i);

/// True when the whole buffer is well-formed UTF-8.
bool valid(std::string_view s);

/// Number of codepoints in a well-formed buffer.
std::size_t count_codepoints(std::string_view s);

}  // namespace stylochron::utf8
