// Copyright 2026 The Banklens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "banklens/core/utf8.h"

#include <cstdint>
#include <optional>

#include "banklens/core/error.h"

namespace banklens {
namespace {

// Decodes one scalar starting at `pos`; advances `pos`. Returns nullopt on a
// malformed sequence without advancing.
std::optional<char32_t> decode_one(std::string_view bytes, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<std::uint8_t>(bytes[i]);
  };
  const std::uint8_t lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t extra = 0;
  char32_t scalar = 0;
  char32_t min_value = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    scalar = lead & 0x1F;
    min_value = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    scalar = lead & 0x0F;
    min_value = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    scalar = lead & 0x07;
    min_value = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + extra >= bytes.size()) return std::nullopt;
  for (std::size_t i = 1; i <= extra; ++i) {
    const std::uint8_t b = byte(pos + i);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    scalar = (scalar << 6) | (b & 0x3F);
  }
  if (scalar < min_value || scalar > 0x10FFFF ||
      (scalar >= 0xD800 && scalar <= 0xDFFF)) {
    return std::nullopt;
  }
  pos += extra + 1;
  return scalar;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const auto scalar = decode_one(bytes, pos);
    if (!scalar) {
      throw DecodeError("invalid UTF-8 sequence at byte offset " +
                        std::to_string(pos));
    }
    out.push_back(*scalar);
  }
  return out;
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (!decode_one(bytes, pos)) return false;
  }
  return true;
}

void append_utf8(char32_t c, std::string& out) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size());
  for (char32_t c : scalars) append_utf8(c, out);
  return out;
}

std::size_t utf8_length(std::string_view bytes) {
  std::size_t pos = 0;
  std::size_t count = 0;
  while (pos < bytes.size()) {
    if (!decode_one(bytes, pos)) {
      throw DecodeError("invalid UTF-8 sequence at byte offset " +
                        std::to_string(pos));
    }
    ++count;
  }
  return count;
}

}  // namespace banklens
