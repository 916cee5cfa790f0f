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

#ifndef BANKLENS_CORE_UTF8_H_
#define BANKLENS_CORE_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace banklens {

// Strict decoding: rejects overlong forms, surrogates and scalars above
// U+10FFFF. Throws DecodeError with the byte offset of the first bad
// sequence.
std::u32string decode_utf8(std::string_view bytes);

bool is_valid_utf8(std::string_view bytes);

void append_utf8(char32_t scalar, std::string& out);
std::string encode_utf8(std::u32string_view scalars);

// Number of scalar values. Throws DecodeError on malformed input.
std::size_t utf8_length(std::string_view bytes);

}  // namespace banklens

#endif  // BANKLENS_CORE_UTF8_H_
