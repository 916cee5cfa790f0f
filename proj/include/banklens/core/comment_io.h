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

#ifndef BANKLENS_CORE_COMMENT_IO_H_
#define BANKLENS_CORE_COMMENT_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "banklens/core/types.h"

namespace banklens {

// {"id","source","text","timestamp","lang_hint"}; absent optionals are null.
nlohmann::ordered_json comment_to_json(const Comment& comment);

// Requires "id" and "text". "source" defaults to "". Throws ParseError.
Comment comment_from_json(const nlohmann::json& j);

// One comment per line; blank lines are skipped. Throws IoError or
// ParseError with the line number.
std::vector<Comment> read_comments(const std::filesystem::path& path);
std::vector<Comment> parse_comments(const std::string& jsonl);

// Writes one compact JSON object per line. Throws IoError.
void write_json_lines(const std::filesystem::path& path,
                      const std::vector<nlohmann::ordered_json>& rows);
void write_comments(const std::filesystem::path& path,
                    const std::vector<Comment>& comments);

}  // namespace banklens

#endif  // BANKLENS_CORE_COMMENT_IO_H_
