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

#include "banklens/core/comment_io.h"

#include <fstream>
#include <sstream>

#include "banklens/core/error.h"

namespace banklens {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json comment_to_json(const Comment& comment) {
  ordered_json j;
  j["id"] = comment.id();
  j["source"] = comment.source();
  j["text"] = comment.text();
  j["timestamp"] = comment.timestamp() ? ordered_json(*comment.timestamp()) : nullptr;
  j["lang_hint"] = comment.lang_hint()
                       ? ordered_json(std::string(to_string(*comment.lang_hint())))
                       : nullptr;
  return j;
}

Comment comment_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("comment must be a JSON object");
    std::optional<std::string> timestamp;
    if (j.contains("timestamp") && !j["timestamp"].is_null()) {
      timestamp = j["timestamp"].get<std::string>();
    }
    std::optional<Language> lang;
    if (j.contains("lang_hint") && !j["lang_hint"].is_null()) {
      lang = parse_language(j["lang_hint"].get<std::string>());
    }
    const json& id = j.at("id");
    return Comment(id.is_string() ? id.get<std::string>() : id.dump(),
                   j.value("source", std::string()), j.at("text").get<std::string>(),
                   std::move(timestamp), lang);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::vector<Comment> parse_comments(const std::string& jsonl) {
  std::vector<Comment> out;
  std::istringstream in(jsonl);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(comment_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(e.what(), number);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
  }
  return out;
}

std::vector<Comment> read_comments(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_comments(buffer.str());
}

void write_json_lines(const std::filesystem::path& path,
                      const std::vector<ordered_json>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const ordered_json& row : rows) out << row.dump() << '\n';
  if (!out) throw IoError("cannot write " + path.string());
}

void write_comments(const std::filesystem::path& path,
                    const std::vector<Comment>& comments) {
  std::vector<ordered_json> rows;
  rows.reserve(comments.size());
  for (const Comment& c : comments) rows.push_back(comment_to_json(c));
  write_json_lines(path, rows);
}

}  // namespace banklens
