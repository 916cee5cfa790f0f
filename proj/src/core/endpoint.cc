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

#include "banklens/core/endpoint.h"

#include "banklens/core/error.h"

namespace banklens {

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ArgumentError("endpoint needs a scheme: " + url);
  }
  const auto path_begin = url.find('/', scheme_end + 3);
  Endpoint out;
  out.scheme_host = url.substr(0, path_begin);
  if (path_begin != std::string::npos) out.prefix = url.substr(path_begin);
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

}  // namespace banklens
