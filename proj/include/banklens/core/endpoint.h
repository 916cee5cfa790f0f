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

#ifndef BANKLENS_CORE_ENDPOINT_H_
#define BANKLENS_CORE_ENDPOINT_H_

#include <string>

namespace banklens {

// "http://host:8080/api/" -> {"http://host:8080", "/api"}.
struct Endpoint {
  std::string scheme_host;
  std::string prefix;
};

// Throws ArgumentError when the URL has no scheme.
Endpoint split_endpoint(const std::string& url);

}  // namespace banklens

#endif  // BANKLENS_CORE_ENDPOINT_H_
