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

#ifndef BANKLENS_CORE_PACKAGED_DATA_H_
#define BANKLENS_CORE_PACKAGED_DATA_H_

#include <string>
#include <string_view>
#include <vector>

namespace banklens {

// Contents of a data file compiled into the library, e.g. "stopwords_en.txt".
// Throws LookupError for an unknown name.
std::string_view packaged_data(std::string_view name);

std::vector<std::string> packaged_data_names();

}  // namespace banklens

#endif  // BANKLENS_CORE_PACKAGED_DATA_H_
