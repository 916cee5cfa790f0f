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

#include "banklens/embed/similarity.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "banklens/core/error.h"

namespace banklens::embed {

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dims() != v.dims()) {
    throw ArgumentError("cosine: dims " + std::to_string(u.dims()) + " vs " +
                        std::to_string(v.dims()));
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.dims(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    throw SimilarityError("cosine of a zero vector is undefined");
  }
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

}  // namespace banklens::embed
