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

#ifndef BANKLENS_EMBED_SIMILARITY_H_
#define BANKLENS_EMBED_SIMILARITY_H_

#include "banklens/core/types.h"

namespace banklens::embed {

// Cosine similarity, clamped to [-1, 1]. Throws ArgumentError on a dims
// mismatch and SimilarityError when either vector is all zeros.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

}  // namespace banklens::embed

#endif  // BANKLENS_EMBED_SIMILARITY_H_
