// Copyright 2026 The coref-forge Authors.
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

// Umbrella header.

#ifndef COREF_FORGE_COREF_FORGE_H_
#define COREF_FORGE_COREF_FORGE_H_

#include "coref_forge/ablate.h"
#include "coref_forge/adjudicate.h"
#include "coref_forge/augment.h"
#include "coref_forge/conll.h"
#include "coref_forge/document.h"
#include "coref_forge/error.h"
#include "coref_forge/jsonl.h"
#include "coref_forge/lexicon.h"
#include "coref_forge/random.h"
#include "coref_forge/score.h"
#include "coref_forge/span_remap.h"

#endif  // COREF_FORGE_COREF_FORGE_H_
