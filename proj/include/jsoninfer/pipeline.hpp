//  Copyright 2026 The jsoninfer Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef JSONINFER_PIPELINE_HPP_
#define JSONINFER_PIPELINE_HPP_

#include <span>
#include <string>
#include <vector>

#include "jsoninfer/codegen.hpp"
#include "jsoninfer/compound_constraints.hpp"
#include "jsoninfer/json_value.hpp"
#include "jsoninfer/representation.hpp"

namespace jsoninfer {

// Serial reference fold over the pure merge; kept as the ground truth the
// optimized kernels are checked against.
UnionType fold_union_serial(std::span<const JsonValue> samples, const AlgebraConfig& cfg = {});

// Serial kernel accumulating in place instead of rebuilding the accumulator
// on every sample.
UnionType fold_union_fast(std::span<const JsonValue> samples, const AlgebraConfig& cfg = {});

// OpenMP tree reduction over per-thread in-place partials. Merge
// commutativity and associativity make the result equal to the serial fold.
UnionType fold_union_parallel(std::span<const JsonValue> samples, const AlgebraConfig& cfg = {});

enum class EmitKind { Decl, DebugJson, UnionJson };

struct PipelineConfig {
  std::vector<std::string> paths;
  SampleMode mode = SampleMode::WholeFile;
  std::string root_name = "Root";
  EmitKind emit = EmitKind::Decl;
  std::size_t enum_limit = 10;
  double unify_threshold = 0.6;
  bool unify = true;
  bool variant_split = true;
  std::size_t max_variants = 10;
  bool parallel = true;
};

struct PipelineResult {
  std::string output;
  std::vector<std::string> diagnostics;
};

// Loads samples, folds inference into one union, applies the finishing
// passes, and renders. Throws LoadError/ParseError/ValidationError.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// Same pipeline from already-parsed samples (used by tests).
PipelineResult run_pipeline_on(const std::vector<JsonValue>& samples, const PipelineConfig& cfg);

}  // namespace jsoninfer

#endif  // JSONINFER_PIPELINE_HPP_
