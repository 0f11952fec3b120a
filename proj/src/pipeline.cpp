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

#include "jsoninfer/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jsoninfer {

UnionType fold_union_serial(std::span<const JsonValue> samples, const AlgebraConfig& cfg) {
  UnionType acc;
  for (const auto& s : samples) acc = merge(acc, union_infer(s, cfg), cfg);
  return acc;
}

UnionType fold_union_fast(std::span<const JsonValue> samples, const AlgebraConfig& cfg) {
  UnionType acc;
  for (const auto& s : samples) merge_into(acc, union_infer(s, cfg), cfg);
  return acc;
}

#ifdef _OPENMP

UnionType fold_union_parallel(std::span<const JsonValue> samples, const AlgebraConfig& cfg) {
  const int threads = omp_get_max_threads();
  std::vector<UnionType> partials(threads);
#pragma omp parallel num_threads(threads)
  {
    UnionType local;
    const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      merge_into(local, union_infer(samples[static_cast<std::size_t>(i)], cfg), cfg);
    }
    partials[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  UnionType acc;
  for (auto& p : partials) merge_into(acc, p, cfg);
  return acc;
}

#else

UnionType fold_union_parallel(std::span<const JsonValue> samples, const AlgebraConfig& cfg) {
  return fold_union_fast(samples, cfg);
}

#endif

PipelineResult run_pipeline_on(const std::vector<JsonValue>& samples, const PipelineConfig& cfg) {
  PipelineResult result;
  AlgebraConfig algebra{cfg.enum_limit};

  UnionType folded = cfg.parallel ? fold_union_parallel(samples, algebra)
                                  : fold_union_fast(samples, algebra);

  if (cfg.emit == EmitKind::UnionJson) {
    result.output = union_to_json(folded);
    return result;
  }

  ReprConfig repr_cfg;
  repr_cfg.variant_split = cfg.variant_split;
  repr_cfg.max_variants = cfg.max_variants;
  repr_cfg.algebra = algebra;

  BuiltEnv built = build_repr_env(folded, cfg.root_name, repr_cfg);
  if (cfg.unify) {
    for (const auto& entry : unify_similar_records(built, cfg.unify_threshold, repr_cfg)) {
      result.diagnostics.push_back("unify: " + entry.from + " -> " + entry.into);
    }
  }
  ReprEnv env = promote_empty(std::move(built.env));

  result.output = render(env, cfg.emit == EmitKind::DebugJson ? Dialect::DebugJson : Dialect::Decl);
  return result;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  std::vector<std::string> warnings;
  WarnSink warn = [&warnings](const std::string& w) { warnings.push_back(w); };
  std::vector<JsonValue> samples = load_samples(cfg.paths, cfg.mode, warn);
  PipelineResult result = run_pipeline_on(samples, cfg);
  result.diagnostics.insert(result.diagnostics.begin(), warnings.begin(), warnings.end());
  return result;
}

}  // namespace jsoninfer
