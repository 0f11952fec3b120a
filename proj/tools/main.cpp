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

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "jsoninfer/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learns union types from sample JSON documents and emits type declarations"};
  app.require_subcommand(1);

  jsoninfer::PipelineConfig cfg;
  std::string mode = "whole-file";
  std::string emit = "decl";
  bool no_unify = false;
  bool no_variant_split = false;

  CLI::App* infer = app.add_subcommand("infer", "Infer a type from sample documents");
  infer->add_option("paths", cfg.paths, "Sample files")->required()->expected(-1);
  infer->add_option("--mode", mode, "How files map to samples")
      ->check(CLI::IsMember({"whole-file", "json-lines", "array-elements"}))
      ->capture_default_str();
  infer->add_option("--root-name", cfg.root_name, "Name of the toplevel type")
      ->capture_default_str();
  infer->add_option("--emit", emit, "Output form")
      ->check(CLI::IsMember({"decl", "debug-json", "union-json"}))
      ->capture_default_str();
  infer->add_option("--enum-limit", cfg.enum_limit, "Largest enumeration kept before widening")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
      ->capture_default_str();
  infer->add_option("--unify-threshold", cfg.unify_threshold,
                    "Label similarity above which records merge")
      ->check(CLI::Range(1e-9, 1.0))
      ->capture_default_str();
  infer->add_flag("--no-unify", no_unify, "Disable record unification");
  infer->add_flag("--no-variant-split", no_variant_split,
                  "Always keep records as a single constructor");
  infer->add_option("--max-variants", cfg.max_variants,
                    "Most key-set groups a record may split into")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsageError;
  }

  cfg.unify = !no_unify;
  cfg.variant_split = !no_variant_split;
  if (mode == "json-lines") {
    cfg.mode = jsoninfer::SampleMode::JsonLines;
  } else if (mode == "array-elements") {
    cfg.mode = jsoninfer::SampleMode::ArrayElements;
  } else {
    cfg.mode = jsoninfer::SampleMode::WholeFile;
  }
  if (emit == "debug-json") {
    cfg.emit = jsoninfer::EmitKind::DebugJson;
  } else if (emit == "union-json") {
    cfg.emit = jsoninfer::EmitKind::UnionJson;
  } else {
    cfg.emit = jsoninfer::EmitKind::Decl;
  }

  try {
    jsoninfer::PipelineResult result = jsoninfer::run_pipeline(cfg);
    for (const auto& d : result.diagnostics) std::cerr << d << '\n';
    std::cout << result.output;
    return kExitOk;
  } catch (const jsoninfer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}
