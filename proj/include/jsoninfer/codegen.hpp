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

#ifndef JSONINFER_CODEGEN_HPP_
#define JSONINFER_CODEGEN_HPP_

#include <string>

#include "jsoninfer/representation.hpp"

namespace jsoninfer {

enum class Dialect { Decl, DebugJson };

// Deterministic rendering: declarations in topological order from the
// toplevel, one line each, UTF-8 with LF endings. Unresolved references
// raise ValidationError naming the missing type.
std::string render(const ReprEnv& env, Dialect dialect = Dialect::Decl);

// Serialized constraint state, component names fixed by the debug format.
std::string union_to_json(const UnionType& u);

}  // namespace jsoninfer

#endif  // JSONINFER_CODEGEN_HPP_
