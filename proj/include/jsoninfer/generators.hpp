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

#ifndef JSONINFER_GENERATORS_HPP_
#define JSONINFER_GENERATORS_HPP_

#include <random>

#include "jsoninfer/compound_constraints.hpp"
#include "jsoninfer/counted.hpp"
#include "jsoninfer/typelike.hpp"

namespace jsoninfer {

using Rng = std::mt19937_64;

// Random terms. `depth` bounds nesting: 0 yields scalars only.
inline constexpr int kTermDepth = 3;
JsonNumber gen_json_number(Rng& rng);
std::string gen_small_string(Rng& rng);
JsonValue gen_json_value(Rng& rng, int depth = kTermDepth);
JsonArray gen_json_array(Rng& rng, int depth = kTermDepth);
JsonObject gen_json_object(Rng& rng, int depth = kTermDepth);

// Random constraints. Compound constraints are built by folding inference
// over random terms (plus occasional top injections) so that field evidence
// stays consistent with the observed key sets.
PresenceConstraint gen_presence(Rng& rng);
NumberConstraint gen_number_constraint(Rng& rng);
StringConstraint gen_string_constraint(Rng& rng, const AlgebraConfig& cfg = {});
FreeType gen_free_type(Rng& rng);
RowConstraint gen_row_constraint(Rng& rng, const AlgebraConfig& cfg = {});
ArrayConstraint gen_array_constraint(Rng& rng, const AlgebraConfig& cfg = {});
MappingConstraint gen_mapping_constraint(Rng& rng, const AlgebraConfig& cfg = {});
RecordConstraint gen_record_constraint(Rng& rng, const AlgebraConfig& cfg = {});
ObjectConstraint gen_object_constraint(Rng& rng, const AlgebraConfig& cfg = {});
UnionType gen_union_type(Rng& rng, const AlgebraConfig& cfg = {});
Counted<NumberConstraint> gen_counted_number(Rng& rng);

// Members of each instance's beyond set. Compound beyond values are built
// componentwise as towers of `depth` layers; with depth >= the depth of the
// checked terms they accept every term, which is what the beyond laws need.
inline constexpr int kBeyondDepth = kTermDepth + 1;
PresenceConstraint gen_beyond_presence();
NumberConstraint gen_beyond_number();
StringConstraint gen_beyond_string();
FreeType gen_beyond_free();
RowConstraint gen_beyond_row();
RecordConstraint gen_beyond_record();
MappingConstraint gen_beyond_mapping(int depth = kBeyondDepth);
ArrayConstraint gen_beyond_array(int depth = kBeyondDepth);
ObjectConstraint gen_beyond_object(int depth = kBeyondDepth);
UnionType gen_beyond_union(int depth = kBeyondDepth);
Counted<NumberConstraint> gen_beyond_counted_number(Rng& rng);

}  // namespace jsoninfer

#endif  // JSONINFER_GENERATORS_HPP_
