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

#ifndef JSONINFER_REPRESENTATION_HPP_
#define JSONINFER_REPRESENTATION_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jsoninfer/compound_constraints.hpp"

namespace jsoninfer {

struct ConsRepr;

// A concrete type representation: a reference by name, an application of a
// named head to arguments, or a sum of constructors.
struct TypeRepr {
  enum class Kind { Ref, App, Adt };

  Kind kind = Kind::Ref;
  std::string name;                    // Ref target or App head
  std::vector<TypeRepr> args;          // App arguments (non-empty)
  std::vector<ConsRepr> constructors;  // Adt constructors (non-empty)

  // For Adt nodes produced from a record constraint: the constraint it came
  // from, so similar records can be merged later. Not part of equality.
  std::shared_ptr<const RecordConstraint> record_source;

  static TypeRepr ref(std::string n);
  static TypeRepr app(std::string head, std::vector<TypeRepr> arguments);
  static TypeRepr adt(std::vector<ConsRepr> cons);
};

// Constructor names and field names may be empty until naming runs.
struct ConsRepr {
  std::string name;
  std::vector<std::pair<std::string, TypeRepr>> args;
};

bool operator==(const TypeRepr& a, const TypeRepr& b);
bool operator==(const ConsRepr& a, const ConsRepr& b);

struct ReprEnv {
  std::string toplevel;
  std::map<std::string, TypeRepr> env;
};

struct ReprConfig {
  bool variant_split = true;
  std::size_t max_variants = 10;
  AlgebraConfig algebra;
};

// Names resolvable without a declaration, plus the application heads of the
// output grammar.
inline constexpr std::string_view kAnyValue = "AnyValue";
const std::set<std::string>& predefined_type_names();

// Identifier sanitization: non-identifier characters become '_', and names
// not starting with a letter get an "f_" prefix ("6408f5" -> "f_6408f5").
std::string sanitize_field_name(std::string_view raw);
std::string sanitize_type_name(std::string_view raw);  // capitalized variant

// Empty list of alternatives promotes to AnyValue; several alternatives fold
// right into nested Alt applications.
TypeRepr join_alts(std::vector<TypeRepr> alts);

std::vector<TypeRepr> scalar_to_reprs(PresenceConstraint bool_case);
std::vector<TypeRepr> scalar_to_reprs(NumberConstraint c);
std::vector<TypeRepr> scalar_to_reprs(const StringConstraint& c);

// Chooses between the single-constructor record (optional fields) and one
// constructor per observed key set, whichever costs less optionality.
TypeRepr variant_split(const RecordConstraint& r, const ReprConfig& cfg = {});

std::vector<TypeRepr> object_to_reprs(const ObjectConstraint& c, const ReprConfig& cfg = {});
std::vector<TypeRepr> array_to_reprs(const ArrayConstraint& c, const ReprConfig& cfg = {});

// Full representation of a union as one inline tree (constructor and field
// names of nested sums may still be empty; naming fills them).
TypeRepr to_repr(const UnionType& u, const ReprConfig& cfg = {});

// Hoists every sum in the tree into the environment under a name derived
// from its container field path, fills empty constructor/field names, and
// wraps non-record toplevels into a one-field record.
ReprEnv assign_names(const TypeRepr& tree, const std::string& root_name);

// Validation pass: every reference resolves and no unnamed hole remains.
// Inference produces AnyValue for never-observed positions by construction;
// this asserts the finished environment is closed.
struct ValidationError : Error {
  using Error::Error;
};
ReprEnv promote_empty(ReprEnv env);

struct BuiltEnv {
  ReprEnv env;
  std::map<std::string, RecordConstraint> record_sources;
};

BuiltEnv build_repr_env(const UnionType& root, const std::string& root_name,
                        const ReprConfig& cfg = {});

struct UnifyLogEntry {
  std::string from;
  std::string into;
};

// Merges record types whose label sets have Jaccard similarity strictly
// above `threshold` (transitively), re-representing merged groups under the
// lexicographically smallest name of each group.
std::vector<UnifyLogEntry> unify_similar_records(BuiltEnv& built, double threshold,
                                                 const ReprConfig& cfg = {});

}  // namespace jsoninfer

#endif  // JSONINFER_REPRESENTATION_HPP_
