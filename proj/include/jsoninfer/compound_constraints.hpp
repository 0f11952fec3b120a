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

#ifndef JSONINFER_COMPOUND_CONSTRAINTS_HPP_
#define JSONINFER_COMPOUND_CONSTRAINTS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jsoninfer/scalar_constraints.hpp"
#include "jsoninfer/typelike.hpp"

namespace jsoninfer {

namespace detail {

// Value-semantic heap box; breaks the UnionType recursion. An empty box
// stands for a default-constructed value, so default construction does not
// recurse.
template <class T>
class Box {
 public:
  Box() = default;
  Box(T v) : p_(std::make_unique<T>(std::move(v))) {}
  Box(const Box& o) : p_(o.p_ ? std::make_unique<T>(*o.p_) : nullptr) {}
  Box(Box&& o) noexcept = default;
  Box& operator=(const Box& o) {
    if (this != &o) p_ = o.p_ ? std::make_unique<T>(*o.p_) : nullptr;
    return *this;
  }
  Box& operator=(Box&& o) noexcept = default;

  T& operator*() {
    if (!p_) p_ = std::make_unique<T>();
    return *p_;
  }
  const T& operator*() const { return p_ ? *p_ : default_instance(); }
  T* operator->() { return &**this; }
  const T* operator->() const { return &**this; }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  static const T& default_instance() {
    static const T instance{};
    return instance;
  }

  std::unique_ptr<T> p_;
};

}  // namespace detail

struct UnionType;

// Fixed-arity per-column typing of arrays. Uneven column counts escape to
// Top; Never is the neutral element.
struct RowConstraint {
  enum class Kind : std::uint8_t { Never, Columns, Top };

  Kind kind = Kind::Never;
  std::vector<UnionType> columns;  // meaningful iff kind == Columns

  static RowConstraint never() { return {}; }
  static RowConstraint top() { return {Kind::Top, {}}; }
  static RowConstraint of(std::vector<UnionType> cols) {
    return {Kind::Columns, std::move(cols)};
  }
};

// Tracks both array representations at once: the per-column row and the
// merged element type.
struct ArrayConstraint {
  bool observed = false;  // false = neutral
  RowConstraint row_case;
  detail::Box<UnionType> element_case;
};

// Uniform key/value typing of an object.
struct MappingConstraint {
  bool observed = false;  // false = neutral
  StringConstraint key_constraint;
  detail::Box<UnionType> value_constraint;
};

using KeySet = std::vector<std::string>;                    // sorted, unique
using KeysetEvidence = std::map<KeySet, std::uint64_t>;     // observation counts

// Fixed-field typing of an object, with the multiset of observed key sets as
// evidence for optionality and variant decisions.
struct RecordConstraint {
  enum class Kind : std::uint8_t { Bottom, Data, Top };
  using FieldVec = std::vector<std::pair<std::string, UnionType>>;  // sorted by key

  Kind kind = Kind::Bottom;
  FieldVec fields;
  KeysetEvidence evidence;

  static RecordConstraint bottom() { return {}; }
  static RecordConstraint top() { return {Kind::Top, {}, {}}; }

  const UnionType* find_field(const std::string& key) const;
};

// Gathers both object representations simultaneously; a value must satisfy
// both, and the cheaper one is chosen at representation time.
struct ObjectConstraint {
  bool observed = false;  // false = neutral
  MappingConstraint mapping_case;
  RecordConstraint record_case;
};

// Product of per-constructor constraints; each component gathers evidence
// independently of the others.
struct UnionType {
  PresenceConstraint null_case = PresenceConstraint::Absent;
  PresenceConstraint bool_case = PresenceConstraint::Absent;
  NumberConstraint number_case = NumberConstraint::Never;
  StringConstraint string_case;
  ArrayConstraint array_case;
  ObjectConstraint object_case;
};

// Equality is structural except that keyset evidence compares by the set of
// observed key sets, not their counts; counts are annotation.
bool operator==(const RowConstraint& a, const RowConstraint& b);
bool operator==(const ArrayConstraint& a, const ArrayConstraint& b);
bool operator==(const MappingConstraint& a, const MappingConstraint& b);
bool operator==(const RecordConstraint& a, const RecordConstraint& b);
bool operator==(const ObjectConstraint& a, const ObjectConstraint& b);
bool operator==(const UnionType& a, const UnionType& b);

bool evidence_exact_equal(const RecordConstraint& a, const RecordConstraint& b);

RowConstraint merge(const RowConstraint& a, const RowConstraint& b, const AlgebraConfig& cfg = {});
ArrayConstraint merge(const ArrayConstraint& a, const ArrayConstraint& b,
                      const AlgebraConfig& cfg = {});
MappingConstraint merge(const MappingConstraint& a, const MappingConstraint& b,
                        const AlgebraConfig& cfg = {});
RecordConstraint merge(const RecordConstraint& a, const RecordConstraint& b,
                       const AlgebraConfig& cfg = {});
ObjectConstraint merge(const ObjectConstraint& a, const ObjectConstraint& b,
                       const AlgebraConfig& cfg = {});
UnionType merge(const UnionType& a, const UnionType& b, const AlgebraConfig& cfg = {});

// In-place variant reusing the accumulator's storage; equal to
// acc = merge(acc, inc). This is the hot path of the fold kernels.
void merge_into(UnionType& acc, const UnionType& inc, const AlgebraConfig& cfg = {});

RowConstraint row_infer(const JsonArray& elements, const AlgebraConfig& cfg = {});
ArrayConstraint array_infer(const JsonArray& elements, const AlgebraConfig& cfg = {});
MappingConstraint mapping_infer(const JsonObject& o, const AlgebraConfig& cfg = {});
RecordConstraint record_infer(const JsonObject& o, const AlgebraConfig& cfg = {});
ObjectConstraint object_infer(const JsonObject& o, const AlgebraConfig& cfg = {});
UnionType union_infer(const JsonValue& v, const AlgebraConfig& cfg = {});

bool check(const RowConstraint& c, const JsonArray& a);
bool check(const ArrayConstraint& c, const JsonArray& a);
bool check(const MappingConstraint& c, const JsonObject& o);
bool check(const RecordConstraint& c, const JsonObject& o);
bool check(const ObjectConstraint& c, const JsonObject& o);
bool check(const UnionType& c, const JsonValue& v);

bool is_beyond(const RowConstraint& c);
bool is_beyond(const ArrayConstraint& c);
bool is_beyond(const MappingConstraint& c);
bool is_beyond(const RecordConstraint& c);
bool is_beyond(const ObjectConstraint& c);
bool is_beyond(const UnionType& c);

TyCost type_cost(const RowConstraint& c);
TyCost type_cost(const ArrayConstraint& c);
TyCost type_cost(const MappingConstraint& c);
TyCost type_cost(const RecordConstraint& c);
TyCost type_cost(const ObjectConstraint& c);
TyCost type_cost(const UnionType& c);

// A union is nullable when null was observed or nothing was observed at all.
bool is_nullable(const UnionType& u);

// Number of non-null alternatives the union keeps open.
std::size_t active_alternatives(const UnionType& u);

// Whether field `key` may be absent: its union admits null, is neutral, or
// the key is missing from at least one observed key set.
bool field_is_optional(const RecordConstraint& r, const std::string& key);

UnionType fold_union(const std::vector<JsonValue>& samples, const AlgebraConfig& cfg = {});

}  // namespace jsoninfer

#endif  // JSONINFER_COMPOUND_CONSTRAINTS_HPP_
