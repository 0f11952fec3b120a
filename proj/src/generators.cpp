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

#include "jsoninfer/generators.hpp"

#include <array>
#include <string_view>

namespace jsoninfer {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

constexpr std::array<std::string_view, 12> kStrings = {
    "a",       "b",      "yes",     "no",
    "error",   "x1",     "x2",      "unavailable",
    "",        "2019-03-03",        "1984-05-03",
    "user@example.com",
};

constexpr std::array<std::string_view, 8> kKeys = {"a", "b", "c", "code", "uid",
                                                   "name", "size", "k1"};

}  // namespace

JsonNumber gen_json_number(Rng& rng) {
  if (chance(rng, 0.6)) {
    long long v = static_cast<long long>(pick(rng, 2001)) - 1000;
    return JsonNumber{static_cast<double>(v), true};
  }
  double v = std::uniform_real_distribution<double>(-1e6, 1e6)(rng);
  return JsonNumber{v, false};
}

std::string gen_small_string(Rng& rng) { return std::string(kStrings[pick(rng, kStrings.size())]); }

JsonValue gen_json_value(Rng& rng, int depth) {
  std::size_t top = depth > 0 ? 6 : 4;
  switch (pick(rng, top)) {
    case 0: return JsonValue(nullptr);
    case 1: return JsonValue(chance(rng, 0.5));
    case 2: return JsonValue(gen_json_number(rng));
    case 3: return JsonValue(gen_small_string(rng));
    case 4: return JsonValue(gen_json_array(rng, depth - 1));
    default: return JsonValue(gen_json_object(rng, depth - 1));
  }
}

JsonArray gen_json_array(Rng& rng, int depth) {
  JsonArray out;
  std::size_t n = pick(rng, 4);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen_json_value(rng, depth));
  return out;
}

JsonObject gen_json_object(Rng& rng, int depth) {
  JsonObject out;
  std::size_t n = pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) {
    out.insert_or_assign(std::string(kKeys[pick(rng, kKeys.size())]),
                         gen_json_value(rng, depth));
  }
  return out;
}

PresenceConstraint gen_presence(Rng& rng) {
  return chance(rng, 0.5) ? PresenceConstraint::Present : PresenceConstraint::Absent;
}

NumberConstraint gen_number_constraint(Rng& rng) {
  switch (pick(rng, 3)) {
    case 0: return NumberConstraint::Never;
    case 1: return NumberConstraint::Int;
    default: return NumberConstraint::Float;
  }
}

StringConstraint gen_string_constraint(Rng& rng, const AlgebraConfig& cfg) {
  switch (pick(rng, 5)) {
    case 0: return StringConstraint::never();
    case 1: return StringConstraint::date();
    case 2: return StringConstraint::email();
    case 3: return StringConstraint::any();
    default: {
      std::set<std::string> vs;
      std::size_t n = 1 + pick(rng, std::min<std::size_t>(4, cfg.enum_limit));
      while (vs.size() < n) vs.insert(gen_small_string(rng));
      return StringConstraint::enumeration(std::move(vs));
    }
  }
}

FreeType gen_free_type(Rng& rng) {
  if (chance(rng, 0.2)) return FreeType::full_value();
  std::set<JsonValue> vs;
  std::size_t n = pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) vs.insert(gen_json_value(rng, 1));
  return FreeType::of(std::move(vs));
}

RowConstraint gen_row_constraint(Rng& rng, const AlgebraConfig& cfg) {
  switch (pick(rng, 4)) {
    case 0: return RowConstraint::never();
    case 1: return RowConstraint::top();
    default: return row_infer(gen_json_array(rng, 1), cfg);
  }
}

ArrayConstraint gen_array_constraint(Rng& rng, const AlgebraConfig& cfg) {
  if (chance(rng, 0.2)) return ArrayConstraint{};
  ArrayConstraint out = array_infer(gen_json_array(rng, 1), cfg);
  std::size_t extra = pick(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) {
    out = merge(out, array_infer(gen_json_array(rng, 1), cfg), cfg);
  }
  if (chance(rng, 0.2)) out.row_case = RowConstraint::top();
  return out;
}

MappingConstraint gen_mapping_constraint(Rng& rng, const AlgebraConfig& cfg) {
  if (chance(rng, 0.2)) return MappingConstraint{};
  MappingConstraint out = mapping_infer(gen_json_object(rng, 1), cfg);
  std::size_t extra = pick(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) {
    out = merge(out, mapping_infer(gen_json_object(rng, 1), cfg), cfg);
  }
  if (chance(rng, 0.15)) out.key_constraint = StringConstraint::any();
  return out;
}

RecordConstraint gen_record_constraint(Rng& rng, const AlgebraConfig& cfg) {
  switch (pick(rng, 6)) {
    case 0: return RecordConstraint::bottom();
    case 1: return RecordConstraint::top();
    default: {
      RecordConstraint out = record_infer(gen_json_object(rng, 1), cfg);
      std::size_t extra = pick(rng, 3);
      for (std::size_t i = 0; i < extra; ++i) {
        out = merge(out, record_infer(gen_json_object(rng, 1), cfg), cfg);
      }
      return out;
    }
  }
}

ObjectConstraint gen_object_constraint(Rng& rng, const AlgebraConfig& cfg) {
  if (chance(rng, 0.2)) return ObjectConstraint{};
  ObjectConstraint out = object_infer(gen_json_object(rng, 1), cfg);
  std::size_t extra = pick(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) {
    out = merge(out, object_infer(gen_json_object(rng, 1), cfg), cfg);
  }
  if (chance(rng, 0.15)) out.record_case = RecordConstraint::top();
  return out;
}

UnionType gen_union_type(Rng& rng, const AlgebraConfig& cfg) {
  UnionType out;
  std::size_t n = pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) {
    out = merge(out, union_infer(gen_json_value(rng, 2), cfg), cfg);
  }
  if (chance(rng, 0.1) && out.array_case.observed) {
    out.array_case.row_case = RowConstraint::top();
  }
  if (chance(rng, 0.1) && out.object_case.observed) {
    out.object_case.record_case = RecordConstraint::top();
  }
  return out;
}

Counted<NumberConstraint> gen_counted_number(Rng& rng) {
  return Counted<NumberConstraint>{pick(rng, 8), gen_number_constraint(rng)};
}

PresenceConstraint gen_beyond_presence() { return PresenceConstraint::Present; }
NumberConstraint gen_beyond_number() { return NumberConstraint::Float; }
StringConstraint gen_beyond_string() { return StringConstraint::any(); }
FreeType gen_beyond_free() { return FreeType::full_value(); }
RowConstraint gen_beyond_row() { return RowConstraint::top(); }
RecordConstraint gen_beyond_record() { return RecordConstraint::top(); }

MappingConstraint gen_beyond_mapping(int depth) {
  MappingConstraint out;
  out.observed = true;
  out.key_constraint = StringConstraint::any();
  if (depth > 0) *out.value_constraint = gen_beyond_union(depth - 1);
  return out;
}

ArrayConstraint gen_beyond_array(int depth) {
  ArrayConstraint out;
  out.observed = true;
  out.row_case = RowConstraint::top();
  if (depth > 0) *out.element_case = gen_beyond_union(depth - 1);
  return out;
}

ObjectConstraint gen_beyond_object(int depth) {
  ObjectConstraint out;
  out.observed = true;
  out.mapping_case = gen_beyond_mapping(depth);
  out.record_case = RecordConstraint::top();
  return out;
}

UnionType gen_beyond_union(int depth) {
  UnionType out;
  out.null_case = PresenceConstraint::Present;
  out.bool_case = PresenceConstraint::Present;
  out.number_case = NumberConstraint::Float;
  out.string_case = StringConstraint::any();
  out.array_case = gen_beyond_array(depth);
  out.object_case = gen_beyond_object(depth);
  return out;
}

Counted<NumberConstraint> gen_beyond_counted_number(Rng& rng) {
  return Counted<NumberConstraint>{pick(rng, 8), NumberConstraint::Float};
}

}  // namespace jsoninfer
