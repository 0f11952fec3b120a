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

#include "jsoninfer/compound_constraints.hpp"

#include <algorithm>

namespace jsoninfer {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return ~std::uint64_t{0};
  return out;
}

bool keysets_equal(const KeysetEvidence& a, const KeysetEvidence& b) {
  if (a.size() != b.size()) return false;
  auto it = b.begin();
  for (const auto& [keys, count] : a) {
    (void)count;
    if (keys != it->first) return false;
    ++it;
  }
  return true;
}

}  // namespace

const UnionType* RecordConstraint::find_field(const std::string& key) const {
  auto it = std::lower_bound(fields.begin(), fields.end(), key,
                             [](const auto& p, const std::string& k) { return p.first < k; });
  if (it == fields.end() || it->first != key) return nullptr;
  return &it->second;
}

bool operator==(const RowConstraint& a, const RowConstraint& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != RowConstraint::Kind::Columns) return true;
  return a.columns == b.columns;
}

bool operator==(const ArrayConstraint& a, const ArrayConstraint& b) {
  if (a.observed != b.observed) return false;
  if (!a.observed) return true;
  return a.row_case == b.row_case && *a.element_case == *b.element_case;
}

bool operator==(const MappingConstraint& a, const MappingConstraint& b) {
  if (a.observed != b.observed) return false;
  if (!a.observed) return true;
  return a.key_constraint == b.key_constraint && *a.value_constraint == *b.value_constraint;
}

bool operator==(const RecordConstraint& a, const RecordConstraint& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != RecordConstraint::Kind::Data) return true;
  return a.fields == b.fields && keysets_equal(a.evidence, b.evidence);
}

bool operator==(const ObjectConstraint& a, const ObjectConstraint& b) {
  if (a.observed != b.observed) return false;
  if (!a.observed) return true;
  return a.mapping_case == b.mapping_case && a.record_case == b.record_case;
}

bool operator==(const UnionType& a, const UnionType& b) {
  return a.null_case == b.null_case && a.bool_case == b.bool_case &&
         a.number_case == b.number_case && a.string_case == b.string_case &&
         a.array_case == b.array_case && a.object_case == b.object_case;
}

bool evidence_exact_equal(const RecordConstraint& a, const RecordConstraint& b) {
  return a == b && a.evidence == b.evidence;
}

RowConstraint merge(const RowConstraint& a, const RowConstraint& b, const AlgebraConfig& cfg) {
  using Kind = RowConstraint::Kind;
  if (a.kind == Kind::Never) return b;
  if (b.kind == Kind::Never) return a;
  if (a.kind == Kind::Top || b.kind == Kind::Top) return RowConstraint::top();
  if (a.columns.size() != b.columns.size()) return RowConstraint::top();
  std::vector<UnionType> cols;
  cols.reserve(a.columns.size());
  for (std::size_t i = 0; i < a.columns.size(); ++i) {
    cols.push_back(merge(a.columns[i], b.columns[i], cfg));
  }
  return RowConstraint::of(std::move(cols));
}

ArrayConstraint merge(const ArrayConstraint& a, const ArrayConstraint& b,
                      const AlgebraConfig& cfg) {
  if (!a.observed) return b;
  if (!b.observed) return a;
  ArrayConstraint out;
  out.observed = true;
  out.row_case = merge(a.row_case, b.row_case, cfg);
  *out.element_case = merge(*a.element_case, *b.element_case, cfg);
  return out;
}

MappingConstraint merge(const MappingConstraint& a, const MappingConstraint& b,
                        const AlgebraConfig& cfg) {
  if (!a.observed) return b;
  if (!b.observed) return a;
  MappingConstraint out;
  out.observed = true;
  out.key_constraint = merge(a.key_constraint, b.key_constraint, cfg);
  *out.value_constraint = merge(*a.value_constraint, *b.value_constraint, cfg);
  return out;
}

RecordConstraint merge(const RecordConstraint& a, const RecordConstraint& b,
                       const AlgebraConfig& cfg) {
  using Kind = RecordConstraint::Kind;
  if (a.kind == Kind::Bottom) return b;
  if (b.kind == Kind::Bottom) return a;
  if (a.kind == Kind::Top || b.kind == Kind::Top) return RecordConstraint::top();

  RecordConstraint out;
  out.kind = Kind::Data;
  auto ia = a.fields.begin();
  auto ib = b.fields.begin();
  while (ia != a.fields.end() || ib != b.fields.end()) {
    if (ib == b.fields.end() || (ia != a.fields.end() && ia->first < ib->first)) {
      out.fields.push_back(*ia++);
    } else if (ia == a.fields.end() || ib->first < ia->first) {
      out.fields.push_back(*ib++);
    } else {
      out.fields.emplace_back(ia->first, merge(ia->second, ib->second, cfg));
      ++ia;
      ++ib;
    }
  }
  out.evidence = a.evidence;
  for (const auto& [keys, count] : b.evidence) {
    auto [it, inserted] = out.evidence.emplace(keys, count);
    if (!inserted) it->second = sat_add(it->second, count);
  }
  return out;
}

ObjectConstraint merge(const ObjectConstraint& a, const ObjectConstraint& b,
                       const AlgebraConfig& cfg) {
  if (!a.observed) return b;
  if (!b.observed) return a;
  ObjectConstraint out;
  out.observed = true;
  out.mapping_case = merge(a.mapping_case, b.mapping_case, cfg);
  out.record_case = merge(a.record_case, b.record_case, cfg);
  return out;
}

UnionType merge(const UnionType& a, const UnionType& b, const AlgebraConfig& cfg) {
  UnionType out;
  out.null_case = merge(a.null_case, b.null_case, cfg);
  out.bool_case = merge(a.bool_case, b.bool_case, cfg);
  out.number_case = merge(a.number_case, b.number_case, cfg);
  out.string_case = merge(a.string_case, b.string_case, cfg);
  out.array_case = merge(a.array_case, b.array_case, cfg);
  out.object_case = merge(a.object_case, b.object_case, cfg);
  return out;
}

namespace {

void merge_into(StringConstraint& acc, const StringConstraint& inc, const AlgebraConfig& cfg) {
  using Kind = StringConstraint::Kind;
  if (inc.kind == Kind::Never) return;
  if (acc.kind == Kind::Never) {
    acc = inc;
    return;
  }
  if (acc.kind == Kind::Enum && inc.kind == Kind::Enum) {
    acc.values.insert(inc.values.begin(), inc.values.end());
    if (acc.values.size() > cfg.enum_limit) acc = StringConstraint::any();
    return;
  }
  if (acc.kind != inc.kind || acc.kind == Kind::Any) acc = StringConstraint::any();
}

void merge_into(RowConstraint& acc, const RowConstraint& inc, const AlgebraConfig& cfg) {
  using Kind = RowConstraint::Kind;
  if (inc.kind == Kind::Never) return;
  if (acc.kind == Kind::Never) {
    acc = inc;
    return;
  }
  if (acc.kind == Kind::Top || inc.kind == Kind::Top ||
      acc.columns.size() != inc.columns.size()) {
    acc = RowConstraint::top();
    return;
  }
  for (std::size_t i = 0; i < acc.columns.size(); ++i) {
    merge_into(acc.columns[i], inc.columns[i], cfg);
  }
}

void merge_into(ArrayConstraint& acc, const ArrayConstraint& inc, const AlgebraConfig& cfg) {
  if (!inc.observed) return;
  if (!acc.observed) {
    acc = inc;
    return;
  }
  merge_into(acc.row_case, inc.row_case, cfg);
  merge_into(*acc.element_case, *inc.element_case, cfg);
}

void merge_into(MappingConstraint& acc, const MappingConstraint& inc, const AlgebraConfig& cfg) {
  if (!inc.observed) return;
  if (!acc.observed) {
    acc = inc;
    return;
  }
  merge_into(acc.key_constraint, inc.key_constraint, cfg);
  merge_into(*acc.value_constraint, *inc.value_constraint, cfg);
}

void merge_into(RecordConstraint& acc, const RecordConstraint& inc, const AlgebraConfig& cfg) {
  using Kind = RecordConstraint::Kind;
  if (inc.kind == Kind::Bottom) return;
  if (acc.kind == Kind::Bottom) {
    acc = inc;
    return;
  }
  if (acc.kind == Kind::Top || inc.kind == Kind::Top) {
    acc = RecordConstraint::top();
    return;
  }
  RecordConstraint::FieldVec fields;
  fields.reserve(acc.fields.size() + inc.fields.size());
  auto ia = acc.fields.begin();
  auto ib = inc.fields.begin();
  while (ia != acc.fields.end() || ib != inc.fields.end()) {
    if (ib == inc.fields.end() || (ia != acc.fields.end() && ia->first < ib->first)) {
      fields.push_back(std::move(*ia++));
    } else if (ia == acc.fields.end() || ib->first < ia->first) {
      fields.push_back(*ib++);
    } else {
      merge_into(ia->second, ib->second, cfg);
      fields.push_back(std::move(*ia++));
      ++ib;
    }
  }
  acc.fields = std::move(fields);
  for (const auto& [keys, count] : inc.evidence) {
    auto [it, inserted] = acc.evidence.emplace(keys, count);
    if (!inserted) it->second = sat_add(it->second, count);
  }
}

void merge_into(ObjectConstraint& acc, const ObjectConstraint& inc, const AlgebraConfig& cfg) {
  if (!inc.observed) return;
  if (!acc.observed) {
    acc = inc;
    return;
  }
  merge_into(acc.mapping_case, inc.mapping_case, cfg);
  merge_into(acc.record_case, inc.record_case, cfg);
}

}  // namespace

void merge_into(UnionType& acc, const UnionType& inc, const AlgebraConfig& cfg) {
  if (&acc == &inc) {  // self-merge still doubles evidence counts
    UnionType copy = inc;
    merge_into(acc, copy, cfg);
    return;
  }
  acc.null_case = merge(acc.null_case, inc.null_case, cfg);
  acc.bool_case = merge(acc.bool_case, inc.bool_case, cfg);
  acc.number_case = merge(acc.number_case, inc.number_case, cfg);
  merge_into(acc.string_case, inc.string_case, cfg);
  merge_into(acc.array_case, inc.array_case, cfg);
  merge_into(acc.object_case, inc.object_case, cfg);
}

RowConstraint row_infer(const JsonArray& elements, const AlgebraConfig& cfg) {
  std::vector<UnionType> cols;
  cols.reserve(elements.size());
  for (const auto& e : elements) cols.push_back(union_infer(e, cfg));
  return RowConstraint::of(std::move(cols));
}

ArrayConstraint array_infer(const JsonArray& elements, const AlgebraConfig& cfg) {
  ArrayConstraint out;
  out.observed = true;
  out.row_case = row_infer(elements, cfg);
  UnionType elem;
  for (const auto& e : elements) elem = merge(elem, union_infer(e, cfg), cfg);
  *out.element_case = std::move(elem);
  return out;
}

MappingConstraint mapping_infer(const JsonObject& o, const AlgebraConfig& cfg) {
  MappingConstraint out;
  out.observed = true;
  for (const auto& [k, v] : o) {
    out.key_constraint = merge(out.key_constraint, string_infer(k), cfg);
    *out.value_constraint = merge(*out.value_constraint, union_infer(v, cfg), cfg);
  }
  return out;
}

RecordConstraint record_infer(const JsonObject& o, const AlgebraConfig& cfg) {
  RecordConstraint out;
  out.kind = RecordConstraint::Kind::Data;
  KeySet keys;
  keys.reserve(o.size());
  for (const auto& [k, v] : o) {
    out.fields.emplace_back(k, union_infer(v, cfg));
    keys.push_back(k);
  }
  out.evidence.emplace(std::move(keys), 1);
  return out;
}

ObjectConstraint object_infer(const JsonObject& o, const AlgebraConfig& cfg) {
  ObjectConstraint out;
  out.observed = true;
  out.mapping_case = mapping_infer(o, cfg);
  out.record_case = record_infer(o, cfg);
  return out;
}

UnionType union_infer(const JsonValue& v, const AlgebraConfig& cfg) {
  UnionType out;
  switch (v.node.index()) {
    case 0: out.null_case = presence_infer(nullptr); break;
    case 1: out.bool_case = presence_infer(v.as_bool()); break;
    case 2: out.number_case = number_infer(v.as_number()); break;
    case 3: out.string_case = string_infer(v.as_string()); break;
    case 4: out.array_case = array_infer(v.as_array(), cfg); break;
    default: out.object_case = object_infer(v.as_object(), cfg);
  }
  return out;
}

bool check(const RowConstraint& c, const JsonArray& a) {
  using Kind = RowConstraint::Kind;
  switch (c.kind) {
    case Kind::Never: return false;
    case Kind::Top: return true;
    case Kind::Columns: break;
  }
  if (c.columns.size() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!check(c.columns[i], a[i])) return false;
  }
  return true;
}

bool check(const ArrayConstraint& c, const JsonArray& a) {
  if (!c.observed) return false;
  if (!check(c.row_case, a)) return false;
  for (const auto& e : a) {
    if (!check(*c.element_case, e)) return false;
  }
  return true;
}

bool check(const MappingConstraint& c, const JsonObject& o) {
  if (!c.observed) return false;
  for (const auto& [k, v] : o) {
    if (!check(c.key_constraint, k)) return false;
    if (!check(*c.value_constraint, v)) return false;
  }
  return true;
}

bool field_is_optional(const RecordConstraint& r, const std::string& key) {
  if (const UnionType* u = r.find_field(key)) {
    if (is_nullable(*u)) return true;
  }
  for (const auto& [keys, count] : r.evidence) {
    (void)count;
    if (!std::binary_search(keys.begin(), keys.end(), key)) return true;
  }
  return false;
}

bool check(const RecordConstraint& c, const JsonObject& o) {
  using Kind = RecordConstraint::Kind;
  if (c.kind == Kind::Top) return true;
  if (c.kind == Kind::Bottom) return false;
  for (const auto& [k, v] : o) {
    const UnionType* field = c.find_field(k);
    if (field == nullptr) return false;
    if (!check(*field, v)) return false;
  }
  for (const auto& [k, field] : c.fields) {
    (void)field;
    if (o.count(k)) continue;
    if (!field_is_optional(c, k)) return false;
  }
  return true;
}

bool check(const ObjectConstraint& c, const JsonObject& o) {
  if (!c.observed) return false;
  return check(c.mapping_case, o) && check(c.record_case, o);
}

bool check(const UnionType& c, const JsonValue& v) {
  switch (v.node.index()) {
    case 0: return check(c.null_case, nullptr);
    case 1: return check(c.bool_case, v.as_bool());
    case 2: return check(c.number_case, v.as_number());
    case 3: return check(c.string_case, v.as_string());
    case 4: return check(c.array_case, v.as_array());
    default: return check(c.object_case, v.as_object());
  }
}

bool is_beyond(const RowConstraint& c) { return c.kind == RowConstraint::Kind::Top; }

bool is_beyond(const ArrayConstraint& c) { return c.observed && is_beyond(c.row_case); }

bool is_beyond(const MappingConstraint& c) {
  return c.observed && is_beyond(c.key_constraint);
}

bool is_beyond(const RecordConstraint& c) { return c.kind == RecordConstraint::Kind::Top; }

bool is_beyond(const ObjectConstraint& c) {
  return c.observed && is_beyond(c.mapping_case) && is_beyond(c.record_case);
}

bool is_beyond(const UnionType& c) {
  return is_beyond(c.null_case) && is_beyond(c.bool_case) && is_beyond(c.number_case) &&
         is_beyond(c.string_case) && is_beyond(c.array_case) && is_beyond(c.object_case);
}

TyCost type_cost(const RowConstraint& c) {
  using Kind = RowConstraint::Kind;
  if (c.kind == Kind::Never) return TyCost(0);
  if (c.kind == Kind::Top) return TyCost::infinite();
  TyCost total;
  for (const auto& col : c.columns) total += type_cost(col);
  return total;
}

TyCost type_cost(const ArrayConstraint& c) {
  if (!c.observed) return TyCost(0);
  return std::min(type_cost(c.row_case), type_cost(*c.element_case));
}

TyCost type_cost(const MappingConstraint& c) {
  if (!c.observed) return TyCost(0);
  return type_cost(c.key_constraint) + type_cost(*c.value_constraint);
}

TyCost type_cost(const RecordConstraint& c) {
  using Kind = RecordConstraint::Kind;
  if (c.kind == Kind::Bottom) return TyCost(0);
  if (c.kind == Kind::Top) return TyCost::infinite();
  TyCost total;
  for (const auto& [k, u] : c.fields) {
    (void)k;
    total += type_cost(u);
  }
  return total;
}

TyCost type_cost(const ObjectConstraint& c) {
  if (!c.observed) return TyCost(0);
  return std::min(type_cost(c.mapping_case), type_cost(c.record_case));
}

std::size_t active_alternatives(const UnionType& u) {
  std::size_t n = 0;
  if (u.bool_case != PresenceConstraint::Absent) ++n;
  if (u.number_case != NumberConstraint::Never) ++n;
  if (u.string_case.kind != StringConstraint::Kind::Never) ++n;
  if (u.array_case.observed) ++n;
  if (u.object_case.observed) ++n;
  return n;
}

TyCost type_cost(const UnionType& c) {
  TyCost total = type_cost(c.null_case) + type_cost(c.bool_case) + type_cost(c.number_case) +
                 type_cost(c.string_case) + type_cost(c.array_case) + type_cost(c.object_case);
  // Every unordered pair of open non-null alternatives needs a discriminating
  // branch; charge two units per pair.
  std::uint64_t k = active_alternatives(c);
  return total + TyCost(k <= 1 ? 0 : k * (k - 1));
}

bool is_nullable(const UnionType& u) {
  return u.null_case == PresenceConstraint::Present || u == UnionType{};
}

UnionType fold_union(const std::vector<JsonValue>& samples, const AlgebraConfig& cfg) {
  return fold_infer<UnionType>(
      samples, [&cfg](const JsonValue& v) { return union_infer(v, cfg); }, cfg);
}

}  // namespace jsoninfer
