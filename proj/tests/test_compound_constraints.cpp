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

#include "cost_oracle.hpp"
#include "doctest.h"
#include "jsoninfer/compound_constraints.hpp"
#include "jsoninfer/generators.hpp"
#include "jsoninfer/json_value.hpp"

using namespace jsoninfer;

namespace {

JsonObject obj_of(const char* text) { return parse_document(text).as_object(); }
JsonArray arr_of(const char* text) { return parse_document(text).as_array(); }

}  // namespace

TEST_CASE("row merge") {
  UnionType u1 = union_infer(JsonValue::integer(1));
  UnionType u2 = union_infer(JsonValue("x"));
  RowConstraint two = RowConstraint::of({u1, u2});
  RowConstraint other = RowConstraint::of({u2, u2});

  RowConstraint merged = merge(two, other);
  REQUIRE(merged.kind == RowConstraint::Kind::Columns);
  CHECK(merged.columns[0] == merge(u1, u2));
  CHECK(merged.columns[1] == u2);

  CHECK(merge(RowConstraint::of({u1}), two).kind == RowConstraint::Kind::Top);
  CHECK(merge(RowConstraint::never(), two) == two);
  CHECK(merge(two, RowConstraint::top()).kind == RowConstraint::Kind::Top);
}

TEST_CASE("array inference tracks both representations") {
  ArrayConstraint empty = array_infer({});
  REQUIRE(empty.observed);
  CHECK(empty.row_case == RowConstraint::of({}));
  CHECK(*empty.element_case == UnionType{});

  JsonArray row = arr_of("[1, \"Nick\", null]");
  ArrayConstraint c = array_infer(row);
  REQUIRE(c.row_case.kind == RowConstraint::Kind::Columns);
  REQUIRE(c.row_case.columns.size() == 3);
  CHECK(c.row_case.columns[0].number_case == NumberConstraint::Int);
  CHECK(c.row_case.columns[1].string_case.kind == StringConstraint::Kind::Enum);
  CHECK(c.row_case.columns[2].null_case == PresenceConstraint::Present);
  CHECK(c.element_case->number_case == NumberConstraint::Int);
  CHECK(c.element_case->null_case == PresenceConstraint::Present);
}

TEST_CASE("array check") {
  CHECK_FALSE(check(ArrayConstraint{}, JsonArray{}));

  JsonArray nums = arr_of("[1, 2]");
  ArrayConstraint c = array_infer(nums);
  CHECK(check(c, nums));
  CHECK_FALSE(check(c, arr_of("[\"x\", \"y\"]")));

  CHECK(check(gen_beyond_array(), arr_of("[[1], {\"a\": null}, \"s\"]")));
}

TEST_CASE("inferred arrays check their own sample") {
  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    JsonArray a = gen_json_array(rng, 2);
    ArrayConstraint c = array_infer(a);
    CHECK(check(c, a));
    // Both representations individually accept the observed array.
    CHECK(check(c.row_case, a));
    bool elements_ok = true;
    for (const auto& e : a) elements_ok = elements_ok && check(*c.element_case, e);
    CHECK(elements_ok);
  }
}

TEST_CASE("record inference and the empty object") {
  RecordConstraint empty = record_infer(obj_of("{}"));
  REQUIRE(empty.kind == RecordConstraint::Kind::Data);
  CHECK(empty.fields.empty());
  REQUIRE(empty.evidence.size() == 1);
  CHECK(empty.evidence.count(KeySet{}) == 1);

  RecordConstraint ab = record_infer(obj_of("{\"a\": \"b\"}"));
  REQUIRE(ab.fields.size() == 1);
  CHECK(ab.fields[0].first == "a");
  CHECK(ab.fields[0].second.string_case.kind == StringConstraint::Kind::Enum);
}

TEST_CASE("merged record accepts both the full and the empty object") {
  RecordConstraint t = merge(record_infer(obj_of("{\"a\": \"b\"}")), record_infer(obj_of("{}")));
  CHECK(check(t, obj_of("{\"a\": \"b\"}")));
  CHECK(check(t, obj_of("{}")));
}

TEST_CASE("record check") {
  RecordConstraint fields_a = record_infer(obj_of("{\"a\": \"b\"}"));
  CHECK(check(fields_a, obj_of("{\"a\": \"b\"}")));
  // Unknown keys are rejected.
  CHECK_FALSE(check(fields_a, obj_of("{\"a\": \"b\", \"z\": 1}")));
  // A nullable field may be absent.
  RecordConstraint nullable =
      merge(record_infer(obj_of("{\"a\": \"b\"}")), record_infer(obj_of("{\"a\": null}")));
  CHECK(check(nullable, obj_of("{}")));

  CHECK(check(RecordConstraint::top(), obj_of("{\"anything\": 1}")));
  CHECK_FALSE(check(RecordConstraint::bottom(), obj_of("{}")));
}

TEST_CASE("mapping inference") {
  MappingConstraint empty = mapping_infer(obj_of("{}"));
  REQUIRE(empty.observed);
  CHECK(empty.key_constraint == StringConstraint::never());
  CHECK(*empty.value_constraint == UnionType{});
  CHECK(check(empty, obj_of("{}")));
  CHECK_FALSE(check(empty, obj_of("{\"a\": 1}")));
  CHECK_FALSE(check(MappingConstraint{}, obj_of("{}")));

  JsonObject blocks = obj_of(
      "{\"6408f5\": {\"size\": 1, \"height\": 2, \"difficulty\": 0.5, \"previous\": \"x\"},"
      " \"54fced\": {\"size\": 3, \"height\": 4, \"difficulty\": 0.7, \"previous\": \"y\"},"
      " \"6c9589\": {\"size\": 5, \"height\": 6, \"difficulty\": 0.9, \"previous\": \"z\"}}");
  MappingConstraint m = mapping_infer(blocks);
  CHECK(m.key_constraint ==
        StringConstraint::enumeration({"6408f5", "54fced", "6c9589"}));
  CHECK(m.value_constraint->object_case.observed);
}

TEST_CASE("inferred mappings check their own sample") {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    JsonObject o = gen_json_object(rng, 2);
    CHECK(check(mapping_infer(o), o));
  }
}

TEST_CASE("object costs for the three-key block map") {
  JsonObject three = obj_of(
      "{\"6408f5\": {\"size\": 969709, \"height\": 510599,"
      "  \"difficulty\": 866429.732, \"previous\": \"54fced\"},"
      " \"54fced\": {\"size\": 991394, \"height\": 510598,"
      "  \"difficulty\": 866429.823, \"previous\": \"6c9589\"},"
      " \"6c9589\": {\"size\": 990527, \"height\": 510597,"
      "  \"difficulty\": 866429.931, \"previous\": \"51a0cb\"}}");
  ObjectConstraint c3 = object_infer(three);
  CHECK(oracle::cost(c3.record_case) == 12);
  CHECK(oracle::cost(c3.mapping_case) == 5);
  CHECK(type_cost(c3.record_case) == TyCost(12));
  CHECK(type_cost(c3.mapping_case) == TyCost(5));
  CHECK(type_cost(c3) == TyCost(5));  // the mapping representation wins

  JsonObject one = obj_of(
      "{\"6408f5\": {\"size\": 969709, \"height\": 510599,"
      "  \"difficulty\": 866429.732, \"previous\": \"54fced\"}}");
  ObjectConstraint c1 = object_infer(one);
  CHECK(oracle::cost(c1.record_case) == 4);
  CHECK(oracle::cost(c1.mapping_case) == 5);
  CHECK(type_cost(c1.record_case) == TyCost(4));
  CHECK(type_cost(c1.mapping_case) == TyCost(5));
  CHECK(type_cost(c1) == TyCost(4));  // the record representation wins

  CHECK(type_cost(ObjectConstraint{}) == TyCost(0));
}

TEST_CASE("implementation costs agree with the oracle") {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    UnionType u = gen_union_type(rng);
    CHECK(oracle::matches(oracle::cost(u), type_cost(u)));
  }
}

TEST_CASE("union inference dispatches on the constructor") {
  UnionType null_u = union_infer(JsonValue(nullptr));
  CHECK(null_u.null_case == PresenceConstraint::Present);
  CHECK(null_u.bool_case == PresenceConstraint::Absent);

  CHECK_FALSE(check(union_infer(JsonValue("x")), JsonValue::integer(1)));
  CHECK(type_cost(UnionType{}) == TyCost(0));
  CHECK(type_cost(union_infer(JsonValue::integer(5))) == TyCost(1));
}

TEST_CASE("dispatch soundness for values of different constructors") {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    JsonValue v = gen_json_value(rng, 2);
    JsonValue w = gen_json_value(rng, 2);
    if (v.node.index() == w.node.index()) continue;
    CHECK_FALSE(check(union_infer(v), w));
  }
}

TEST_CASE("an object constraint is an intersection of its two cases") {
  Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    JsonObject o = gen_json_object(rng, 2);
    ObjectConstraint c = object_infer(o);
    CHECK(check(c, o));

    ObjectConstraint merged = merge(c, gen_object_constraint(rng));
    JsonObject probe = gen_json_object(rng, 2);
    if (check(merged, probe)) {
      CHECK(check(merged.mapping_case, probe));
      CHECK(check(merged.record_case, probe));
    }
  }
}

TEST_CASE("record equality ignores evidence counts but not key sets") {
  RecordConstraint a = record_infer(obj_of("{\"x\": 1}"));
  RecordConstraint doubled = merge(a, a);
  CHECK(a == doubled);
  CHECK_FALSE(evidence_exact_equal(a, doubled));

  RecordConstraint b = merge(a, record_infer(obj_of("{}")));
  CHECK_FALSE(a == b);  // different key-set evidence
}
