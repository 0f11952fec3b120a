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

#include <algorithm>

#include "doctest.h"
#include "law_harness.hpp"

using namespace jsoninfer;

TEST_CASE("law battery passes for every constraint instance") {
  for (const auto& report : lawtest::run_all_law_suites()) {
    CAPTURE(report.instance);
    for (const auto& failure : report.failures) {
      FAIL_CHECK(failure);
    }
    CHECK(report.checked > 0);
  }
}

TEST_CASE("beyond generators produce the expected elements") {
  CHECK(gen_beyond_string() == StringConstraint::any());
  CHECK(gen_beyond_number() == NumberConstraint::Float);
  CHECK(gen_beyond_presence() == PresenceConstraint::Present);
  CHECK(gen_beyond_row().kind == RowConstraint::Kind::Top);
  CHECK(gen_beyond_record().kind == RecordConstraint::Kind::Top);
  CHECK(is_beyond(gen_beyond_free()));
  CHECK(is_beyond(gen_beyond_union()));  // every component beyond
  CHECK(is_beyond(gen_beyond_array()));
  CHECK(is_beyond(gen_beyond_mapping()));
  CHECK(is_beyond(gen_beyond_object()));
}

TEST_CASE("free type infer and merge") {
  JsonValue v(nullptr);
  FreeType t = free_infer(v);
  CHECK(t == FreeType::of({JsonValue(nullptr)}));
  CHECK(merge(free_infer(v), free_infer(v)) == free_infer(v));
  CHECK(free_infer(JsonValue(true)) == FreeType::of({JsonValue(true)}));
  CHECK(type_cost(FreeType::full_value()).is_infinite());
  CHECK(type_cost(FreeType::of({JsonValue(true), JsonValue(false)})) == TyCost(2));
}

TEST_CASE("fold_infer basics") {
  std::vector<JsonValue> empty;
  CHECK(fold_union(empty) == UnionType{});

  std::vector<JsonValue> one = {JsonValue::integer(5)};
  CHECK(fold_union(one) == union_infer(one[0]));
}

TEST_CASE("fold_infer is order independent") {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<JsonValue> samples;
    std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) samples.push_back(gen_json_value(rng, 2));
    UnionType base = fold_union(samples);
    for (int p = 0; p < 4; ++p) {
      std::shuffle(samples.begin(), samples.end(), rng);
      CHECK(fold_union(samples) == base);
    }
  }
}

TEST_CASE("cost addition is a commutative monoid with absorbing infinity") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    TyCost a(rng() % 1000);
    TyCost b(rng() % 1000);
    TyCost c(rng() % 1000);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + TyCost(0) == a);
    CHECK(TyCost(0) + a == a);
    CHECK((a + TyCost::infinite()).is_infinite());
    CHECK((TyCost::infinite() + a).is_infinite());
  }
}

TEST_CASE("cost never decreases while samples accumulate") {
  Rng rng(13);
  for (int round = 0; round < 120; ++round) {
    UnionType acc;
    TyCost prev = type_cost(acc);
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      acc = merge(acc, union_infer(gen_json_value(rng, 2)));
      TyCost now = type_cost(acc);
      CHECK(now >= prev);
      prev = now;
    }
  }
}

TEST_CASE("neutral cost is zero for every instance") {
  CHECK(type_cost(FreeType{}) == TyCost(0));
  CHECK(type_cost(PresenceConstraint::Absent) == TyCost(0));
  CHECK(type_cost(NumberConstraint::Never) == TyCost(0));
  CHECK(type_cost(StringConstraint{}) == TyCost(0));
  CHECK(type_cost(RowConstraint{}) == TyCost(0));
  CHECK(type_cost(ArrayConstraint{}) == TyCost(0));
  CHECK(type_cost(MappingConstraint{}) == TyCost(0));
  CHECK(type_cost(RecordConstraint{}) == TyCost(0));
  CHECK(type_cost(ObjectConstraint{}) == TyCost(0));
  CHECK(type_cost(UnionType{}) == TyCost(0));
  CHECK(type_cost(Counted<NumberConstraint>{}) == TyCost(0));
}
