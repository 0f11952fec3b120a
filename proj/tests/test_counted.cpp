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
#include "jsoninfer/counted.hpp"
#include "jsoninfer/generators.hpp"

using namespace jsoninfer;

using CountedNum = Counted<NumberConstraint>;

TEST_CASE("counted merge adds counts and merges constraints") {
  CountedNum one{1, NumberConstraint::Int};
  CountedNum two = merge(one, one);
  CHECK(two.count == 2);
  CHECK(two.constraint == NumberConstraint::Int);
  // Hence merge is not idempotent: the counterexample.
  CHECK(two != one);

  CountedNum neutral{};
  CHECK(merge(neutral, one) == one);
  CHECK(merge(one, neutral) == one);

  CountedNum widened = merge(one, CountedNum{3, NumberConstraint::Float});
  CHECK(widened.count == 4);
  CHECK(widened.constraint == NumberConstraint::Float);
}

TEST_CASE("counts saturate instead of overflowing") {
  CountedNum huge{~std::uint64_t{0}, NumberConstraint::Int};
  CountedNum sum = merge(huge, CountedNum{5, NumberConstraint::Int});
  CHECK(sum.count == ~std::uint64_t{0});
}

TEST_CASE("a fold over n samples counts n, in any order") {
  Rng rng(71);
  for (int round = 0; round < 100; ++round) {
    std::vector<JsonNumber> samples;
    std::size_t n = rng() % 10;
    for (std::size_t i = 0; i < n; ++i) samples.push_back(gen_json_number(rng));

    auto fold = [](const std::vector<JsonNumber>& xs) {
      CountedNum acc{};
      for (const auto& x : xs) acc = merge(acc, CountedNum{1, number_infer(x)});
      return acc;
    };

    CountedNum base = fold(samples);
    CHECK(base.count == n);
    std::shuffle(samples.begin(), samples.end(), rng);
    CHECK(fold(samples) == base);
  }
}

TEST_CASE("typing and beyond delegate to the wrapped constraint") {
  CountedNum never{0, NumberConstraint::Never};
  CHECK_FALSE(check(never, JsonNumber{1, true}));
  CountedNum floaty{7, NumberConstraint::Float};
  CHECK(check(floaty, JsonNumber{0.5, false}));
  CHECK(is_beyond(floaty));
  CHECK_FALSE(is_beyond(CountedNum{7, NumberConstraint::Int}));
  CHECK(type_cost(floaty) == TyCost(1));
}
