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

#ifndef JSONINFER_TESTS_LAW_HARNESS_HPP_
#define JSONINFER_TESTS_LAW_HARNESS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "jsoninfer/generators.hpp"

namespace lawtest {

using jsoninfer::AlgebraConfig;
using jsoninfer::Rng;
using jsoninfer::TyCost;

struct LawReport {
  std::string instance;
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// One constraint instance with its typing relation, wired up as callables so
// the same battery runs against every instance.
template <class T, class V>
struct LawInstance {
  std::string name;
  std::function<T(Rng&)> gen;
  std::function<T(Rng&)> gen_beyond;  // empty when the beyond set is empty
  std::function<V(Rng&)> gen_term;
  std::function<T(const V&)> infer;
  std::function<bool(const T&, const V&)> check;
  std::function<T(const T&, const T&)> merge;
  std::function<bool(const T&, const T&)> equal;
  std::function<bool(const T&)> beyond;
  std::function<TyCost(const T&)> cost;
  bool idempotent = true;
};

template <class T, class V>
LawReport run_laws(const LawInstance<T, V>& inst, int cases = 200, std::uint64_t seed = 1) {
  LawReport report;
  report.instance = inst.name;
  Rng rng(seed);
  auto expect = [&](bool ok, const char* law) {
    ++report.checked;
    if (!ok && report.failures.size() < 8) {
      report.failures.push_back(inst.name + ": " + law);
    }
  };

  for (int i = 0; i < cases; ++i) {
    T a = inst.gen(rng);
    T b = inst.gen(rng);
    T c = inst.gen(rng);
    V v = inst.gen_term(rng);
    T neutral{};

    expect(inst.equal(inst.merge(a, inst.merge(b, c)), inst.merge(inst.merge(a, b), c)),
           "semigroup associativity");
    expect(inst.equal(inst.merge(a, b), inst.merge(b, a)), "commutativity");
    expect(inst.equal(inst.merge(neutral, a), a), "left identity");
    expect(inst.equal(inst.merge(a, neutral), a), "right identity");

    expect(!inst.check(neutral, v), "mempty contains no terms");
    T iv = inst.infer(v);
    expect(inst.check(iv, v), "inferred type contains its term");
    expect(inst.check(inst.merge(iv, a), v), "left fusion keeps terms");
    expect(inst.check(inst.merge(a, iv), v), "right fusion keeps terms");
    if (inst.check(a, v)) {
      expect(inst.check(inst.merge(a, b), v), "fusion keeps checked terms");
    }

    if (inst.gen_beyond) {
      T g = inst.gen_beyond(rng);
      expect(inst.beyond(g), "generated values are beyond");
      expect(inst.check(g, v), "beyond contains all terms");
      expect(inst.beyond(inst.merge(g, a)), "beyond closed under merge (left)");
      expect(inst.beyond(inst.merge(a, g)), "beyond closed under merge (right)");
    }

    if (inst.idempotent) {
      expect(inst.equal(inst.merge(a, a), a), "idempotence");
    }
    expect(inst.cost(neutral) == TyCost(0), "neutral costs zero");
  }
  return report;
}

// The eleven instances of the battery, ready to run. `PresenceNull` and
// `PresenceBool` differ only in the term type.
std::vector<LawReport> run_all_law_suites(int cases = 200, std::uint64_t seed = 20260810);

}  // namespace lawtest

#endif  // JSONINFER_TESTS_LAW_HARNESS_HPP_
